"""Regions, defects, halves: construction invariants and serialization."""

import pytest

from hexcount import geometry as g
from hexcount.geometry import HexSpec, UnitTriangle, down, up


def even_specs(max_n=4, max_m=3):
    for n in range(1, max_n + 1):
        for m in range(1, max_m + 1):
            for s in range(0, n + 1):
                yield HexSpec(n, 2 * m, s)


def odd_specs(max_n=4, max_m=3):
    for n in range(1, max_n + 1):
        for m in range(1, max_m + 1):
            for s in range(1, n + 1):
                yield HexSpec(n, 2 * m + 1, s)


def test_triangle_adjacency_is_symmetric_and_three_way():
    for t in (up(0, 0), down(2, -1), up(-3, 5)):
        nbs = t.neighbors()
        assert len(set(nbs)) == 3
        for nb in nbs:
            assert t in nb.neighbors()


def test_adjacent_triangles_share_exactly_two_corners():
    t = up(1, 2)
    for nb in t.neighbors():
        assert len(set(t.corners()) & set(nb.corners())) == 2


def test_build_hexagon_counts():
    assert len(g.build_hexagon(1, 1, 1)) == 6
    region = g.build_hexagon(2, 2, 2)
    assert len(region) == 24
    assert region.up_count() == region.down_count() == 12
    assert len(g.build_hexagon(4, 6, 4)) == 128
    for a, b, c in [(1, 2, 3), (3, 1, 4), (2, 5, 2)]:
        assert len(g.build_hexagon(a, b, c)) == 2 * (a * b + b * c + c * a)


def test_build_hexagon_rejects_nonpositive_sides():
    with pytest.raises(ValueError):
        g.build_hexagon(0, 1, 1)
    with pytest.raises(ValueError):
        g.build_hexagon(2, -1, 2)


def test_hexspec_validation():
    with pytest.raises(ValueError):
        HexSpec(3, 4, 4)  # even: s <= n
    with pytest.raises(ValueError):
        HexSpec(3, 5, 0)  # odd: s >= 1
    with pytest.raises(ValueError):
        HexSpec(0, 4, 0)
    with pytest.raises(ValueError):
        HexSpec(3, 0, 1)
    HexSpec(3, 1, 2)  # odd cut side of length one is a valid hexagon


def test_defect_region_size_and_balance():
    for spec in list(even_specs()) + list(odd_specs()):
        region = g.remove_axis_defect(spec)
        full = 2 * (spec.n * spec.n + 2 * spec.n * spec.N)
        assert len(region) == full - 2
        assert region.is_balanced()


def test_defect_region_example_sizes():
    assert len(g.remove_axis_defect(HexSpec(1, 2, 0))) == 10 - 2
    assert len(g.remove_axis_defect(HexSpec(3, 4, 2))) == 66 - 2
    assert len(g.remove_axis_defect(HexSpec(3, 5, 2))) == 78 - 2


def test_defect_cells_share_the_designated_axis_vertex():
    for spec in list(even_specs()) + list(odd_specs()):
        a, b = sorted(g.defect_cells(spec))
        shared = set(a.corners()) & set(b.corners())
        verts = g.axis_vertices(spec)
        pos = spec.s if spec.is_even else spec.s - 1
        pos = min(max(pos, 0), len(verts) - 1)
        assert verts[pos] in shared


def test_interior_defect_cells_straddle_the_axis():
    # interior bowties are fixed by the axis reflection, cell by cell
    for spec in list(even_specs()) + list(odd_specs()):
        interior = (not spec.is_even) or (1 <= spec.s <= spec.n - 1)
        cells = g.defect_cells(spec)
        fixed = all(g.reflect_axis(spec, t) == t for t in cells)
        assert fixed == interior


def test_axis_vertex_count():
    assert len(g.axis_vertices(HexSpec(3, 4, 1))) == 4   # includes both side midpoints
    assert len(g.axis_vertices(HexSpec(3, 5, 1))) == 3   # all interior


def test_axis_row_has_2n_minus_2_triangles():
    for spec in list(even_specs()) + list(odd_specs()):
        if spec.is_even and spec.s in (0, spec.n):
            continue  # boundary surrogate removes one axis and one border cell
        region = g.remove_axis_defect(spec)
        assert len(g.axis_triangles(spec, region)) == 2 * (spec.n - 1)


def test_split_sizes_for_the_running_example():
    upper, lower = g.split_halves(HexSpec(3, 4, 2))
    assert len(upper) == 30 and len(lower) == 34
    assert len(g.split_halves(HexSpec(3, 5, 2))[0]) == 36


def test_split_halves_reglue_exactly():
    for spec in list(even_specs()) + list(odd_specs()):
        region = g.remove_axis_defect(spec)
        upper, lower = g.split_halves(spec)
        assert upper.triangles | lower.triangles == region.triangles
        assert not (upper.triangles & lower.triangles)
        assert not upper.half_weight_edges


def test_upper_half_is_the_region_above_the_axis_row():
    for spec in list(even_specs(3, 2)) + list(odd_specs(3, 2)):
        region = g.remove_axis_defect(spec)
        upper, lower = g.split_halves(spec)
        axis = set(g.axis_triangles(spec, region))
        assert axis <= set(lower.triangles)
        # reflecting the strictly-lower part gives exactly the upper part
        strict_lower = set(lower.triangles) - axis
        reflected = {g.reflect_axis(spec, t) for t in strict_lower}
        if not (spec.is_even and spec.s in (0, spec.n)):
            assert reflected == set(upper.triangles)


def test_half_weight_marks_sit_on_surviving_axis_positions():
    spec = HexSpec(3, 4, 2)
    _, lower = g.split_halves(spec)
    assert len(lower.half_weight_edges) == spec.n - 2
    for pair in lower.half_weight_edges:
        a, b = tuple(pair)
        assert b in a.neighbors()
        assert {g.reflect_axis(spec, a), g.reflect_axis(spec, b)} == {a, b}
    # boundary defect keeps one extra intact position
    _, lower0 = g.split_halves(HexSpec(3, 4, 0))
    assert len(lower0.half_weight_edges) == spec.n - 1


def test_mirror_images_for_s_and_its_reflection():
    for spec in list(even_specs()) + list(odd_specs()):
        other = (spec.n - spec.s) if spec.is_even else (spec.n + 1 - spec.s)
        mirrored = {g.mirror_lr(spec, t) for t in g.remove_axis_defect(spec).triangles}
        assert mirrored == g.remove_axis_defect(HexSpec(spec.n, spec.N, other)).triangles


def test_dual_graph_single_rhombus():
    pair = (up(0, 0), down(0, 0))
    plain = g.TriRegion(frozenset(pair))
    dg = g.dual_graph(plain)
    assert len(dg.verts) == 2 and len(dg.edges) == 1
    assert dg.edges[0][2] == 1
    marked = g.TriRegion(frozenset(pair), frozenset({frozenset(pair)}))
    assert g.dual_graph(marked).edges[0][2] == g.dual_graph(marked).edges[0][2].__class__(1, 2)


def test_dual_graph_of_smallest_hexagon_is_a_six_cycle():
    dg = g.dual_graph(g.build_hexagon(1, 1, 1))
    assert len(dg.verts) == 6 and len(dg.edges) == 6
    degree = [0] * 6
    for i, j, _ in dg.edges:
        degree[i] += 1
        degree[j] += 1
    assert degree == [2] * 6


def test_dual_graph_is_bipartite_with_one_edge_per_adjacent_pair():
    for spec in [HexSpec(2, 4, 1), HexSpec(3, 5, 2)]:
        region = g.remove_axis_defect(spec)
        dg = g.dual_graph(region)
        for i, j, _ in dg.edges:
            assert dg.classes[i] != dg.classes[j]
        assert len(dg.edges) == sum(1 for _ in region.adjacent_pairs())


def test_region_json_roundtrip_and_stability():
    spec = HexSpec(3, 4, 1)
    _, lower = g.split_halves(spec)
    text = lower.to_json()
    assert g.TriRegion.from_json(text) == lower
    assert lower.to_json() == text  # byte-stable


def test_half_weight_validation():
    with pytest.raises(ValueError):
        g.TriRegion(
            frozenset({up(0, 0), down(5, 5)}),
            frozenset({frozenset({up(0, 0), down(5, 5)})}),
        )


def test_remove_requires_present_cells():
    region = g.build_hexagon(1, 1, 1)
    with pytest.raises(ValueError):
        region.remove([up(9, 9)])


def test_tiling_covers_exactly():
    region = g.TriRegion(frozenset({up(0, 0), down(0, 0)}))
    good = g.Tiling(frozenset({frozenset({up(0, 0), down(0, 0)})}))
    assert good.covers_exactly(region)
    assert not good.covers_exactly(g.build_hexagon(1, 1, 1))

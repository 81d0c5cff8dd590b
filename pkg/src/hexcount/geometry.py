"""Triangular-lattice regions: hexagons, axis defects, and symmetry-axis halves.

Coordinates
-----------
Lattice points are integer pairs (x, y) placed in the plane at
x*e1 + y*e2 with |e1| = |e2| = 1 and a 60-degree angle between them.
Each lattice cell holds an up triangle and a down triangle:

    up   U(x,y):  corners (x, y), (x+1, y), (x, y+1)
    down D(x,y):  corners (x+1, y), (x, y+1), (x+1, y+1)

        (x,y+1) ___ (x+1,y+1)
           | \\  D  |
           |  \\    |            U(x,y) is edge-adjacent to exactly
           | U  \\  |            D(x,y), D(x-1,y) and D(x,y-1).
        (x,y) ---- (x+1,y)

The hexagon with side sequence a, b, c, a, b, c is the set of triangles in

    0 <= y <= b+c,   -c <= x <= a,   0 <= x+y <= a+b,

read as corner constraints.  For the defect problem we use a = c = n and
b = N, which puts the two N-sides on the lattice lines x = -n and x = n.
The reflection that swaps them out of the picture -- the symmetry axis through
their midpoints -- acts on triangles as

    U(x, y) -> U(x, K-1-x-y),   D(x, y) -> D(x, K-2-x-y),   K = N + n,

so a triangle lies on the axis exactly when 2y + x equals K-1 (up) or K-2
(down).  Axis vertices, the lattice points fixed by the reflection, are the
points (x, (K-x)/2) with x = K (mod 2); for even N they run from the midpoint
of the left N-side to the midpoint of the right one (n+1 of them), for odd N
all n of them are interior.  Between consecutive axis vertices sits one
"crossing" rhombus position, a D/U pair sharing an edge cut by the axis; each
axis vertex is the tip of the two bowtie triangles removed by the defect.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, NamedTuple, Optional

from .matchcount import DualGraph

UP = "u"
DOWN = "d"


class UnitTriangle(NamedTuple):
    """One unit triangle of the lattice, identified by cell and orientation."""

    x: int
    y: int
    orient: str

    def neighbors(self) -> tuple["UnitTriangle", ...]:
        """The three triangles sharing a full edge with this one."""
        x, y = self.x, self.y
        if self.orient == UP:
            return (
                UnitTriangle(x, y, DOWN),
                UnitTriangle(x - 1, y, DOWN),
                UnitTriangle(x, y - 1, DOWN),
            )
        return (
            UnitTriangle(x, y, UP),
            UnitTriangle(x + 1, y, UP),
            UnitTriangle(x, y + 1, UP),
        )

    def corners(self) -> tuple[tuple[int, int], ...]:
        x, y = self.x, self.y
        if self.orient == UP:
            return ((x, y), (x + 1, y), (x, y + 1))
        return ((x + 1, y), (x, y + 1), (x + 1, y + 1))


def up(x: int, y: int) -> UnitTriangle:
    return UnitTriangle(x, y, UP)


def down(x: int, y: int) -> UnitTriangle:
    return UnitTriangle(x, y, DOWN)


@dataclass(frozen=True)
class TriRegion:
    """A finite set of unit triangles, with optional weight-1/2 rhombus marks.

    half_weight_edges holds unordered adjacent pairs whose shared edge lies on
    the symmetry axis of a split region; a tiling that uses such a rhombus
    counts with a factor 1/2.
    """

    triangles: frozenset
    half_weight_edges: frozenset = field(default_factory=frozenset)
    label: str = ""

    def __post_init__(self):
        for pair in self.half_weight_edges:
            a, b = tuple(pair)
            if a not in self.triangles or b not in self.triangles:
                raise ValueError(f"half-weight pair {pair} not inside region")
            if b not in a.neighbors():
                raise ValueError(f"half-weight pair {pair} is not adjacent")

    def __len__(self) -> int:
        return len(self.triangles)

    def up_count(self) -> int:
        return sum(1 for t in self.triangles if t.orient == UP)

    def down_count(self) -> int:
        return sum(1 for t in self.triangles if t.orient == DOWN)

    def is_balanced(self) -> bool:
        return self.up_count() == self.down_count()

    def sorted_triangles(self) -> list:
        return sorted(self.triangles)

    def adjacent_pairs(self) -> Iterator[frozenset]:
        """Every unordered adjacent pair inside the region, once each."""
        for t in self.triangles:
            if t.orient != UP:
                continue
            for nb in t.neighbors():
                if nb in self.triangles:
                    yield frozenset((t, nb))

    def remove(self, cells: Iterable[UnitTriangle], label: Optional[str] = None) -> "TriRegion":
        cells = frozenset(cells)
        missing = cells - self.triangles
        if missing:
            raise ValueError(f"cannot remove absent triangles {sorted(missing)}")
        keep = self.triangles - cells
        edges = frozenset(e for e in self.half_weight_edges if not (e & cells))
        return TriRegion(keep, edges, label if label is not None else self.label)

    # -- stable serialization ------------------------------------------------

    def to_json_obj(self) -> dict:
        tri = [[t.x, t.y, t.orient] for t in self.sorted_triangles()]
        edges = sorted(
            [[a.x, a.y, a.orient], [b.x, b.y, b.orient]]
            for a, b in (sorted(p) for p in self.half_weight_edges)
        )
        return {"label": self.label, "triangles": tri, "half_edges": edges}

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), separators=(",", ":"), sort_keys=True)

    @staticmethod
    def from_json_obj(obj: dict) -> "TriRegion":
        tris = frozenset(UnitTriangle(x, y, o) for x, y, o in obj["triangles"])
        edges = frozenset(
            frozenset((UnitTriangle(*a), UnitTriangle(*b))) for a, b in obj["half_edges"]
        )
        return TriRegion(tris, edges, obj.get("label", ""))

    @staticmethod
    def from_json(text: str) -> "TriRegion":
        return TriRegion.from_json_obj(json.loads(text))


@dataclass(frozen=True)
class Tiling:
    """A rhombus tiling: a set of disjoint adjacent pairs covering a region."""

    rhombi: frozenset

    def covers_exactly(self, region: TriRegion) -> bool:
        seen = set()
        for pair in self.rhombi:
            a, b = tuple(pair)
            if b not in a.neighbors():
                return False
            if a in seen or b in seen:
                return False
            seen.update((a, b))
        return seen == set(region.triangles)


# ---------------------------------------------------------------------------
# hexagons and defects
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class HexSpec:
    """Hexagon n,n,N,n,n,N with a two-triangle defect at an axis vertex.

    For even N = 2m the axis vertices are numbered 1..n+1 left to right
    (including the two N-side midpoints) and the defect sits at vertex s+1
    with 0 <= s <= n.  For odd N = 2m+1 they are numbered 1..n (all interior)
    and the defect sits at vertex s with 1 <= s <= n.
    """

    n: int
    N: int
    s: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"side n must be positive, got {self.n}")
        if self.N < 2 - self.N % 2:
            raise ValueError(f"cut side N must be positive and even N at least 2, got {self.N}")
        if self.is_even:
            if not 0 <= self.s <= self.n:
                raise ValueError(f"even case needs 0 <= s <= n, got s={self.s}")
        else:
            if not 1 <= self.s <= self.n:
                raise ValueError(f"odd case needs 1 <= s <= n, got s={self.s}")

    @property
    def m(self) -> int:
        return self.N // 2

    @property
    def is_even(self) -> bool:
        return self.N % 2 == 0

    @property
    def K(self) -> int:
        return self.N + self.n


def build_hexagon(a: int, b: int, c: int) -> TriRegion:
    """The hexagonal region with side sequence a, b, c, a, b, c.

    Contains 2(ab+bc+ca) triangles, equally many up and down.
    """
    if a < 1 or b < 1 or c < 1:
        raise ValueError(f"hexagon sides must be positive, got {(a, b, c)}")
    tris = set()
    for x in range(-c, a):
        for y in range(0, b + c):
            if 0 <= x + y <= a + b - 1:
                tris.add(up(x, y))
            if -1 <= x + y <= a + b - 2:
                tris.add(down(x, y))
    return TriRegion(frozenset(tris), frozenset(), f"hexagon({a},{b},{c})")


def reflect_axis(spec: HexSpec, t: UnitTriangle) -> UnitTriangle:
    """Reflection across the symmetry axis through the two N-sides."""
    k = spec.K
    if t.orient == UP:
        return up(t.x, k - 1 - t.x - t.y)
    return down(t.x, k - 2 - t.x - t.y)


def mirror_lr(spec: HexSpec, t: UnitTriangle) -> UnitTriangle:
    """Left-right mirror (through the hexagon corners), swapping s and n-s."""
    if t.orient == UP:
        return down(-t.x - 1, t.x + t.y)
    return up(-t.x - 1, t.x + t.y + 1)


def axis_triangles(spec: HexSpec, region: TriRegion) -> list:
    """The region's triangles fixed by the axis reflection, sorted."""
    k = spec.K
    out = [
        t
        for t in region.triangles
        if 2 * t.y + t.x == (k - 1 if t.orient == UP else k - 2)
    ]
    return sorted(out)


def axis_vertices(spec: HexSpec) -> list:
    """Axis vertices left to right (1-based positions index this list + 1)."""
    n, m = spec.n, spec.m
    if spec.is_even:
        return [(-n + 2 * k, m + n - k) for k in range(0, n + 1)]
    return [(-n + 2 * k - 1, m + n - k + 1) for k in range(1, n + 1)]


def defect_cells(spec: HexSpec) -> frozenset:
    """The two triangles removed at the designated axis vertex.

    Interior vertices lose their bowtie: the axis triangle tipped at the
    vertex from the west and the one tipped from the east.  At the two
    boundary vertices of the even case only the inward axis triangle exists;
    there the removal pairs it with the adjacent N-side boundary triangle
    sharing the same vertex, which keeps the region balanced and the upper
    half untouched.  See the README for how those boundary defects relate to
    the closed-form counts.
    """
    n, m, s = spec.n, spec.m, spec.s
    if not spec.is_even:
        return frozenset((up(-n + 2 * s - 2, m + n - s + 1), down(-n + 2 * s - 1, m + n - s)))
    if s == 0:
        return frozenset((down(-n, m + n - 1), up(-n, m + n - 1)))
    if s == n:
        return frozenset((up(n - 1, m), down(n - 1, m - 1)))
    return frozenset((up(-n + 2 * s - 1, m + n - s), down(-n + 2 * s, m + n - s - 1)))


def remove_axis_defect(spec: HexSpec) -> TriRegion:
    """The hexagon n,n,N,n,n,N minus the two defect triangles."""
    hexagon = build_hexagon(spec.n, spec.N, spec.n)
    return hexagon.remove(defect_cells(spec), label=f"defect(n={spec.n},N={spec.N},s={spec.s})")


def _crossing_pairs(spec: HexSpec, region: TriRegion) -> list:
    """Intact axis rhombus positions: D/U pairs sharing an axis-cut edge."""
    n, k = spec.n, spec.K
    pairs = []
    for c in range(-n, n + 1):
        if (c - (k - 1)) % 2:
            continue
        y0 = (k - c - 1) // 2
        d, u_ = down(c - 1, y0), up(c, y0)
        if d in region.triangles and u_ in region.triangles:
            pairs.append(frozenset((d, u_)))
    return pairs


def split_halves(spec: HexSpec) -> tuple:
    """Split the defect region into its upper and lower halves.

    The upper half is the part strictly above the symmetry axis (the axis row
    belongs entirely to the lower half, which is why the factor 2^(n-1) shows
    up when the two halves are recombined).  The lower half keeps every
    surviving axis rhombus position with weight 1/2.
    """
    region = remove_axis_defect(spec)
    k = spec.K
    upper, lower = set(), set()
    for t in region.triangles:
        axis_level = k - 1 if t.orient == UP else k - 2
        if 2 * t.y + t.x > axis_level:
            upper.add(t)
        else:
            lower.add(t)
    half_edges = frozenset(_crossing_pairs(spec, region))
    tag = f"(n={spec.n},N={spec.N},s={spec.s})"
    return (
        TriRegion(frozenset(upper), frozenset(), f"upper{tag}"),
        TriRegion(frozenset(lower), half_edges, f"lower{tag}"),
    )


def dual_graph(region: TriRegion) -> DualGraph:
    """Inner dual of the region: one vertex per triangle, one edge per
    adjacent pair, with weight 1/2 on the marked axis rhombus positions."""
    verts = region.sorted_triangles()
    index = {t: i for i, t in enumerate(verts)}
    edges = []
    for t in verts:
        if t.orient != UP:
            continue
        for nb in t.neighbors():
            j = index.get(nb)
            if j is None:
                continue
            w = Fraction(1, 2) if frozenset((t, nb)) in region.half_weight_edges else Fraction(1)
            edges.append((index[t], j, w))
    classes = tuple(0 if t.orient == UP else 1 for t in verts)
    return DualGraph(tuple(verts), classes, tuple(edges))

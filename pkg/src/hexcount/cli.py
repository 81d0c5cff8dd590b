"""Command-line surface tying the counting routes together.

Commands:

  count       one defect hexagon (or a full box) through chosen routes
  verify      the full cross-verification grid; exit 1 on any disagreement
  polydet     factor structure of the lower-half determinant polynomial
  identities  the summation-identity and vanishing-relation suites
  asymptotic  exact ratios against the limiting proportion
  render      SVG picture of a region, its defect, and one tiling

Exit codes: 0 success, 1 verification failure, 2 usage error.  The default
output is a human table; --json switches to the machine format, which is
byte-stable for fixed flags (timing is only included with --timing).
HEXCOUNT_THREADS caps worker threads for grid commands; ordering of results
is canonical regardless.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

from . import formulas, geometry, hyperid, matchcount, pathdet, polyfactor
from .render import region_svg

EXIT_OK, EXIT_DISAGREE, EXIT_USAGE = 0, 1, 2

BOUNDARY_NOTE = (
    "boundary defect (s=0 or s=n, even cut side): the closed form counts the "
    "factorized half pair, certified here by half-region oracles; the "
    "two-triangle surrogate region's own count is reported informationally"
)


def _threads() -> int:
    try:
        return max(1, int(os.environ.get("HEXCOUNT_THREADS", "1")))
    except ValueError:
        return 1


def _map_ordered(fn, items):
    items = list(items)
    if _threads() == 1 or len(items) <= 1:
        return [fn(it) for it in items]
    with ThreadPoolExecutor(max_workers=_threads()) as pool:
        return list(pool.map(fn, items))


def _fmt_ms(seconds: float) -> str:
    return f"{1000.0 * seconds:.1f}"


# ---------------------------------------------------------------------------
# route evaluation for one defect hexagon
# ---------------------------------------------------------------------------

def closed_route(n: int, N: int, s: int) -> int:
    m = N // 2
    if N % 2 == 0:
        return formulas.even_case_count(n, m, s)
    return formulas.odd_case_count(n, m, s)


def product_route(n: int, N: int, s: int) -> int:
    m = N // 2
    if N % 2 == 0:
        return formulas.even_case_product(n, m, s)
    return formulas.odd_case_product(n, m, s)


def det_route(n: int, N: int, s: int) -> Fraction:
    m = N // 2
    if N % 2 == 0:
        upper = pathdet.det_exact(pathdet.upper_path_matrix(n, m))
        lower = pathdet.lower_half_det_count(n, m, min(s, n - s))
    else:
        upper = pathdet.det_exact(pathdet.upper_path_matrix(n + 1, m))
        lower = pathdet.det_exact(pathdet.odd_lower_path_matrix(n, m, s))
    return Fraction(2) ** (n - 1) * upper * lower


def boundary_witness_region(n: int, m: int):
    """Lower-half region whose oracle count equals lower_half_count(n, m, 0).

    The even boundary defect has no symmetric region of its own, but its
    lower-half value is the lower half of the odd hexagon with sides n+1 and
    2m-1, defect at the first axis vertex.
    """
    return geometry.split_halves(geometry.HexSpec(n + 1, 2 * m - 1, 1))[1]


def oracle_route(n: int, N: int, s: int) -> Fraction:
    """Oracle count of the closed form's object.

    Interior defects (and every odd-case defect) are counted directly as
    regions.  The even boundary defects are formula extensions with no
    symmetric region, so their value is certified as 2^(n-1) times the oracle
    counts of the two halves (the lower one through its odd-case witness).
    """
    spec = geometry.HexSpec(n, N, s)
    m = spec.m
    if spec.is_even and s in (0, n):
        upper = geometry.split_halves(spec)[0]
        return (
            Fraction(2) ** (n - 1)
            * matchcount.count_tilings(upper)
            * matchcount.count_tilings(boundary_witness_region(n, m))
        )
    return matchcount.count_tilings(geometry.remove_axis_defect(spec))


# ---------------------------------------------------------------------------
# count
# ---------------------------------------------------------------------------

def cmd_count(args) -> int:
    routes = ("closed", "det", "oracle") if args.route == "all" else (args.route,)
    notes = []
    if args.box is not None:
        a, b, c = args.box
        if args.route == "all":
            routes = ("closed", "oracle")
        elif args.route == "det":
            raise ValueError("route 'det' applies to defect hexagons, not --box")
        values = {}
        timing = {}
        for r in routes:
            t0 = time.perf_counter()
            if r == "closed":
                values[r] = formulas.box_count(a, b, c)
            else:
                values[r] = matchcount.count_tilings(geometry.build_hexagon(a, b, c))
            timing[r] = time.perf_counter() - t0
        case = {"box": [a, b, c]}
    else:
        n, N, s = args.n, args.N, args.s
        geometry.HexSpec(n, N, s)  # validates ranges
        values = {}
        timing = {}
        fns = {"closed": closed_route, "det": det_route, "oracle": oracle_route}
        for r in routes:
            t0 = time.perf_counter()
            values[r] = fns[r](n, N, s)
            timing[r] = time.perf_counter() - t0
        case = {"n": n, "N": N, "s": s}
        if N % 2 == 0 and s in (0, n):
            notes.append(BOUNDARY_NOTE)
            if "oracle" in routes:
                surrogate = matchcount.count_tilings(geometry.remove_axis_defect(geometry.HexSpec(n, N, s)))
                notes.append(f"surrogate region count: {surrogate}")
    agree = len({Fraction(v) for v in values.values()}) == 1
    report = {
        "command": "count",
        "case": case,
        "values": {r: str(values[r]) for r in routes},
        "agree": agree,
        "notes": notes,
    }
    if args.timing:
        report["wall_ms"] = {r: _fmt_ms(timing[r]) for r in routes}
    if args.json:
        print(json.dumps(report, sort_keys=True))
    else:
        label = " ".join(f"{k}={v}" for k, v in case.items())
        for r in routes:
            print(f"{label}  {r:>6}: {values[r]}   ({_fmt_ms(timing[r])} ms)")
        if len(routes) > 1:
            print(f"{label}  agreement: {'yes' if agree else 'NO'}")
        for note in notes:
            print(f"note: {note}")
    return EXIT_OK if agree else EXIT_DISAGREE


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

def _tampered(region):
    """Test hook: flip the first half-weight mark of a region to weight 1."""
    edges = sorted(region.half_weight_edges, key=lambda p: sorted(p))
    if not edges:
        return region
    return geometry.TriRegion(
        region.triangles, frozenset(edges[1:]), region.label + "+fault"
    )


def verify_case(case, fault=None):
    """All cross-checks for one (n, N, s); returns the per-case report dict."""
    n, N, s = case
    spec = geometry.HexSpec(n, N, s)
    m = spec.m
    t0 = time.perf_counter()
    closed = closed_route(n, N, s)
    checks = {}
    notes = []

    checks["product"] = product_route(n, N, s) == closed
    checks["determinant"] = det_route(n, N, s) == closed
    mirror_s = (n - s) if spec.is_even else (n + 1 - s)
    checks["mirror"] = closed_route(n, N, mirror_s) == closed

    upper, lower = geometry.split_halves(spec)
    if fault == tuple(case):
        lower = _tampered(lower)
    count_upper = matchcount.count_tilings(upper)
    count_lower = matchcount.count_tilings(lower)
    factor = Fraction(2) ** (n - 1) * count_upper * count_lower

    if spec.is_even:
        checks["upper_half"] = count_upper == formulas.upper_half_count(n, m)
        if s in (0, n):
            surrogate = matchcount.count_tilings(geometry.remove_axis_defect(spec))
            checks["factorization"] = surrogate == factor
            witness = matchcount.count_tilings(boundary_witness_region(n, m))
            checks["lower_half"] = witness == formulas.lower_half_count(n, m, 0)
            checks["oracle"] = Fraction(2) ** (n - 1) * count_upper * witness == closed
            notes.append(BOUNDARY_NOTE)
            notes.append(f"surrogate region count {surrogate} vs closed form {closed}")
            oracle_value = Fraction(2) ** (n - 1) * count_upper * witness
        else:
            oracle_value = matchcount.count_tilings(geometry.remove_axis_defect(spec))
            checks["oracle"] = oracle_value == closed
            checks["factorization"] = oracle_value == factor
            checks["lower_half"] = count_lower == formulas.lower_half_count(n, m, min(s, n - s))
    else:
        oracle_value = matchcount.count_tilings(geometry.remove_axis_defect(spec))
        checks["oracle"] = oracle_value == closed
        checks["factorization"] = oracle_value == factor
        checks["upper_half"] = count_upper == formulas.odd_upper_half_count(n, m)
        reduced_s = s if (s < n or n == 1) else 1
        checks["lower_half"] = count_lower == formulas.odd_lower_half_count(n, m, reduced_s)

    return {
        "case": {"n": n, "N": N, "s": s},
        "values": {
            "closed": str(closed),
            "oracle": str(oracle_value),
            "upper_half": str(count_upper),
            "lower_half": str(count_lower),
        },
        "checks": checks,
        "agree": all(checks.values()),
        "notes": notes,
        "wall_s": time.perf_counter() - t0,
    }


def verify_grid(max_n: int, max_m: int):
    cases = []
    for n in range(1, max_n + 1):
        for m in range(1, max_m + 1):
            cases.extend((n, 2 * m, s) for s in range(0, n + 1))
            cases.extend((n, 2 * m + 1, s) for s in range(1, n + 1))
    return sorted(cases)


def cmd_verify(args, fault=None) -> int:
    cases = verify_grid(args.max_n, args.max_m)
    results = _map_ordered(lambda c: verify_case(c, fault=fault), cases)
    ok = all(r["agree"] for r in results)
    report = {
        "command": "verify",
        "grid": {"max_n": args.max_n, "max_m": args.max_m},
        "cases": [
            {k: r[k] for k in ("case", "values", "checks", "agree", "notes")}
            for r in results
        ],
        "ok": ok,
    }
    if args.timing:
        report["wall_ms"] = {
            f"n={r['case']['n']},N={r['case']['N']},s={r['case']['s']}": _fmt_ms(r["wall_s"])
            for r in results
        }
    if args.json:
        print(json.dumps(report, sort_keys=True))
    else:
        for r in results:
            c = r["case"]
            flags = " ".join(k for k, v in r["checks"].items() if not v)
            line = (
                f"n={c['n']} N={c['N']} s={c['s']}: closed={r['values']['closed']} "
                f"oracle={r['values']['oracle']} "
                f"{'ok' if r['agree'] else 'FAIL [' + flags + ']'} "
                f"({_fmt_ms(r['wall_s'])} ms)"
            )
            print(line)
        bad = [r["case"] for r in results if not r["agree"]]
        print(f"verify: {len(results)} cases, {'all agree' if ok else f'disagreements at {bad}'}")
    return EXIT_OK if ok else EXIT_DISAGREE


# ---------------------------------------------------------------------------
# polydet
# ---------------------------------------------------------------------------

def cmd_polydet(args) -> int:
    n, s = args.n, args.s
    poly = polyfactor.lower_det_polynomial(n, s)
    half = polyfactor.half_integer_factor_report(poly, n, s)
    integer = polyfactor.integer_factor_report(poly, n, s)
    lead_ok = polyfactor.leading_coefficient_check(poly, n, s)
    product_ok = polyfactor.closed_product_matches_polynomial(n, s)
    ok = half.ok and integer.ok and lead_ok and product_ok
    report = {
        "command": "polydet",
        "case": {"n": n, "s": s},
        "degree": poly.degree,
        "expected_degree": polyfactor.expected_degree(n),
        "coefficients": poly.coeff_strings(),
        "half_integer_factors": [
            {"factor": d, "required": req, "actual": act} for d, _, req, act in half.factors
        ],
        "integer_factors": [
            {"factor": d, "required": req, "actual": act} for d, _, req, act in integer.factors
        ],
        "leading_coefficient": str(poly.leading_coefficient()),
        "leading_coefficient_ok": lead_ok,
        "closed_product_ok": product_ok,
        "ok": ok,
    }
    if args.json:
        print(json.dumps(report, sort_keys=True))
    else:
        print(f"n={n} s={s}: degree {poly.degree} (expected {polyfactor.expected_degree(n)})")
        print("coefficients (ascending):", ", ".join(poly.coeff_strings()))
        for line in half.lines() + integer.lines():
            print(" ", line)
        print(f"leading coefficient {poly.leading_coefficient()}: {'ok' if lead_ok else 'FAIL'}")
        print(f"closed product match: {'ok' if product_ok else 'FAIL'}")
    return EXIT_OK if ok else EXIT_DISAGREE


# ---------------------------------------------------------------------------
# identities
# ---------------------------------------------------------------------------

def cmd_identities(args) -> int:
    suites = []
    if args.suite in ("vandermonde", "all"):
        suites.append(hyperid.run_vandermonde_suite(args.count, seed=args.seed))
    if args.suite in ("pfaff", "all"):
        suites.append(hyperid.run_pfaff_suite(args.count, seed=args.seed))
    if args.suite in ("halb", "all"):
        suites.append(hyperid.run_half_root_suite(args.max_n))
    if args.suite in ("ganz", "all"):
        suites.append(hyperid.run_integer_root_suite(args.max_n))
    ok = all(not s["failures"] for s in suites)
    print(json.dumps({"command": "identities", "suites": suites, "ok": ok}, sort_keys=True))
    return EXIT_OK if ok else EXIT_DISAGREE


# ---------------------------------------------------------------------------
# asymptotic
# ---------------------------------------------------------------------------

def exact_ratio(alpha: int, beta: int, gamma: int, t: int) -> Fraction:
    """Defect count over box count at scale t, as an exact rational."""
    n, m, s = alpha * t, beta * t // 2, gamma * t
    if beta * t % 2:
        raise ValueError(f"beta*t must be even, got beta={beta}, t={t}")
    return Fraction(formulas.even_case_count(n, m, s), formulas.box_count(n, n, 2 * m))


def cmd_asymptotic(args) -> int:
    alpha, beta, gamma = args.alpha, args.beta, args.gamma
    limit = formulas.asymptotic_proportion(alpha, beta, gamma)
    ts = [int(t) for t in args.t_list.split(",")]
    rows = []
    for t in ts:
        ratio = exact_ratio(alpha, beta, gamma, t)
        rel = abs(float(ratio) / limit - 1.0)
        rows.append({"t": t, "ratio": f"{float(ratio):.15g}", "rel_error": f"{rel:.6e}"})
    decreasing = all(
        float(rows[i]["rel_error"]) > float(rows[i + 1]["rel_error"]) for i in range(len(rows) - 1)
    )
    report = {
        "command": "asymptotic",
        "alpha": alpha,
        "beta": beta,
        "gamma": gamma,
        "limit": f"{limit:.15g}",
        "rows": rows,
        "relative_error_decreasing": decreasing,
    }
    if args.json:
        print(json.dumps(report, sort_keys=True))
    else:
        print(f"limit proportion: {limit:.15g}")
        for r in rows:
            print(f"  t={r['t']:>4}: ratio={r['ratio']}  rel.err={r['rel_error']}")
        print(f"relative error decreasing: {'yes' if decreasing else 'NO'}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# render
# ---------------------------------------------------------------------------

def cmd_render(args) -> int:
    spec = geometry.HexSpec(args.n, args.N, args.s)
    if args.half is None:
        region = geometry.remove_axis_defect(spec)
        removed = geometry.defect_cells(spec)
        dashed = ()
    else:
        upper, lower = geometry.split_halves(spec)
        region = upper if args.half == "plus" else lower
        removed = ()
        dashed = region.half_weight_edges
    tiling = matchcount.find_tiling(region)
    if tiling is None:
        print(f"warning: region {region.label} has no tiling", file=sys.stderr)
    svg = region_svg(region, removed=removed, tiling=tiling, dashed_pairs=dashed)
    with open(args.out, "w", encoding="ascii") as fh:
        fh.write(svg)
    print(f"wrote {args.out}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hexcount",
        description="exact tiling counts for hexagons with a two-triangle axis defect",
    )
    sub = parser.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("count", help="count one case through chosen routes")
    p.add_argument("--n", type=int, help="the four equal sides")
    p.add_argument("--N", type=int, help="the two sides cut by the symmetry axis")
    p.add_argument("--s", type=int, help="defect vertex index")
    p.add_argument("--box", type=int, nargs=3, metavar=("A", "B", "C"),
                   help="count a full hexagon with sides A,B,C instead")
    p.add_argument("--route", choices=("closed", "det", "oracle", "all"), default="closed")
    p.add_argument("--json", action="store_true")
    p.add_argument("--timing", action="store_true")

    p = sub.add_parser("verify", help="run the full cross-verification grid")
    p.add_argument("--max-n", type=int, default=4)
    p.add_argument("--max-m", type=int, default=3)
    p.add_argument("--json", action="store_true")
    p.add_argument("--timing", action="store_true")

    p = sub.add_parser("polydet", help="factor structure of the determinant polynomial")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("identities", help="summation identity suites")
    p.add_argument("--suite", choices=("vandermonde", "pfaff", "halb", "ganz", "all"),
                   default="all")
    p.add_argument("--max-n", type=int, default=6)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=200)

    p = sub.add_parser("asymptotic", help="exact ratios against the limit proportion")
    p.add_argument("--alpha", type=int, required=True)
    p.add_argument("--beta", type=int, required=True)
    p.add_argument("--gamma", type=int, required=True)
    p.add_argument("--t-list", default="4,8,16,32,64")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("render", help="write an SVG of a region and one tiling")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--half", choices=("plus", "minus"))

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "count": cmd_count,
        "verify": cmd_verify,
        "polydet": cmd_polydet,
        "identities": cmd_identities,
        "asymptotic": cmd_asymptotic,
        "render": cmd_render,
    }
    if args.cmd == "count" and (args.box is None) == (args.n is None):
        parser.error("give either --box A B C or all of --n --N --s")
    if args.cmd == "count" and args.box is None and (args.N is None or args.s is None):
        parser.error("defect counting needs --n, --N and --s")
    try:
        return handlers[args.cmd](args)
    except (ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

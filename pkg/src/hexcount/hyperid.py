"""Terminating hypergeometric sums and the vanishing linear relations.

Two classical summation formulas are verified numerically at exact rational
parameters: the Chu-Vandermonde evaluation of a terminating 2F1 at 1 and the
Pfaff-Saalschutz evaluation of a balanced terminating 3F2 at 1.

On top of those sit the linear relations that drive the factor structure of
the lower-half determinant:

  * `half_root_column_relation`: at m = -k-1/2 a binomial combination of
    columns of the polynomial matrix vanishes in every generic row;
  * `integer_root_row_relation`: at m = -k a specific combination of rows of
    the reduced matrix vanishes columnwise, in four variants covering
    k < s, k > n-s, s < k <= n/2 and n/2 < k < n-s (with s <= n/2; larger s
    is reached through the mirror symmetry).

The checks evaluate the stated combinations on the actual matrices -- exact
rational zero, not small-number zero.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .formulas import binomial, factorial, pochhammer
from .pathdet import lower_poly_entry, reduced_poly_matrix


@dataclass(frozen=True)
class HypergeomSpec:
    """A terminating hypergeometric series at argument 1."""

    upper: tuple
    lower: tuple
    termination: int

    def __post_init__(self):
        if self.termination < 0:
            raise ValueError("termination index must be nonnegative")
        ok = any(
            Fraction(a).denominator == 1 and Fraction(a) <= 0 for a in self.upper
        )
        if not ok:
            raise ValueError("series does not terminate: no nonpositive integer upstairs")
        for c in self.lower:
            c = Fraction(c)
            if c.denominator == 1 and 0 >= c > -self.termination:
                raise ValueError(f"lower parameter {c} vanishes inside the sum")


def terminating_sum(spec: HypergeomSpec) -> Fraction:
    """Sum_{t=0}^{T} prod (a)_t / (prod (c)_t * t!), exactly."""
    total = Fraction(0)
    term = Fraction(1)
    for t in range(spec.termination + 1):
        total += term
        num = Fraction(1)
        for a in spec.upper:
            num *= Fraction(a) + t
        den = Fraction(t + 1)
        for c in spec.lower:
            den *= Fraction(c) + t
        if den == 0:
            if num == 0:
                break  # series already terminated
            raise ValueError("denominator parameter hit zero inside the sum")
        term = term * num / den
    return total


def vandermonde_check(a, n: int, c) -> bool:
    """2F1[a, -n; c; 1] == (c-a)_n / (c)_n, exactly."""
    a, c = Fraction(a), Fraction(c)
    lhs = terminating_sum(HypergeomSpec((a, Fraction(-n)), (c,), n))
    rhs = Fraction(pochhammer(c - a, n)) / pochhammer(c, n)
    return lhs == rhs


def pfaff_saalschuetz_check(a, b, n: int, c) -> bool:
    """Balanced 3F2[a, b, -n; c, 1+a+b-c-n; 1] against its product form."""
    a, b, c = Fraction(a), Fraction(b), Fraction(c)
    d2 = 1 + a + b - c - n
    lhs = terminating_sum(HypergeomSpec((a, b, Fraction(-n)), (c, d2), n))
    rhs = (pochhammer(c - a, n) * pochhammer(c - b, n)) / (
        pochhammer(c, n) * pochhammer(c - a - b, n)
    )
    return lhs == rhs


# ---------------------------------------------------------------------------
# vanishing column combinations at half-integer m
# ---------------------------------------------------------------------------

def half_root_valid_l(n: int, k: int) -> list:
    """The l values for which the column combination stays inside 1..n."""
    return [l for l in range(0, k + 1) if l >= 2 * k - n + 1]


def half_root_column_relation(n: int, k: int, l: int, i: int, s: int) -> bool:
    """sum_j C(l,j) * entry(i, n+2l-2k-j) at m = -k-1/2 equals zero.

    Valid for generic rows i != s+1, 1 <= k <= n-2 and l with the column
    window inside 1..n.
    """
    if not 0 <= s <= n - 1:
        raise ValueError(f"defect index s={s} outside 0..{n - 1}")
    if i == s + 1 or not 1 <= i <= n:
        raise ValueError(f"row {i} is not a generic row")
    if not 1 <= k <= n - 2:
        raise ValueError(f"k={k} outside 1..{n - 2}")
    if l not in half_root_valid_l(n, k):
        raise ValueError(f"l={l} puts a column outside 1..{n}")
    m = -Fraction(2 * k + 1, 2)
    total = Fraction(0)
    for j in range(0, l + 1):
        total += binomial(l, j) * lower_poly_entry(n, m, s, i, n + 2 * l - 2 * k - j)
    return total == 0


def paired_half_root_vectors(n: int, k: int, s: int) -> list:
    """Column vectors annihilating the whole matrix at m = -k-1/2.

    Each valid l gives a combination vanishing in the generic rows; pairing
    consecutive combinations against the defect row kills that row too,
    leaving min(k, n-k-1) vectors (their staggered supports make them
    independent).
    """
    m = -Fraction(2 * k + 1, 2)
    ls = half_root_valid_l(n, k)
    combos = []
    for l in ls:
        vec = [Fraction(0)] * n
        for j in range(0, l + 1):
            vec[n + 2 * l - 2 * k - j - 1] += binomial(l, j)
        combos.append(vec)

    def defect_row_dot(vec):
        return sum(
            c * lower_poly_entry(n, m, s, s + 1, j + 1) for j, c in enumerate(vec) if c
        )

    out = []
    for va, vb in zip(combos, combos[1:]):
        da, db = defect_row_dot(va), defect_row_dot(vb)
        out.append([db * x - da * y for x, y in zip(va, vb)])
    return out


# ---------------------------------------------------------------------------
# vanishing row combinations at negative integer m
# ---------------------------------------------------------------------------

def _variant_for(n: int, k: int, s: int) -> Optional[int]:
    """Which row-relation variant applies at (n, k, s), if any."""
    if k in (s, n - s) or not 0 <= k <= n:
        return None
    if k < s:
        return 1
    if k > n - s:
        return 2
    if 2 * k <= n:
        return 3
    return 4


def integer_root_row_relation(n: int, k: int, s: int, variant: int, j: int) -> bool:
    """The stated combination of reduced-matrix rows vanishes in column j at m = -k.

    Requires s <= n/2; each variant has its own k range, checked here.
    """
    if not (0 <= s <= n - 1 and 2 * s <= n):
        raise ValueError(f"rows relations assume 0 <= s <= n/2, got s={s}")
    if not 1 <= j <= n:
        raise ValueError(f"column {j} outside 1..{n}")
    if _variant_for(n, k, s) != variant:
        raise ValueError(f"variant {variant} does not apply at (n={n}, k={k}, s={s})")
    cmat = reduced_poly_matrix(n, Fraction(-k), s)
    half = Fraction(1, 2)

    if variant == 1:
        total = Fraction(0)
        for i in range(k + 1, s + 1):
            t = i - k - 1
            coeff = (
                Fraction((-1) ** (i - k + 1))
                * binomial(s - k - 1, t)
                * pochhammer(n + half + 1 - i, t)
                * pochhammer(n - i + 1, t)
                / (pochhammer(s + half - i, t) * pochhammer(n - k - i + 1, t))
            )
            total += coeff * cmat.entry(i, j)
        t = s - k
        tail = (
            Fraction((-1) ** (s - k + 2))
            * 2
            * pochhammer(n + half - s, t)
            * pochhammer(n - s + 1, t - 1)
            / (pochhammer(half, t - 1) * pochhammer(n - k - s + 1, t - 1))
        )
        return total + tail * cmat.entry(s + 1, j) == 0

    if variant == 2:
        total = Fraction(0)
        for i in range(n - k + 1, s + 1):
            t = i - n + k - 1
            coeff = (
                Fraction((-1) ** (i - n + k + 1))
                * binomial(s - n + k - 1, t)
                * pochhammer(n + half + 1 - i, t)
                * pochhammer(n - i + 1, t)
                / (pochhammer(s + half - i, t) * pochhammer(k - i + 1, t))
            )
            total += coeff * cmat.entry(i, j)
        t = s - n + k
        tail = (
            Fraction((-1) ** (s - n + k + 2))
            * 2
            * pochhammer(n + half - s, t)
            * pochhammer(n - s + 1, t - 1)
            / (pochhammer(half, t - 1) * pochhammer(k - s + 1, t - 1))
        )
        return total - tail * cmat.entry(s + 1, j) == 0

    # variants 3 and 4 share their shape; only the coefficient offsets differ
    if variant == 3:
        off, tail_sign, outer = k, Fraction(-1), pochhammer(s - n + half, n - k - 1)
        denom_p = pochhammer(Fraction(n + 1 - s), -k)
    else:
        off, tail_sign, outer = n - k, Fraction((-1) ** (n + 1)), pochhammer(
            s - n + half, k - 1
        )
        denom_p = pochhammer(Fraction(n + 1 - s), -(n - k))

    def coeff(i):
        t = i - off - 1
        return (
            Fraction((-4) ** (n - i))
            * pochhammer(s - i + 1, t)
            * outer
            / (factorial(2 * n - 2 * i + 1) * pochhammer(s + half - i, t) * denom_p)
        )

    total = Fraction(0)
    for i in range(off + 1, (n + 1) // 2 + 1):
        total += coeff(i) * pochhammer(i - k, n + 1 - 2 * i) * cmat.entry(i, j)
    for i in range((n + 3) // 2, (n + 1 + j) // 2 + 1):
        total += coeff(i) * cmat.entry(i, j)
    return total + tail_sign * cmat.entry(s + 1, j) == 0


# ---------------------------------------------------------------------------
# suites
# ---------------------------------------------------------------------------

def _random_rational(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-12, 12), rng.randint(1, 12))


def run_vandermonde_suite(tuples: int = 200, seed: int = 0) -> dict:
    rng = random.Random(seed)
    failures = []
    done = 0
    while done < tuples:
        a, c = _random_rational(rng), _random_rational(rng)
        n = rng.randint(0, 8)
        if c.denominator == 1 and 0 >= c > -n:
            continue
        if pochhammer(c, n) == 0:
            continue
        done += 1
        if not vandermonde_check(a, n, c):
            failures.append({"a": str(a), "n": n, "c": str(c)})
    return {"suite": "vandermonde", "tuples_checked": done, "failures": failures}


def run_pfaff_suite(tuples: int = 200, seed: int = 0) -> dict:
    rng = random.Random(seed)
    failures = []
    done = 0
    while done < tuples:
        a, b, c = (_random_rational(rng) for _ in range(3))
        n = rng.randint(0, 6)
        d2 = 1 + a + b - c - n
        bad = False
        for t in range(n):
            if c + t == 0 or d2 + t == 0 or c - a - b + t == 0:
                bad = True
                break
        if bad:
            continue
        done += 1
        if not pfaff_saalschuetz_check(a, b, n, c):
            failures.append({"a": str(a), "b": str(b), "n": n, "c": str(c)})
    return {"suite": "pfaff", "tuples_checked": done, "failures": failures}


def run_half_root_suite(max_n: int = 6) -> dict:
    failures = []
    done = 0
    for n in range(1, max_n + 1):
        for s in range(0, n):
            for k in range(1, n - 1):
                ls = half_root_valid_l(n, k)
                if len(ls) != min(k + 1, n - k):
                    failures.append({"n": n, "s": s, "k": k, "why": "l-count"})
                for l in ls:
                    for i in range(1, n + 1):
                        if i == s + 1:
                            continue
                        done += 1
                        if not half_root_column_relation(n, k, l, i, s):
                            failures.append({"n": n, "s": s, "k": k, "l": l, "i": i})
    return {"suite": "halb", "tuples_checked": done, "failures": failures}


def run_integer_root_suite(max_n: int = 6) -> dict:
    failures = []
    done = 0
    for n in range(1, max_n + 1):
        for s in range(0, n // 2 + 1):
            if s > n - 1:
                continue
            for k in range(0, n + 1):
                variant = _variant_for(n, k, s)
                if variant is None:
                    continue
                for j in range(1, n + 1):
                    done += 1
                    if not integer_root_row_relation(n, k, s, variant, j):
                        failures.append({"n": n, "s": s, "k": k, "variant": variant, "j": j})
    return {"suite": "ganz", "tuples_checked": done, "failures": failures}

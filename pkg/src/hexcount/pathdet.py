"""Lattice-path matrices for the two halves and exact determinant evaluation.

Tilings of each half correspond to families of nonintersecting lattice paths
(unit right / unit down steps) between fixed start and end points, so their
weighted counts are determinants of pairwise path-count matrices.  This module
builds those matrices exactly:

  * `upper_path_matrix`     -- the upper half, binomial entries;
  * `lower_path_matrix`     -- the lower half, with the defect row special and
                               a weight 1/2 on paths leaving a normal start
                               horizontally (those enter an axis rhombus);
  * `odd_lower_path_matrix` -- the same for the odd cut side;
  * `lower_poly_matrix`     -- the lower-half matrix after pulling row factors
                               so every entry is a polynomial in m (this is
                               the matrix whose determinant gets factored in
                               `polyfactor`);
  * `reduced_poly_matrix`   -- `lower_poly_matrix` with the further row
                               divisibility pulled out, used by the vanishing
                               row relations in `hyperid`.

`det_exact` clears denominators row by row and runs fraction-free (Bareiss)
integer elimination, so determinants are exact at any size we need.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .formulas import binomial, factorial, pochhammer


@dataclass(frozen=True)
class ExactMatrix:
    """Square matrix of exact rationals."""

    rows: tuple

    def __post_init__(self):
        n = len(self.rows)
        if any(len(r) != n for r in self.rows):
            raise ValueError("matrix is not square")

    @property
    def order(self) -> int:
        return len(self.rows)

    def entry(self, i: int, j: int) -> Fraction:
        """1-based access, matching the usual matrix index conventions."""
        return self.rows[i - 1][j - 1]

    def to_json_obj(self) -> list:
        return [[str(Fraction(x)) for x in row] for row in self.rows]


def _build(n: int, entry) -> ExactMatrix:
    return ExactMatrix(
        tuple(tuple(Fraction(entry(i, j)) for j in range(1, n + 1)) for i in range(1, n + 1))
    )


# ---------------------------------------------------------------------------
# path counts and path matrices
# ---------------------------------------------------------------------------

def path_count(p: Sequence[int], q: Sequence[int]) -> int:
    """Monotone lattice paths from p to q with unit right and unit down steps."""
    (px, py), (qx, qy) = p, q
    if qx < px or qy > py:
        return 0
    return binomial((qx - px) + (py - qy), py - qy)


def upper_path_matrix(n: int, m: int) -> ExactMatrix:
    """Path matrix of the upper half: entry (i,j) = C(m+j-1, m-j+i)."""
    if n < 1 or m < 0:
        raise ValueError(f"need n >= 1 and m >= 0, got n={n}, m={m}")
    return _build(n, lambda i, j: binomial(m + j - 1, m - j + i))


def lower_path_matrix(n: int, m: int, s: int) -> ExactMatrix:
    """Path matrix of the lower half for cut side 2m and defect index s.

    Row s+1 is the defect row (shifted start, no weight); every other row
    counts paths whose first horizontal step carries weight 1/2.
    """
    if not 0 <= s <= n - 1:
        raise ValueError(f"defect index s={s} outside 0..{n - 1}")
    if m < 1:
        raise ValueError(f"need m >= 1, got m={m}")

    def entry(i, j):
        if i == s + 1:
            return binomial(n + m - s, m + s - j)
        return Fraction(binomial(n + m - i, m + i - j), 2) + binomial(n + m - i, m + i - 1 - j)

    return _build(n, entry)


def odd_lower_path_matrix(n: int, m: int, s: int) -> ExactMatrix:
    """Path matrix of the odd-case lower half, defect at axis vertex s.

    For s != n the last row is a unit vector and expanding along it reduces
    the determinant to lower_path_matrix(n-1, m+1, s-1).
    """
    if not 1 <= s <= n:
        raise ValueError(f"defect index s={s} outside 1..{n}")
    if m < 0:
        raise ValueError(f"need m >= 0, got m={m}")

    def entry(i, j):
        if i == s:
            return binomial(n + m - s + 1, m + s - j)
        return Fraction(binomial(n + m - i, m + i - j + 1), 2) + binomial(n + m - i, m + i - j)

    return _build(n, entry)


# ---------------------------------------------------------------------------
# polynomial-in-m matrices
# ---------------------------------------------------------------------------

def lower_poly_entry(n: int, m, s: int, i: int, j: int) -> Fraction:
    """Entry (i,j) of the polynomial lower-half matrix at the point m."""
    m = Fraction(m)
    if i == s + 1:
        return Fraction(pochhammer(n + 1 + j - 2 * s, n - j)) * pochhammer(s + m + 1 - j, j - 1)
    return (
        Fraction(pochhammer(n + 2 + j - 2 * i, n - j))
        * pochhammer(i + m + 1 - j, j - 1)
        * (m + Fraction(n + 1 - j, 2))
    )


def lower_poly_entry_alt(n: int, m, s: int, i: int, j: int) -> Fraction:
    """The two-summand rewriting of the generic entry (i != s+1 only).

    Splits the entry by whether a path's first step is horizontal, mirroring
    how the path matrix itself arises; must agree with lower_poly_entry.
    """
    if i == s + 1:
        raise ValueError("the alternative form only applies to i != s+1")
    m = Fraction(m)
    return Fraction(pochhammer(n + 1 + j - 2 * i, n - j + 1), 2) * pochhammer(
        i + m + 1 - j, j - 1
    ) + Fraction(pochhammer(n + 2 + j - 2 * i, n - j)) * pochhammer(i + m - j, j)


def lower_poly_matrix(n: int, m, s: int) -> ExactMatrix:
    """Lower-half matrix with row factors pulled so entries are polynomial in m.

    Accepts any rational evaluation point m (the factor checks evaluate at
    half-integers and negative integers).
    """
    if not 0 <= s <= n - 1:
        raise ValueError(f"defect index s={s} outside 0..{n - 1}")
    return _build(n, lambda i, j: lower_poly_entry(n, m, s, i, j))


def _reduced_entry_factors(n: int, s: int, i: int, j: int):
    """Entry (i,j) of the reduced matrix as (constant, multiset of roots).

    The entry is constant * prod over roots r of (m + r).  Generic rows carry
    twice the polynomial entry (the half-integer factor is kept as the whole
    factor 2m+n+1-j); rows with 2i >= n+2 are additionally divided by their
    pulled factor, a division performed exactly on the root multiset.
    """
    if i == s + 1:
        const = pochhammer(n + 1 + j - 2 * s, n - j)
        roots = Counter(Fraction(s + 1 - j + t) for t in range(j - 1))
        return const, roots
    const = 2 * pochhammer(n + 2 + j - 2 * i, n - j)
    if const == 0:
        return 0, Counter()
    roots = Counter(Fraction(i + 1 - j + t) for t in range(j - 1))
    roots[Fraction(n + 1 - j, 2)] += 1
    if 2 * i >= n + 2:
        for t in range(2 * i - n - 1):
            r = Fraction(n + 1 - i + t)
            if roots[r] == 0:
                raise ArithmeticError(f"row factor (m+{r}) does not divide entry ({i},{j})")
            roots[r] -= 1
    return const, roots


def reduced_poly_matrix(n: int, m, s: int) -> ExactMatrix:
    """The matrix left after pulling the per-row integer factors.

    Row i with 2i >= n+2 of the polynomial matrix is divisible by the product
    of (m+k) for k = n+1-i .. i-1; this returns what remains (with the
    generic rows scaled by 2), evaluated at the point m.  Used for the
    vanishing row relations at negative integer m.
    """
    if not 0 <= s <= n - 1:
        raise ValueError(f"defect index s={s} outside 0..{n - 1}")
    m = Fraction(m)

    def entry(i, j):
        const, roots = _reduced_entry_factors(n, s, i, j)
        value = Fraction(const)
        for r, mult in roots.items():
            value *= (m + r) ** mult
        return value

    return _build(n, entry)


def pulled_row_factor(n: int, i: int, m) -> Fraction:
    """The factor pulled from row i (1 when 2i < n+2)."""
    if 2 * i < n + 2:
        return Fraction(1)
    return Fraction(pochhammer(Fraction(m) + n + 1 - i, 2 * i - n - 1))


# ---------------------------------------------------------------------------
# exact determinants
# ---------------------------------------------------------------------------

def det_exact(matrix) -> Fraction:
    """Exact determinant by fraction-free integer elimination.

    Denominators are cleared row by row first; the Bareiss recurrence then
    stays in integers, with every division exact.  The empty matrix has
    determinant 1.
    """
    rows = matrix.rows if isinstance(matrix, ExactMatrix) else tuple(matrix)
    n = len(rows)
    if n == 0:
        return Fraction(1)
    scale = Fraction(1)
    a = []
    for row in rows:
        frow = [Fraction(x) for x in row]
        den = 1
        for x in frow:
            den = den * x.denominator // math.gcd(den, x.denominator)
        scale *= den
        a.append([int(x * den) for x in frow])

    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = a[i][j] * a[k][k] - a[i][k] * a[k][j]
                q, rem = divmod(num, prev)
                if rem:
                    raise ArithmeticError("fraction-free elimination lost exactness")
                a[i][j] = q
            a[i][k] = 0
        prev = a[k][k]
    return Fraction(sign * a[n - 1][n - 1]) / scale



def lower_half_det_count(n: int, m: int, s: int) -> Fraction:
    """Lower-half weighted count via the polynomial matrix determinant.

    Prefactor times det of `lower_poly_matrix`; equals both the determinant
    of `lower_path_matrix` and the oracle count of the lower-half region.
    """
    if m < 1:
        raise ValueError(f"need m >= 1, got m={m}")
    den = 2 * n - 2 * s
    for i in range(1, n + 1):
        den *= factorial(2 * n + 1 - 2 * i)
    prefactor = Fraction((n + m - s) * (s + m), den)
    return prefactor * det_exact(lower_poly_matrix(n, Fraction(m), s))


# ---------------------------------------------------------------------------
# the product determinant identity used for the upper half
# ---------------------------------------------------------------------------

def factor_chain_matrix(x: Sequence, a: Sequence, b: Sequence) -> ExactMatrix:
    """Matrix with entry (i,j) = prod_t>i (x_j + a_t) * prod_2<=t<=i (x_j + b_t).

    x, a, b are 1-based sequences of equal length n (a_1 and b_1 unused).
    Its determinant factors completely; see factor_chain_det.
    """
    n = len(x) - 1

    def entry(i, j):
        v = Fraction(1)
        for t in range(i + 1, n + 1):
            v *= x[j] + a[t]
        for t in range(2, i + 1):
            v *= x[j] + b[t]
        return v

    return _build(n, entry)


def factor_chain_det(x: Sequence, a: Sequence, b: Sequence) -> Fraction:
    """Closed form: prod_{i<j} (x_i - x_j) * prod_{2<=i<=j<=n} (b_i - a_j)."""
    n = len(x) - 1
    v = Fraction(1)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            v *= x[i] - x[j]
    for i in range(2, n + 1):
        for j in range(i, n + 1):
            v *= b[i] - a[j]
    return v

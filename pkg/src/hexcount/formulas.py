"""Closed-form product evaluations for hexagon tiling counts.

Everything in this module is a pure evaluator of a hypergeometric-style
product: MacMahon's box formula, the two closed forms for a hexagon with a
two-triangle defect on its symmetry axis (even and odd cut side), the closed
forms for the weighted matching counts of the upper and lower halves, and the
asymptotic proportion of defective tilings among all tilings.

All counting formulas are evaluated in exact rational arithmetic and asserted
integral at the end; a non-integral result is a hard failure, never a
truncation.  Floats appear only in `asymptotic_proportion`, which is a limit
statement rather than a count.

Conventions used throughout the package live here:

    h(n)   = 0! 1! ... (n-1)!          (superfactorial), h(0) = h(1) = 1
    n!!    = n (n-2) (n-4) ...,        (-1)!! = 0!! = 1
    (a)_k  = a (a+1) ... (a+k-1),      (a)_0 = 1, (a)_(-k) = 1 / (a-k)_k
    C(a,b) = 0 for b < 0 or b > a      (lattice-path semantics, a >= 0)
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Union

Rational = Union[int, Fraction]


# ---------------------------------------------------------------------------
# special functions
# ---------------------------------------------------------------------------

def factorial(n: int) -> int:
    if n < 0:
        raise ValueError(f"factorial of negative argument {n}")
    return math.factorial(n)


def double_factorial(n: int) -> int:
    """n!! with the conventions (-1)!! = 0!! = 1."""
    if n in (-1, 0):
        return 1
    if n < -1:
        raise ValueError(f"double factorial undefined for {n}")
    out = 1
    while n > 1:
        out *= n
        n -= 2
    return out


def superfactorial(n: int) -> int:
    """h(n) = product of i! for 0 <= i < n; h(0) = 1."""
    if n < 0:
        raise ValueError(f"superfactorial of negative argument {n}")
    out, fact = 1, 1
    for i in range(1, n):
        fact *= i
        out *= fact
    return out


def binomial(a: int, b: int) -> int:
    """C(a, b) for integer a >= 0, zero outside 0 <= b <= a."""
    if a < 0:
        raise ValueError(f"binomial with negative upper index {a}")
    if b < 0 or b > a:
        return 0
    return math.comb(a, b)


def pochhammer(a: Rational, k: int) -> Rational:
    """Shifted factorial (a)_k = a(a+1)...(a+k-1).

    Empty products are 1.  Negative k uses the reciprocal extension
    (a)_(-k) = 1/(a-k)_k and raises if that hits a zero factor.
    """
    if k < 0:
        denom = pochhammer(a + k, -k)
        if denom == 0:
            raise ValueError(f"pochhammer pole: ({a})_({k})")
        return Fraction(1, 1) / denom
    out: Rational = a ** 0  # 1 of the right arithmetic type
    for t in range(k):
        out = out * (a + t)
    return out


def _exact_int(value: Rational, what: str) -> int:
    value = Fraction(value)
    if value.denominator != 1:
        raise ArithmeticError(f"{what} evaluated to non-integer {value}")
    return value.numerator


# ---------------------------------------------------------------------------
# MacMahon's box formula
# ---------------------------------------------------------------------------

def box_count(a: int, b: int, c: int) -> int:
    """Number of rhombus tilings of the full hexagon with sides a, b, c.

    This is the triple product over 1<=i<=a, 1<=j<=b, 1<=k<=c of
    (i+j+k-1)/(i+j+k-2).  The inner k-product telescopes to
    (i+j+c-1)/(i+j-1), which is how we evaluate it; the result is asserted
    integral.
    """
    if a < 0 or b < 0 or c < 0:
        raise ValueError(f"box_count needs nonnegative sides, got {(a, b, c)}")
    num = den = 1
    for i in range(1, a + 1):
        for j in range(1, b + 1):
            num *= i + j + c - 1
            den *= i + j - 1
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError("box product did not divide out")
    return q


# ---------------------------------------------------------------------------
# the two defect-count closed forms
# ---------------------------------------------------------------------------

def even_case_count(n: int, m: int, s: int) -> int:
    """Tilings of the hexagon n,n,2m,n,n,2m minus the axis defect at vertex s+1.

    The axis vertices are numbered 1..n+1 from left to right, the two outer
    ones being the midpoints of the sides of length 2m; hence 0 <= s <= n,
    with s and n-s giving mirror-image defects and equal counts.
    """
    if n < 1 or m < 1:
        raise ValueError(f"need n >= 1 and m >= 1, got n={n}, m={m}")
    if not 0 <= s <= n:
        raise ValueError(f"defect index s={s} outside 0..{n}")
    num = (
        (2 * m - 1)
        * binomial(2 * m - 2, m - 1)
        * binomial(2 * n - 2 * s, n - s)
        * binomial(2 * s, s)
        * box_count(n, n, 2 * m)
    )
    den = binomial(2 * m + 2 * n, m + n)
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError("even-case product did not divide out")
    return q


def odd_case_count(n: int, m: int, s: int) -> int:
    """Tilings of the hexagon n,n,2m+1,n,n,2m+1 minus the axis defect at vertex s.

    For odd cut sides all n axis vertices are interior, so 1 <= s <= n; the
    count is invariant under s -> n+1-s.
    """
    if n < 1 or m < 0:
        raise ValueError(f"need n >= 1 and m >= 0, got n={n}, m={m}")
    if not 1 <= s <= n:
        raise ValueError(f"defect index s={s} outside 1..{n}")
    num = (
        (2 * m + 1)
        * binomial(2 * m, m)
        * binomial(2 * n - 2 * s, n - s)
        * binomial(2 * s - 2, s - 1)
        * box_count(n, n, 2 * m + 1)
    )
    den = binomial(2 * m + 2 * n, m + n)
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError("odd-case product did not divide out")
    return q


# ---------------------------------------------------------------------------
# closed forms for the two halves of the split graph
# ---------------------------------------------------------------------------

def upper_half_count(n: int, m: int) -> int:
    """Matching count of the upper half: h(n) prod(2m+2j-i) / prod (2j-2)!.

    The double product runs over 2 <= i <= j <= n.  Independent of the defect
    position s, since the defect only removes axis cells.
    """
    if n < 1 or m < 0:
        raise ValueError(f"need n >= 1 and m >= 0, got n={n}, m={m}")
    num = superfactorial(n)
    for j in range(2, n + 1):
        for i in range(2, j + 1):
            num *= 2 * m + 2 * j - i
    den = 1
    for j in range(1, n + 1):
        den *= factorial(2 * j - 2)
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError("upper-half product did not divide out")
    return q


def _half_integer_product(m: Rational, n: int) -> Fraction:
    """prod over k=1..n-2 of (m + k + 1/2)^min(k, n-1-k)."""
    out = Fraction(1)
    for k in range(1, n - 1):
        out *= Fraction(2 * m + 2 * k + 1, 2) ** min(k, n - 1 - k)
    return out


def _integer_product(m: Rational, n: int) -> Fraction:
    """prod over k=0..n of (m + k)^min(k+1, n-k+1)."""
    out = Fraction(1)
    for k in range(0, n + 1):
        out *= Fraction(m + k) ** min(k + 1, n - k + 1)
    return out


def lower_half_det_closed(n: int, m: Rational, s: int) -> Fraction:
    """Closed form for the determinant of the lower-half polynomial matrix.

    Valid for 0 <= s <= n-1.  As a function of m this is the product of a
    constant, all half-integer linear factors (m+k+1/2), and all integer
    linear factors (m+k), divided by (m+s)(m+n-s).
    """
    if not 0 <= s <= n - 1:
        raise ValueError(f"defect index s={s} outside 0..{n - 1}")
    lead = Fraction(
        2 ** math.comb(n - 1, 2)
        * superfactorial(n)
        * double_factorial(2 * n - 2 * s - 1)
        * double_factorial(2 * s - 1),
        factorial(n - s - 1) * factorial(s),
    )
    value = lead * _half_integer_product(m, n) * _integer_product(m, n)
    return value / Fraction((m + s) * (m + n - s))


def lower_half_count(n: int, m: int, s: int) -> Fraction:
    """Weighted matching count of the lower half (prefactor times determinant).

    The count is a dyadic rational: the lower half carries weight-1/2 rhombus
    positions along the symmetry axis.  Valid for 0 <= s <= n-1; the s = n
    defect is the mirror image of s = 0.
    """
    if n < 1 or m < 1:
        raise ValueError(f"need n >= 1 and m >= 1, got n={n}, m={m}")
    den = 2 * n - 2 * s
    for i in range(1, n + 1):
        den *= factorial(2 * n + 1 - 2 * i)
    prefactor = Fraction((n + m - s) * (s + m), den)
    return prefactor * lower_half_det_closed(n, m, s)


# ---------------------------------------------------------------------------
# combined product expressions (alternative routes to the two counts)
# ---------------------------------------------------------------------------

def even_case_product(n: int, m: int, s: int) -> int:
    """Even-case count as one combined product over linear factors in m.

    Equals even_case_count(n, m, s); the agreement of the two is one of the
    cross-checks run by the verification suite.
    """
    if n < 1 or m < 1:
        raise ValueError(f"need n >= 1 and m >= 1, got n={n}, m={m}")
    if not 0 <= s <= n:
        raise ValueError(f"defect index s={s} outside 0..{n}")
    value = Fraction(
        superfactorial(n) ** 2
        * double_factorial(2 * n - 2 * s - 1)
        * double_factorial(2 * s - 1),
        superfactorial(2 * n) * factorial(n - s) * factorial(s),
    )
    value *= Fraction(2) ** (math.comb(n, 2) - 1)
    for j in range(2, n + 1):
        for i in range(2, j + 1):
            value *= 2 * m + 2 * j - i
    value *= _half_integer_product(m, n) * _integer_product(m, n)
    return _exact_int(value, "even-case combined product")


def odd_upper_half_count(n: int, m: int) -> int:
    """Matching count of the odd-case upper half.

    Forced border tiles reduce the odd upper half at (n, m) to the even upper
    half at (n+1, m), so this is upper_half_count(n + 1, m).
    """
    return upper_half_count(n + 1, m)


def odd_lower_half_count(n: int, m: int, s: int) -> Fraction:
    """Weighted matching count of the odd-case lower half, 1 <= s <= n-1.

    Row expansion of its path matrix reduces it to the even lower half at
    (n-1, m+1, s-1); this evaluates the resulting product directly.  The
    n = 1 lower half is a forced strip with m+1 tilings.
    """
    if not 1 <= s <= max(n - 1, 1):
        raise ValueError(f"defect index s={s} outside the reduced range")
    if n == 1:
        return Fraction(m + 1)
    value = Fraction(
        superfactorial(n - 1)
        * double_factorial(2 * n - 2 * s - 1)
        * double_factorial(2 * s - 3),
        factorial(n - s) * factorial(s - 1),
    )
    value *= Fraction(2) ** (math.comb(n - 2, 2) - 1)
    for i in range(0, n - 1):
        value /= factorial(2 * i + 1)
    for k in range(1, n - 2):
        value *= Fraction(2 * (m + 1) + 2 * k + 1, 2) ** min(k, n - 2 - k)
    for k in range(0, n):
        value *= Fraction(m + 1 + k) ** min(k + 1, n - k)
    return value


def odd_case_product(n: int, m: int, s: int) -> int:
    """Odd-case count as 2^(n-1) times the two half closed forms.

    Must equal odd_case_count(n, m, s).  The defect at s = n is handled
    through the mirror symmetry s -> n+1-s.
    """
    if n < 1 or m < 0:
        raise ValueError(f"need n >= 1 and m >= 0, got n={n}, m={m}")
    if not 1 <= s <= n:
        raise ValueError(f"defect index s={s} outside 1..{n}")
    if s == n and n > 1:
        s = 1
    value = 2 ** (n - 1) * odd_upper_half_count(n, m) * odd_lower_half_count(n, m, s)
    return _exact_int(value, "odd-case combined product")


# ---------------------------------------------------------------------------
# asymptotics
# ---------------------------------------------------------------------------

def asymptotic_proportion(alpha: float, beta: float, gamma: float) -> float:
    """Limit of defect-count / box-count for sides (alpha t, beta t), defect
    at vertex gamma t, as t grows.

    Evaluates (1/4pi) sqrt(beta (2 alpha + beta) / (gamma (alpha - gamma))).
    Homogeneous of degree zero and symmetric under gamma -> alpha - gamma.
    """
    if not (alpha > 0 and beta > 0 and gamma > 0):
        raise ValueError("alpha, beta, gamma must be positive")
    if gamma >= alpha:
        raise ValueError(f"need gamma < alpha, got gamma={gamma}, alpha={alpha}")
    return math.sqrt(beta * (2 * alpha + beta) / (gamma * (alpha - gamma))) / (4 * math.pi)

"""Summation identities and the vanishing linear relations."""

from fractions import Fraction

import pytest

from hexcount import hyperid as hy
from hexcount.formulas import pochhammer
from hexcount.pathdet import lower_poly_entry, reduced_poly_matrix


def test_terminating_sum_basics():
    one_term = hy.HypergeomSpec((Fraction(0),), (Fraction(5),), 0)
    assert hy.terminating_sum(one_term) == 1
    # a zero upstairs kills every later term
    spec = hy.HypergeomSpec((Fraction(7, 2), Fraction(0)), (Fraction(3),), 6)
    assert hy.terminating_sum(spec) == 1


def test_terminating_sum_two_terms_by_hand():
    # sum over t of (-1)_t (-n)_t / ((c)_t t!) = 1 + n/c
    for n in range(0, 5):
        c = Fraction(7, 2)
        spec = hy.HypergeomSpec((Fraction(-1), Fraction(-n)), (c,), n)
        assert hy.terminating_sum(spec) == 1 + Fraction(n) / c


def test_hypergeom_spec_validation():
    with pytest.raises(ValueError):
        hy.HypergeomSpec((Fraction(1, 2),), (Fraction(2),), 3)  # never terminates
    with pytest.raises(ValueError):
        hy.HypergeomSpec((Fraction(-5),), (Fraction(-2),), 5)  # pole inside sum


def test_vandermonde_small_cases():
    assert hy.vandermonde_check(Fraction(3, 4), 0, Fraction(5))
    assert hy.vandermonde_check(Fraction(-1), 1, Fraction(2))
    lhs = hy.terminating_sum(hy.HypergeomSpec((Fraction(-1), Fraction(-1)), (Fraction(2),), 1))
    assert lhs == Fraction(3, 2)


def test_vandermonde_suite_clean():
    report = hy.run_vandermonde_suite(200, seed=7)
    assert report["tuples_checked"] == 200
    assert report["failures"] == []


def test_pfaff_half_family():
    # the balanced series with 1/2 upstairs, as used by the row relations;
    # parameter combinations that hit a pole of the identity are skipped
    checked = 0
    for b in range(1, 4):
        for n in range(0, 4):
            for c in (Fraction(5, 2), Fraction(7, 2), Fraction(4)):
                try:
                    assert hy.pfaff_saalschuetz_check(Fraction(1, 2), Fraction(b), n, c)
                except (ValueError, ZeroDivisionError):
                    continue
                checked += 1
    assert checked >= 24


def test_pfaff_suite_clean():
    report = hy.run_pfaff_suite(200, seed=7)
    assert report["tuples_checked"] == 200
    assert report["failures"] == []


# --- half-integer column relations -------------------------------------------

def test_half_root_l_window_size():
    for n in range(2, 9):
        for k in range(1, n - 1):
            assert len(hy.half_root_valid_l(n, k)) == min(k + 1, n - k)


def test_half_root_relations_vanish():
    report = hy.run_half_root_suite(6)
    assert report["failures"] == []
    assert report["tuples_checked"] > 0


def test_half_root_vacuous_for_n2():
    # no k in 1..n-2 exists, so the suite has nothing to check
    for n in (1, 2):
        for s in range(0, n):
            for k in range(1, n - 1):
                raise AssertionError("unreachable")


def test_half_root_range_validation():
    with pytest.raises(ValueError):
        hy.half_root_column_relation(5, 2, 0, 2, 1)  # i == s+1
    with pytest.raises(ValueError):
        hy.half_root_column_relation(5, 2, 5, 1, 0)  # l > k
    with pytest.raises(ValueError):
        hy.half_root_column_relation(5, 4, 0, 1, 0)  # k > n-2


def test_paired_half_root_vectors_annihilate_everything():
    for n in range(2, 7):
        for s in range(0, n):
            for k in range(1, n - 1):
                vectors = hy.paired_half_root_vectors(n, k, s)
                assert len(vectors) == min(k, n - k - 1)
                m = -Fraction(2 * k + 1, 2)
                for vec in vectors:
                    for i in range(1, n + 1):
                        dot = sum(
                            c * lower_poly_entry(n, m, s, i, j + 1)
                            for j, c in enumerate(vec)
                            if c
                        )
                        assert dot == 0


# --- integer row relations ----------------------------------------------------

def test_integer_root_relations_vanish():
    report = hy.run_integer_root_suite(6)
    assert report["failures"] == []
    assert report["tuples_checked"] > 0


def test_integer_root_variant_dispatch():
    assert hy._variant_for(6, 1, 2) == 1
    assert hy._variant_for(6, 5, 2) == 2
    assert hy._variant_for(6, 3, 2) == 3
    assert hy._variant_for(6, 4, 1) == 4
    assert hy._variant_for(6, 2, 2) is None  # k == s
    assert hy._variant_for(6, 4, 2) is None  # k == n-s


def test_integer_root_range_validation():
    with pytest.raises(ValueError):
        hy.integer_root_row_relation(6, 3, 4, 3, 1)  # s > n/2
    with pytest.raises(ValueError):
        hy.integer_root_row_relation(6, 1, 2, 3, 1)  # wrong variant for k
    with pytest.raises(ValueError):
        hy.integer_root_row_relation(6, 1, 2, 1, 7)  # column out of range


def test_variant4_tail_sign_depends_on_parity():
    # flipping the (-1)^n on the final term must break the relation
    found = []
    for n, k, s in [(4, 3, 0), (5, 3, 1), (6, 4, 1), (7, 4, 2)]:
        if hy._variant_for(n, k, s) != 4:
            continue
        cmat = reduced_poly_matrix(n, Fraction(-k), s)
        for j in range(1, n + 1):
            if cmat.entry(s + 1, j) != 0:
                assert hy.integer_root_row_relation(n, k, s, 4, j)
                found.append((n, k, s, j))
                break
    assert found


def test_merged_sum_term_identity():
    # inside the first sum of variants 3 and 4, (i-k)_(n+1-2i) times the
    # unreduced row equals the reduced-row expression, wherever the
    # negative-index form is defined
    checked = 0
    for n in range(3, 7):
        for s in range(0, n // 2 + 1):
            if s > n - 1:
                continue
            for k in range(s + 1, n - s):
                cmat = reduced_poly_matrix(n, Fraction(-k), s)
                for i in range(k + 1, (n + 1) // 2 + 1):
                    if i == s + 1:
                        continue
                    for j in range(1, n + 1):
                        try:
                            rhs = (
                                Fraction(pochhammer(n + 2 + j - 2 * i, n - j))
                                * pochhammer(Fraction(i - k + 1 - j), j - 2 * i + n)
                                * (-2 * k + n + 1 - j)
                            )
                        except ValueError:
                            continue  # reciprocal form hits a pole; skip
                        lhs = pochhammer(Fraction(i - k), n + 1 - 2 * i) * cmat.entry(i, j)
                        assert lhs == rhs
                        checked += 1
    assert checked > 50

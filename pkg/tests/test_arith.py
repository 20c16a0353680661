from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from chainmirror.arith import frac_part, rat_from_str, rat_str, solve_congruence


def test_frac_part_examples():
    assert frac_part(Fraction(14, 9)) == Fraction(5, 9)
    assert frac_part(Fraction(-1, 3)) == Fraction(2, 3)
    assert frac_part(Fraction(3)) == 0


rationals = st.fractions(
    min_value=Fraction(-10**6), max_value=Fraction(10**6), max_denominator=10**6)


@given(rationals)
def test_frac_part_reconstructs(r):
    f = frac_part(r)
    assert 0 <= f < 1
    assert (r - f).denominator == 1


def test_solve_congruence_examples():
    assert solve_congruence(2, 8, 9) == 4
    assert solve_congruence(1, 0, 5) == 0
    assert solve_congruence(2, 1, 4) is None


def _scan_congruence(a, b, n):
    # independent oracle: direct scan for the least solution
    return next((x for x in range(n) if (a * x - b) % n == 0), None)


@given(st.integers(-50, 50), st.integers(-50, 50), st.integers(1, 40))
def test_solve_congruence_matches_scan(a, b, n):
    assert solve_congruence(a, b, n) == _scan_congruence(a, b, n)


@given(st.integers(-10**9, 10**9), st.integers(-10**9, 10**9), st.integers(1, 10**6))
def test_solve_congruence_postcondition(a, b, n):
    x = solve_congruence(a, b, n)
    if x is not None:
        assert 0 <= x < n
        assert (a * x - b) % n == 0


def test_rat_str_round_trip():
    for r in (Fraction(-1, 3), Fraction(4), Fraction(0), Fraction(22, 7)):
        assert rat_from_str(rat_str(r)) == r
    assert rat_str(Fraction(4)) == "4/1"
    assert rat_str(Fraction(-1, 3)) == "-1/3"


def test_solve_congruence_rejects_bad_modulus():
    with pytest.raises(ValueError):
        solve_congruence(1, 1, 0)

import itertools
import math

import pytest
from hypothesis import given, strategies as st

from t2interval import (
    ONE,
    ZERO,
    Degeneracy,
    Type2Interval,
    Type2Quad,
    add,
    degeneracy,
    div,
    equals,
    inner_core,
    make,
    mul,
    outer_hull,
    reciprocal,
    scalar_mul,
    strict_subset_of,
    sub,
    subset_of,
)
from t2interval.core import dumps, format_number, format_quad, from_json, loads, to_json
from t2interval.errors import NonFiniteInput, NonFiniteResult, OrderingViolation, ZeroInDenominator
from t2interval.oracle import corner_result

from conftest import EX31, EX32, EX33, nonzero_quads, quads


# -- construction -------------------------------------------------------------

def test_make_normalises_to_float():
    a = make(1, 2, 3, 4)
    assert a.quad == (1.0, 2.0, 3.0, 4.0)
    assert all(type(v) is float for v in a.quad)


def test_ordering_violation_reports_first_pair():
    with pytest.raises(OrderingViolation) as exc:
        make(2, 1, 3, 4)
    assert exc.value.pair == (1, 2)
    with pytest.raises(OrderingViolation) as exc:
        make(1, 2, 5, 4)
    assert exc.value.pair == (3, 4)


@pytest.mark.parametrize("bad", [math.nan, math.inf, -math.inf])
def test_non_finite_rejected(bad):
    with pytest.raises(NonFiniteInput):
        make(0, 0, 0, bad)


def test_bool_and_strings_rejected():
    with pytest.raises(TypeError):
        Type2Interval(True, 1, 2, 3)
    with pytest.raises(TypeError):
        Type2Interval("1", 1, 2, 3)


def test_values_are_immutable():
    a = make(1, 2, 3, 4)
    with pytest.raises(Exception):
        a.lower_lo = 0.0


def test_degeneracy():
    assert degeneracy(make(3, 3, 3, 3)) is Degeneracy.DEGENERATE1
    assert degeneracy(make(1, 1, 3, 3)) is Degeneracy.DEGENERATE2
    assert degeneracy(make(1, 2, 3, 3)) is Degeneracy.GENERAL


def test_hull_and_core():
    a = EX31[0]
    assert outer_hull(a) == (-5, 3)
    assert inner_core(a) == (-2, -1)


def test_subset_and_equality():
    a, b = make(-1, 0, 1, 2), make(-2, 0, 1, 3)
    assert subset_of(a, b)
    assert not subset_of(b, a)
    assert subset_of(a, a)
    assert strict_subset_of(a, b)
    assert not strict_subset_of(a, a)
    assert equals(a, make(-1.0, 0.0, 1.0, 2.0))
    assert equals(make(0.0, 0, 0, 0), make(-0.0, 0, 0, 0))


# -- worked examples ----------------------------------------------------------

def test_add_worked_example():
    assert add(*EX31).quad == (-8, -1, 2, 9)


def test_sub_worked_example():
    assert sub(*EX31).quad == (-11, -5, -2, 6)


def test_scalar_worked_examples():
    a = EX32[0]
    assert scalar_mul(2, a).quad == (-8, -2, 4, 10)
    assert scalar_mul(-2, a).quad == (-10, -4, 2, 8)
    assert scalar_mul(0, a).quad == (0, 0, 0, 0)


def test_mul_worked_example():
    assert mul(*EX32).quad == (-30, -6, 3, 24)


def test_printed_inner_set_does_not_reproduce_worked_example():
    a, b = EX32
    a1, a2, a3, a4 = a.quad
    b1, b2, b3, b4 = b.quad
    printed = {a2 * b2, a3 * b2, a3 * b3, a4 * b2}
    corrected = {a2 * b2, a2 * b3, a3 * b2, a3 * b3}
    assert corrected == {3, 1, -6, -2}
    assert (min(corrected), max(corrected)) == (-6, 3)
    assert (min(printed), max(printed)) != (-6, 3)


def test_div_worked_example_value():
    assert div(*EX33).quad == (-2, -0.5, 0.5, 3)


def test_reciprocal():
    assert reciprocal(make(1, 2, 4, 8)).quad == (0.125, 0.25, 0.5, 1)
    assert reciprocal(make(-8, -4, -2, -1)).quad == (-1, -0.5, -0.25, -0.125)
    with pytest.raises(ZeroInDenominator):
        reciprocal(make(-1, 0, 1, 2))
    with pytest.raises(ZeroInDenominator):
        reciprocal(make(0, 1, 2, 3))


def test_operator_sugar():
    a, b = EX31
    assert (a + b).quad == add(a, b).quad
    assert (a - b).quad == sub(a, b).quad
    assert (2 * a).quad == scalar_mul(2, a).quad
    assert (a * 2).quad == scalar_mul(2, a).quad
    assert (-a).quad == scalar_mul(-1, a).quad
    assert (a / 2).quad == scalar_mul(0.5, a).quad
    assert (a + 1).quad == add(a, ONE).quad
    assert (1 - a).quad == sub(ONE, a).quad
    with pytest.raises(ZeroInDenominator):
        a / 0


def test_overflow_raises_non_finite_result():
    big = make(1e308, 1e308, 1e308, 1e308)
    with pytest.raises(NonFiniteResult):
        add(big, big)
    with pytest.raises(NonFiniteResult):
        mul(big, big)


# -- formatting and JSON ------------------------------------------------------

def test_format():
    assert format_number(3.0) == "3"
    assert format_number(-0.5) == "-0.5"
    assert format_quad((-8.0, -1.0, 2.0, 9.0)) == "[(-8, -1), (2, 9)]"
    assert str(make(-8, -1, 2, 9)) == "[(-8, -1), (2, 9)]"


def test_json_shape():
    assert to_json(make(1, 2, 3, 4)) == {"lower": [1.0, 2.0], "upper": [3.0, 4.0]}


@given(quads())
def test_json_round_trip(a):
    assert loads(dumps(a)).quad == a.quad
    assert from_json(to_json(a)).quad == a.quad


def test_from_json_validates():
    with pytest.raises(OrderingViolation):
        from_json({"lower": [2, 1], "upper": [3, 4]})
    with pytest.raises((KeyError, ValueError, TypeError)):
        from_json({"lower": [1, 2]})


def test_quad_type():
    q = Type2Quad(0, 5, 5, 0)
    assert not q.proper
    assert q.to_json() == {"quad": [0, 5, 5, 0], "proper": False}
    with pytest.raises(OrderingViolation):
        q.to_interval()
    assert Type2Quad.of(make(1, 2, 3, 4)).proper


# -- properties ---------------------------------------------------------------

@given(quads(), quads())
def test_add_commutes(a, b):
    assert add(a, b).quad == add(b, a).quad


@given(quads(), quads())
def test_mul_commutes(a, b):
    assert mul(a, b).quad == mul(b, a).quad


@given(quads())
def test_identities(a):
    assert add(a, ZERO).quad == a.quad
    assert mul(a, ONE).quad == a.quad
    assert scalar_mul(1, a).quad == a.quad


@given(quads(), st.floats(-100, 100))
def test_scalar_matches_degenerate_mul(a, lam):
    # scalar rule coincides with multiplying by the 1-degenerate interval
    assert scalar_mul(lam, a).quad == mul(make(lam, lam, lam, lam), a).quad


@given(quads(), quads())
def test_results_always_valid(a, b):
    for r in (add(a, b), sub(a, b), mul(a, b)):
        assert r.lower_lo <= r.lower_hi <= r.upper_lo <= r.upper_hi


@given(quads(), nonzero_quads())
def test_div_is_mul_by_reciprocal(a, b):
    assert div(a, b).quad == mul(a, reciprocal(b)).quad


@pytest.mark.parametrize("op, fn", [("add", add), ("sub", sub), ("mul", mul), ("div", div)])
@given(a=quads(), b=nonzero_quads())
def test_formula_equals_oracle(op, fn, a, b):
    assert fn(a, b).quad == corner_result(op, a, b).quad


@given(quads(), quads())
def test_equality_is_mutual_containment(a, b):
    assert equals(a, b) == (subset_of(a, b) and subset_of(b, a))
    assert subset_of(a, a)


def _int_quads(lo, hi):
    return [make(*q) for q in itertools.combinations_with_replacement(range(lo, hi + 1), 4)]


def test_exhaustive_small_grid_against_oracle():
    grid = _int_quads(-2, 2)
    for a in grid:
        for b in grid:
            assert add(a, b).quad == corner_result("add", a, b).quad
            assert sub(a, b).quad == corner_result("sub", a, b).quad
            assert mul(a, b).quad == corner_result("mul", a, b).quad
            if not b.lower_lo <= 0 <= b.upper_hi:
                assert div(a, b).quad == corner_result("div", a, b).quad

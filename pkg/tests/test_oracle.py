import itertools

import numpy as np
import pytest
from hypothesis import given

from t2interval import Type2Interval, make
from t2interval.errors import ZeroInDenominator
from t2interval.oracle import (
    BinaryOp,
    Type1Interval,
    corner_result,
    corner_results,
    corner_witnesses,
    corners,
    sample_membership,
    type1_op,
)

from conftest import EX31, EX32, EX33, nonzero_quads, quads


def test_type1_examples():
    assert type1_op("add", Type1Interval(1, 2), Type1Interval(3, 4)) == Type1Interval(4, 6)
    assert type1_op("mul", Type1Interval(-1, 2), Type1Interval(-3, 4)) == Type1Interval(-6, 8)
    assert type1_op("div", Type1Interval(1, 2), Type1Interval(2, 4)) == Type1Interval(0.25, 1)
    assert type1_op("sub", Type1Interval(1, 2), Type1Interval(3, 4)) == Type1Interval(-3, -1)


def test_type1_rejects_bad_input():
    with pytest.raises(ValueError):
        Type1Interval(2, 1)
    with pytest.raises(ValueError):
        Type1Interval(0, float("inf"))
    with pytest.raises(ZeroInDenominator):
        type1_op("div", Type1Interval(1, 2), Type1Interval(-1, 1))


def test_op_tag_parsing():
    assert BinaryOp.parse("MUL") is BinaryOp.MUL
    assert BinaryOp.parse(BinaryOp.DIV) is BinaryOp.DIV
    with pytest.raises(ValueError):
        BinaryOp.parse("pow")


def test_corners_order():
    got = corners(make(1, 2, 3, 4))
    assert got == [Type1Interval(1, 3), Type1Interval(1, 4), Type1Interval(2, 3), Type1Interval(2, 4)]


def test_corner_add_worked_example():
    assert corner_result("add", *EX31).quad == (-8, -1, 2, 9)


def test_corner_sub_worked_example():
    assert corner_result("sub", *EX31).quad == (-11, -5, -2, 6)


def test_corner_mul_worked_example():
    assert corner_result("mul", *EX32).quad == (-30, -6, 3, 24)


def test_corner_div_disagrees_with_printed_quotient():
    got = corner_result("div", *EX33)
    assert got.quad == (-2, -0.5, 0.5, 3)
    assert got.quad != (-2, -1 / 3, 0.5, 3)


def test_corner_div_zero_denominator():
    with pytest.raises(ZeroInDenominator):
        corner_result("div", EX31[0], make(-1, 0, 1, 2))
    with pytest.raises(ZeroInDenominator):
        corner_results("div", [EX31[0].quad], [(-1, 0, 1, 2)])


@pytest.mark.parametrize("op", ["add", "sub", "mul", "div"])
@given(a=quads(), b=nonzero_quads())
def test_every_output_endpoint_attained_by_a_corner(op, a, b):
    res = corner_result(op, a, b)
    members = corner_witnesses(op, a, b)
    attained = [type1_op(op, ma, mb) for ma, mb in members]
    assert attained[0].lo == res.lower_lo
    assert attained[1].lo == res.lower_hi
    assert attained[2].hi == res.upper_lo
    assert attained[3].hi == res.upper_hi


@pytest.mark.parametrize("op", ["add", "sub", "mul", "div"])
@given(a=quads(), b=nonzero_quads())
def test_two_degenerate_collapse(op, a, b):
    a2 = make(a.lower_lo, a.lower_lo, a.upper_hi, a.upper_hi)
    b2 = make(b.lower_lo, b.lower_lo, b.upper_hi, b.upper_hi)
    res = corner_result(op, a2, b2)
    t1 = type1_op(op, Type1Interval(a2.lower_lo, a2.upper_hi), Type1Interval(b2.lower_lo, b2.upper_hi))
    assert res.quad == (t1.lo, t1.lo, t1.hi, t1.hi)


def test_batched_oracle_matches_scalar(rng):
    A = np.sort(rng.uniform(-5, 5, (300, 4)), axis=1)
    B = np.sort(rng.uniform(0.5, 5, (300, 4)), axis=1)
    for op in ("add", "sub", "mul", "div"):
        got = corner_results(op, A, B)
        for i in range(0, 300, 7):
            assert tuple(got[i]) == corner_result(op, Type2Interval(*A[i]), Type2Interval(*B[i])).quad


@pytest.mark.parametrize("op", ["add", "sub", "mul"])
def test_membership_sound_worked_examples(op):
    for a, b in (EX31, EX32, EX33):
        rep = sample_membership(op, a, b, 10_000, seed=42)
        assert rep.violations == 0
        assert all(c >= 0 for c in rep.coverage)


def test_membership_div_sound():
    rep = sample_membership("div", *EX33, 10_000, seed=42)
    assert rep.violations == 0


def test_membership_degenerate_attains_extremes_exactly():
    a, b = make(2, 2, 2, 2), make(-3, -3, -3, -3)
    for op in ("add", "sub", "mul", "div"):
        rep = sample_membership(op, a, b, 100, seed=1)
        assert rep.violations == 0
        assert rep.coverage == (0.0, 0.0, 0.0, 0.0)


def test_membership_report_json_shape():
    rep = sample_membership("mul", *EX32, 1000, seed=42)
    js = rep.to_json()
    assert {"op", "violations", "n", "seed", "coverage"} <= set(js)
    assert js["op"] == "mul" and js["n"] == 1000 and js["seed"] == 42 and len(js["coverage"]) == 4


def test_membership_flags_an_unsound_claim():
    # a claim narrower than the truth must be caught
    rep = sample_membership("mul", *EX32, 10_000, seed=3, claimed=make(-20, -6, 3, 24))
    assert rep.violations > 0


def test_membership_independent_of_workers():
    a, b = EX32
    one = sample_membership("mul", a, b, 200_000, seed=9, workers=1)
    many = sample_membership("mul", a, b, 200_000, seed=9, workers=4)
    assert one.violations == many.violations
    assert one.extremes == many.extremes
    assert one.members == many.members


def test_membership_deterministic_per_seed():
    a, b = EX31
    r1 = sample_membership("sub", a, b, 5000, seed=5)
    r2 = sample_membership("sub", a, b, 5000, seed=5)
    r3 = sample_membership("sub", a, b, 5000, seed=6)
    assert r1.extremes == r2.extremes
    assert r1.extremes != r3.extremes


def test_membership_witness_members_reproduce_extremes():
    rep = sample_membership("div", *EX33, 10_000, seed=42)
    for k, (al, au, bl, bu) in enumerate(rep.members):
        r = type1_op("div", Type1Interval(al, au), Type1Interval(bl, bu))
        assert (r.lo, r.lo, r.hi, r.hi)[k] == rep.extremes[k]


def test_quotient_lower_bound_supremum_is_minus_half():
    # the largest attainable quotient lower bound is -1/2, reached at a_L=-1, b_L=2
    a, b = EX33
    best = max(
        type1_op("div", Type1Interval(al, au), Type1Interval(bl, bu)).lo
        for al, au, bl, bu in itertools.product(*(np.linspace(lo, hi, 9) for lo, hi in ((-2, -1), (1, 3), (1, 2), (3, 4))))
    )
    assert best == -0.5
    rep = sample_membership("div", a, b, 10_000, seed=42)
    assert rep.extremes[1] <= -0.5 < -1 / 3


COVERAGE_PAIRS = {"ex31": EX31, "ex32": EX32, "ex33": EX33}


@pytest.mark.parametrize("op", ["add", "sub", "mul", "div"])
@pytest.mark.parametrize("pair", sorted(COVERAGE_PAIRS))
def test_coverage_within_hundredth_at_one_million(op, pair):
    a, b = COVERAGE_PAIRS[pair]
    if op == "div" and b.lower_lo <= 0 <= b.upper_hi:
        pytest.skip("divisor hull contains zero")
    rep = sample_membership(op, a, b, 1_000_000, seed=2024)
    assert rep.violations == 0
    assert max(rep.coverage) <= 1e-2, rep.coverage


def test_coverage_shrinks_with_sample_count():
    a, b = EX32
    small = sample_membership("mul", a, b, 1_000, seed=11)
    large = sample_membership("mul", a, b, 1_000_000, seed=11)
    assert max(large.coverage) < max(small.coverage)

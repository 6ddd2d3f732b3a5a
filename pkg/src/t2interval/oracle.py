"""Brute-force ground truth for Type-2 arithmetic.

A Type-2 interval denotes the family of ordinary intervals ``[x, y]`` with
``x`` in its lower-bound interval and ``y`` in its upper-bound interval.
:func:`corner_result` applies textbook Moore arithmetic to every pair of
extreme family members (16 configurations) and summarises the ranges of the
result endpoints. Inclusion monotonicity of Moore arithmetic makes the corners
sufficient; :func:`sample_membership` checks that claim against random
interior members.

Nothing here imports the formulas in :mod:`t2interval.core`; the two must stay
independent.
"""

from __future__ import annotations

import enum
import itertools
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import kernels
from .core import Type2Interval
from .errors import ZeroInDenominator

__all__ = [
    "BinaryOp",
    "Type1Interval",
    "type1_op",
    "corners",
    "corner_result",
    "corner_results",
    "corner_witnesses",
    "MembershipReport",
    "sample_membership",
]


class BinaryOp(enum.Enum):
    ADD = "add"
    SUB = "sub"
    MUL = "mul"
    DIV = "div"

    @property
    def code(self) -> int:
        return _CODES[self]

    @classmethod
    def parse(cls, tag) -> "BinaryOp":
        if isinstance(tag, cls):
            return tag
        try:
            return cls(str(tag).lower())
        except ValueError:
            raise ValueError(f"unknown operation {tag!r}; expected one of add, sub, mul, div") from None


_CODES = {BinaryOp.ADD: kernels.ADD, BinaryOp.SUB: kernels.SUB, BinaryOp.MUL: kernels.MUL, BinaryOp.DIV: kernels.DIV}


@dataclass(frozen=True, slots=True)
class Type1Interval:
    lo: float
    hi: float

    def __post_init__(self):
        if not (math.isfinite(self.lo) and math.isfinite(self.hi)):
            raise ValueError(f"non-finite Type-1 interval [{self.lo!r}, {self.hi!r}]")
        if self.lo > self.hi:
            raise ValueError(f"Type-1 interval with lo > hi: [{self.lo!r}, {self.hi!r}]")


def type1_op(op, a: Type1Interval, b: Type1Interval) -> Type1Interval:
    """Moore arithmetic on ordinary intervals."""
    op = BinaryOp.parse(op)
    if op is BinaryOp.ADD:
        return Type1Interval(a.lo + b.lo, a.hi + b.hi)
    if op is BinaryOp.SUB:
        return Type1Interval(a.lo - b.hi, a.hi - b.lo)
    if op is BinaryOp.DIV:
        if b.lo <= 0.0 <= b.hi:
            raise ZeroInDenominator(f"0 in divisor [{b.lo!r}, {b.hi!r}]")
        b = Type1Interval(1.0 / b.hi, 1.0 / b.lo)
    p = (a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi)
    return Type1Interval(min(p), max(p))


def corners(a: Type2Interval) -> list[Type1Interval]:
    """The four extreme family members, lower endpoint varying slowest."""
    return [Type1Interval(lo, hi) for lo in (a.lower_lo, a.lower_hi) for hi in (a.upper_lo, a.upper_hi)]


def _check_div(op, b):
    if op is BinaryOp.DIV and b.lower_lo <= 0.0 <= b.upper_hi:
        raise ZeroInDenominator(f"0 lies in the outer hull [{b.lower_lo!r}, {b.upper_hi!r}] of the denominator")


def _enumerate(op, a, b):
    return [
        ((ma, mb), type1_op(op, ma, mb))
        for ma, mb in itertools.product(corners(a), corners(b))
    ]


def corner_result(op, a: Type2Interval, b: Type2Interval) -> Type2Interval:
    """Summarise Moore results over all 16 corner configurations."""
    op = BinaryOp.parse(op)
    _check_div(op, b)
    results = [r for _, r in _enumerate(op, a, b)]
    lows = [r.lo for r in results]
    highs = [r.hi for r in results]
    return Type2Interval(min(lows), max(lows), min(highs), max(highs))


def corner_results(op, A, B) -> np.ndarray:
    """Batched :func:`corner_result` over (N, 4) arrays of quadruples."""
    op = BinaryOp.parse(op)
    A = np.asarray(A, dtype=np.float64).reshape(-1, 4)
    B = np.asarray(B, dtype=np.float64).reshape(-1, 4)
    if op is BinaryOp.DIV and np.any((B[:, 0] <= 0) & (B[:, 3] >= 0)):
        raise ZeroInDenominator("a divisor's outer hull contains zero")
    return kernels.corner_batch(op.code, A, B)


def corner_witnesses(op, a: Type2Interval, b: Type2Interval):
    """For each output endpoint, the corner pair (member of a, member of b) attaining it."""
    op = BinaryOp.parse(op)
    _check_div(op, b)
    table = _enumerate(op, a, b)
    pick = (
        min(table, key=lambda t: t[1].lo),
        max(table, key=lambda t: t[1].lo),
        min(table, key=lambda t: t[1].hi),
        max(table, key=lambda t: t[1].hi),
    )
    return [members for members, _ in pick]


# -- randomized membership ----------------------------------------------------

BLOCK = 1 << 16


@dataclass
class MembershipReport:
    """Outcome of :func:`sample_membership`.

    ``extremes`` holds (min sampled lower, max sampled lower, min sampled upper,
    max sampled upper); ``coverage`` the gaps between those and the claimed
    endpoints (all zero when the samples reach the claimed extremes);
    ``members`` the family members ``(a_lo, a_hi, b_lo, b_hi)`` that attained
    each extreme.
    """

    op: BinaryOp
    n: int
    seed: int
    claimed: Type2Interval
    violations: int
    extremes: tuple
    coverage: tuple
    members: tuple = field(repr=False)

    @property
    def sound(self) -> bool:
        return self.violations == 0

    def to_json(self):
        return {
            "op": self.op.value,
            "violations": self.violations,
            "n": self.n,
            "seed": self.seed,
            "coverage": list(self.coverage),
            "extremes": list(self.extremes),
            "claimed": {"lower": list(self.claimed.quad[:2]), "upper": list(self.claimed.quad[2:])},
        }


def _draw(rng, lo, hi, size):
    u = rng.random(size)
    return np.minimum(hi, lo + u * (hi - lo))


def _block(op, a, b, claimed, seed, index, size):
    rng = np.random.default_rng([seed, index])
    al = _draw(rng, a.lower_lo, a.lower_hi, size)
    au = _draw(rng, a.upper_lo, a.upper_hi, size)
    bl = _draw(rng, b.lower_lo, b.lower_hi, size)
    bu = _draw(rng, b.upper_lo, b.upper_hi, size)
    viol, ext, arg = kernels.membership_scan(op.code, al, au, bl, bu, np.asarray(claimed.quad, dtype=float))
    members = tuple((al[i], au[i], bl[i], bu[i]) for i in arg)
    return viol, ext, members


def sample_membership(op, a, b, n, seed, claimed=None, workers=1) -> MembershipReport:
    """Draw ``n`` random family members of ``a`` and ``b`` and test the claimed result.

    Samples are generated in fixed blocks of 65536, each seeded from
    ``(seed, block index)``, so the report does not depend on ``workers``.
    ``claimed`` defaults to :func:`corner_result`.
    """
    op = BinaryOp.parse(op)
    if n < 1:
        raise ValueError("n must be at least 1")
    _check_div(op, b)
    if claimed is None:
        claimed = corner_result(op, a, b)
    elif not isinstance(claimed, Type2Interval):
        claimed = Type2Interval(*claimed)

    sizes = [min(BLOCK, n - start) for start in range(0, n, BLOCK)]

    def run(i):
        return _block(op, a, b, claimed, seed, i, sizes[i])

    if workers > 1 and len(sizes) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(run, range(len(sizes))))
    else:
        parts = [run(i) for i in range(len(sizes))]

    violations = 0
    best = [math.inf, -math.inf, math.inf, -math.inf]
    members = [None] * 4
    for viol, ext, mem in parts:
        violations += int(viol)
        for k in range(4):
            better = ext[k] < best[k] if k % 2 == 0 else ext[k] > best[k]
            if better:
                best[k] = float(ext[k])
                members[k] = tuple(float(v) for v in mem[k])
    q = claimed.quad
    coverage = (best[0] - q[0], q[1] - best[1], best[2] - q[2], q[3] - best[3])
    return MembershipReport(op, n, seed, claimed, violations, tuple(best), coverage, tuple(members))

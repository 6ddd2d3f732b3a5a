"""Type-2 interval value type and its arithmetic.

A Type-2 interval ``[(a, b), (c, d)]`` is an interval whose lower bound ranges
over ``[a, b]`` and whose upper bound ranges over ``[c, d]``; it is stored as
the ordered quadruple ``a <= b <= c <= d``.

All arithmetic uses plain round-to-nearest doubles. Results are min/max over
finite product sets, so they agree bit-for-bit with the corner oracle in
:mod:`t2interval.oracle`.
"""

from __future__ import annotations

import enum
import json
import math
from dataclasses import dataclass
from numbers import Real

from .errors import NonFiniteInput, NonFiniteResult, OrderingViolation, ZeroInDenominator

__all__ = [
    "Type2Interval",
    "Type2Quad",
    "Degeneracy",
    "ZERO",
    "ONE",
    "make",
    "first_violation",
    "subset_of",
    "strict_subset_of",
    "equals",
    "degeneracy",
    "add",
    "sub",
    "scalar_mul",
    "mul",
    "reciprocal",
    "div",
    "outer_hull",
    "inner_core",
    "to_json",
    "from_json",
    "dumps",
    "loads",
]


_FIELDS = ("lower_lo", "lower_hi", "upper_lo", "upper_hi")


def first_violation(q):
    """Return the 1-based positions of the first out-of-order pair, or None."""
    for i in range(3):
        if not q[i] <= q[i + 1]:
            return (i + 1, i + 2)
    return None


@dataclass(frozen=True, slots=True)
class Type2Interval:
    """Validated quadruple ``[(lower_lo, lower_hi), (upper_lo, upper_hi)]``."""

    lower_lo: float
    lower_hi: float
    upper_lo: float
    upper_hi: float

    def __post_init__(self):
        q = (self.lower_lo, self.lower_hi, self.upper_lo, self.upper_hi)
        for v in q:
            if isinstance(v, bool) or not isinstance(v, Real):
                raise TypeError(f"endpoints must be real numbers, got {v!r}")
            if not math.isfinite(v):
                raise NonFiniteInput(f"non-finite endpoint {v!r} in {q!r}")
        if any(type(v) is not float for v in q):
            q = tuple(float(v) for v in q)
            for name, v in zip(_FIELDS, q):
                object.__setattr__(self, name, v)
        bad = first_violation(q)
        if bad is not None:
            raise OrderingViolation(bad, q)

    @property
    def quad(self) -> tuple[float, float, float, float]:
        return (self.lower_lo, self.lower_hi, self.upper_lo, self.upper_hi)

    def __iter__(self):
        return iter(self.quad)

    def __repr__(self):
        return f"Type2Interval[({self.lower_lo!r}, {self.lower_hi!r}), ({self.upper_lo!r}, {self.upper_hi!r})]"

    def __str__(self):
        return format_quad(self.quad)

    # Operator sugar. Reals are promoted to 1-degenerate intervals, except that
    # real * interval and interval / real use the scalar rule.
    def __add__(self, other):
        if isinstance(other, Real):
            other = _promote(other)
        if not isinstance(other, Type2Interval):
            return NotImplemented
        return add(self, other)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, Real):
            other = _promote(other)
        if not isinstance(other, Type2Interval):
            return NotImplemented
        return sub(self, other)

    def __rsub__(self, other):
        if isinstance(other, Real):
            return sub(_promote(other), self)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, Real):
            return scalar_mul(other, self)
        if not isinstance(other, Type2Interval):
            return NotImplemented
        return mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, Real):
            return scalar_mul(other, self)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, Real):
            if other == 0:
                raise ZeroInDenominator("division of a Type-2 interval by real zero")
            return scalar_mul(1.0 / other, self)
        if not isinstance(other, Type2Interval):
            return NotImplemented
        return div(self, other)

    def __rtruediv__(self, other):
        if isinstance(other, Real):
            return div(_promote(other), self)
        return NotImplemented

    def __neg__(self):
        return scalar_mul(-1.0, self)

    def __pos__(self):
        return self


@dataclass(frozen=True, slots=True)
class Type2Quad:
    """Unvalidated quadruple; the result type of gH-differences and derivatives.

    ``proper`` is exactly ``q1 <= q2 <= q3 <= q4``.
    """

    q1: float
    q2: float
    q3: float
    q4: float

    @property
    def quad(self):
        return (self.q1, self.q2, self.q3, self.q4)

    @property
    def proper(self) -> bool:
        return first_violation(self.quad) is None

    def __iter__(self):
        return iter(self.quad)

    def to_interval(self) -> Type2Interval:
        """Convert losslessly; raises OrderingViolation when improper."""
        return Type2Interval(*self.quad)

    @classmethod
    def of(cls, interval: Type2Interval) -> "Type2Quad":
        return cls(*interval.quad)

    def to_json(self):
        return {"quad": [_json_num(v) for v in self.quad], "proper": self.proper}

    def __str__(self):
        return format_quad(self.quad)


class Degeneracy(enum.Enum):
    GENERAL = "general"
    DEGENERATE2 = "degenerate2"
    DEGENERATE1 = "degenerate1"


def make(q1, q2, q3, q4) -> Type2Interval:
    """Validating constructor; raises NonFiniteInput or OrderingViolation."""
    vals = []
    for v in (q1, q2, q3, q4):
        if isinstance(v, bool) or not isinstance(v, Real):
            raise TypeError(f"endpoints must be real numbers, got {v!r}")
        vals.append(float(v))
    return Type2Interval(*vals)


def _promote(r) -> Type2Interval:
    r = float(r)
    return Type2Interval(r, r, r, r)


def _result(q1, q2, q3, q4) -> Type2Interval:
    q = (q1, q2, q3, q4)
    if not all(math.isfinite(v) for v in q):
        raise NonFiniteResult(f"arithmetic produced a non-finite endpoint: {q!r}")
    return Type2Interval(*q)


ZERO = Type2Interval(0.0, 0.0, 0.0, 0.0)
ONE = Type2Interval(1.0, 1.0, 1.0, 1.0)


def subset_of(a: Type2Interval, b: Type2Interval) -> bool:
    """``a`` contained in ``b``: outer hull of a in outer hull of b, inner core of b in inner core of a."""
    return (
        b.lower_lo <= a.lower_lo
        and b.lower_hi <= a.lower_hi
        and a.upper_lo <= b.upper_lo
        and a.upper_hi <= b.upper_hi
    )


def strict_subset_of(a: Type2Interval, b: Type2Interval) -> bool:
    return subset_of(a, b) and not equals(a, b)


def equals(a: Type2Interval, b: Type2Interval) -> bool:
    return a.quad == b.quad


def degeneracy(a: Type2Interval) -> Degeneracy:
    if a.lower_lo == a.lower_hi == a.upper_lo == a.upper_hi:
        return Degeneracy.DEGENERATE1
    if a.lower_lo == a.lower_hi and a.upper_lo == a.upper_hi:
        return Degeneracy.DEGENERATE2
    return Degeneracy.GENERAL


def add(a: Type2Interval, b: Type2Interval) -> Type2Interval:
    return _result(
        a.lower_lo + b.lower_lo,
        a.lower_hi + b.lower_hi,
        a.upper_lo + b.upper_lo,
        a.upper_hi + b.upper_hi,
    )


def sub(a: Type2Interval, b: Type2Interval) -> Type2Interval:
    return _result(
        a.lower_lo - b.upper_hi,
        a.lower_hi - b.upper_lo,
        a.upper_lo - b.lower_hi,
        a.upper_hi - b.lower_lo,
    )


def scalar_mul(lam, a: Type2Interval) -> Type2Interval:
    if isinstance(lam, bool) or not isinstance(lam, Real):
        raise TypeError(f"scalar must be a real number, got {lam!r}")
    lam = float(lam)
    if not math.isfinite(lam):
        raise NonFiniteInput(f"non-finite scalar {lam!r}")
    if lam >= 0:
        return _result(lam * a.lower_lo, lam * a.lower_hi, lam * a.upper_lo, lam * a.upper_hi)
    return _result(lam * a.upper_hi, lam * a.upper_lo, lam * a.lower_hi, lam * a.lower_lo)


def mul(a: Type2Interval, b: Type2Interval) -> Type2Interval:
    """Outer pair from the outer-hull corner products, inner pair from the inner-core ones."""
    outer = (
        a.lower_lo * b.lower_lo,
        a.lower_lo * b.upper_hi,
        a.upper_hi * b.upper_hi,
        a.upper_hi * b.lower_lo,
    )
    inner = (
        a.lower_hi * b.lower_hi,
        a.lower_hi * b.upper_lo,
        a.upper_lo * b.lower_hi,
        a.upper_lo * b.upper_lo,
    )
    return _result(min(outer), min(inner), max(inner), max(outer))


def _check_denominator(b: Type2Interval):
    if b.lower_lo <= 0.0 <= b.upper_hi:
        raise ZeroInDenominator(f"0 lies in the outer hull [{b.lower_lo!r}, {b.upper_hi!r}] of the denominator")


def reciprocal(b: Type2Interval) -> Type2Interval:
    """Member ``[x, y]`` maps to ``[1/y, 1/x]``; the endpoint ranges follow."""
    _check_denominator(b)
    return _result(1.0 / b.upper_hi, 1.0 / b.upper_lo, 1.0 / b.lower_hi, 1.0 / b.lower_lo)


def div(a: Type2Interval, b: Type2Interval) -> Type2Interval:
    return mul(a, reciprocal(b))


def outer_hull(a: Type2Interval) -> tuple[float, float]:
    return (a.lower_lo, a.upper_hi)


def inner_core(a: Type2Interval) -> tuple[float, float]:
    return (a.lower_hi, a.upper_lo)


# -- text and JSON ------------------------------------------------------------

def format_number(v: float) -> str:
    """Shortest round-trip decimal, with a trailing '.0' dropped."""
    s = repr(float(v))
    return s[:-2] if s.endswith(".0") else s


def format_quad(q) -> str:
    a, b, c, d = (format_number(v) for v in q)
    return f"[({a}, {b}), ({c}, {d})]"


def _json_num(v):
    return v if math.isfinite(v) else None


def to_json(a: Type2Interval) -> dict:
    return {"lower": [a.lower_lo, a.lower_hi], "upper": [a.upper_lo, a.upper_hi]}


def from_json(obj) -> Type2Interval:
    """Inverse of :func:`to_json`; ordering violations raise OrderingViolation."""
    try:
        lower, upper = obj["lower"], obj["upper"]
        q1, q2 = lower
        q3, q4 = upper
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"not a Type-2 interval object: {obj!r}") from exc
    return make(q1, q2, q3, q4)


def dumps(a: Type2Interval) -> str:
    return json.dumps(to_json(a))


def loads(text: str) -> Type2Interval:
    return from_json(json.loads(text))

"""Type-2 interval-valued functions of one real variable.

Covers evaluation, numeric limits and continuity, the generalized Hukuhara
(gH) difference, and gH-derivatives computed two ways: assembled from
component derivatives, and as the limit of gH difference quotients.

Numeric limits use a fixed probe ladder ``h = 1e-2 ... 1e-8`` on each side of
the point. A side is *settled* when the last three rungs fit a linear tail
``L + s*h`` (residual <= tol) and the extrapolated tail error is <= tol; both
quantities are maxima over the four components, so the metric verdict and the
four component verdicts always coincide.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from .core import Type2Interval, Type2Quad, first_violation, scalar_mul
from .errors import (
    ComponentNotDifferentiable,
    NonFiniteResult,
    OutOfDomain,
    PointwiseOrderingViolation,
    SignChangeDetected,
    Type2Error,
)
from .space import quad_distance

__all__ = [
    "Domain",
    "Type2Function",
    "ScaledFunction",
    "DerivativeForm",
    "LimitStatus",
    "LimitReport",
    "RealLimit",
    "ContinuityVerdict",
    "GHDifference",
    "GHDerivative",
    "NumericDerivative",
    "ScaledLimitReport",
    "evaluate",
    "real_limit",
    "limit_estimate",
    "is_continuous_at",
    "gh_diff",
    "finite_difference",
    "component_derivatives",
    "gh_derivative_analytic",
    "gh_derivative_numeric",
    "scaled_derivative",
    "classify_scaled_limit",
    "DEFAULT_LADDER",
    "TOL_LIMIT",
]

DEFAULT_LADDER = tuple(10.0 ** -k for k in range(2, 9))
TOL_LIMIT = 1e-6
TOL_DERIVATIVE = 1e-6
FD_STEPS = (1e-3, 1e-4, 1e-5, 1e-6)
VALIDATION_POINTS = 257
SIGN_SAMPLES = 1024

_PROBE_ERRORS = (Type2Error, ArithmeticError, ValueError)


@dataclass(frozen=True)
class Domain:
    """A real interval; either end may be infinite and/or open."""

    lo: float = -math.inf
    hi: float = math.inf
    lo_open: bool = False
    hi_open: bool = False

    def __post_init__(self):
        if math.isnan(self.lo) or math.isnan(self.hi) or self.lo > self.hi:
            raise ValueError(f"invalid domain bounds ({self.lo!r}, {self.hi!r})")

    @classmethod
    def coerce(cls, obj) -> "Domain":
        if obj is None:
            return cls()
        if isinstance(obj, Domain):
            return obj
        lo, hi = obj
        return cls(float(lo), float(hi))

    @classmethod
    def open(cls, lo, hi) -> "Domain":
        return cls(float(lo), float(hi), True, True)

    def __contains__(self, x) -> bool:
        if x < self.lo or (self.lo_open and x == self.lo):
            return False
        if x > self.hi or (self.hi_open and x == self.hi):
            return False
        return not math.isnan(x)

    def window(self) -> tuple[float, float]:
        """Finite stand-in used for sampling unbounded domains."""
        lo, hi = self.lo, self.hi
        if math.isinf(lo) and math.isinf(hi):
            return -10.0, 10.0
        if math.isinf(lo):
            return hi - 20.0, hi
        if math.isinf(hi):
            return lo, lo + 20.0
        return lo, hi

    def grid(self, count: int) -> np.ndarray:
        a, b = self.window()
        pts = np.linspace(a, b, count)
        return np.array([x for x in pts if x in self])


def _ordered_or_raise(x, values):
    if not all(math.isfinite(v) for v in values):
        raise NonFiniteResult(f"non-finite component value at x={x!r}: {values!r}")
    bad = first_violation(values)
    if bad is not None:
        raise PointwiseOrderingViolation(x, bad, values)


@dataclass(frozen=True, eq=False)
class Type2Function:
    """``x -> [(f1(x), f2(x)), (f3(x), f4(x))]`` on a real domain.

    ``derivatives``, when given, are the four component derivatives. The
    pointwise ordering f1 <= f2 <= f3 <= f4 is sampled on a 257-point grid at
    construction and re-checked on every evaluation.
    """

    components: tuple
    domain: Domain = field(default_factory=Domain)
    derivatives: Optional[tuple] = None
    validate: bool = True

    def __post_init__(self):
        if len(self.components) != 4:
            raise ValueError("a Type-2 function needs exactly four components")
        object.__setattr__(self, "components", tuple(self.components))
        object.__setattr__(self, "domain", Domain.coerce(self.domain))
        if self.derivatives is not None:
            if len(self.derivatives) != 4:
                raise ValueError("derivatives must have four entries")
            object.__setattr__(self, "derivatives", tuple(self.derivatives))
        if self.validate:
            for x in self.domain.grid(VALIDATION_POINTS):
                _ordered_or_raise(float(x), self.components_at(float(x)))

    @classmethod
    def constant(cls, a: Type2Interval, domain=None) -> "Type2Function":
        comps = tuple((lambda v: (lambda x: v))(v) for v in a.quad)
        zeros = tuple(lambda x: 0.0 for _ in range(4))
        return cls(comps, domain, zeros)

    @classmethod
    def from_callable(cls, fn: Callable, domain=None, derivatives=None) -> "Type2Function":
        """Wrap ``fn: x -> Type2Interval`` as four component functions."""
        comps = tuple((lambda k: (lambda x: fn(x).quad[k]))(k) for k in range(4))
        return cls(comps, domain, derivatives)

    def components_at(self, x) -> tuple:
        """Raw component values at x, without domain or ordering checks."""
        return tuple(float(f(x)) for f in self.components)

    def __call__(self, x) -> Type2Interval:
        return evaluate(self, x)


def evaluate(F: Type2Function, x) -> Type2Interval:
    """Evaluate F at x, enforcing the domain and the pointwise ordering."""
    if x not in F.domain:
        raise OutOfDomain(f"x={x!r} is outside the domain {F.domain}")
    values = F.components_at(x)
    _ordered_or_raise(x, values)
    return Type2Interval(*values)


@dataclass(frozen=True, eq=False)
class ScaledFunction:
    """``x -> f(x) * C`` for a fixed Type-2 interval C and real function f."""

    C: Type2Interval
    f: Callable
    f_prime: Optional[Callable] = None
    domain: Domain = field(default_factory=Domain)

    def __post_init__(self):
        object.__setattr__(self, "domain", Domain.coerce(self.domain))

    def __call__(self, x) -> Type2Interval:
        if x not in self.domain:
            raise OutOfDomain(f"x={x!r} is outside the domain {self.domain}")
        return scalar_mul(self.f(x), self.C)

    def induced(self) -> Type2Function:
        """The Type2Function x -> scalar_mul(f(x), C), with derivatives when f' is known."""
        C, f, fp = self.C, self.f, self.f_prime
        pos = C.quad
        neg = (C.upper_hi, C.upper_lo, C.lower_hi, C.lower_lo)
        comps = tuple((lambda k: (lambda x: scalar_mul(f(x), C).quad[k]))(k) for k in range(4))
        derivs = None
        if fp is not None:
            derivs = tuple(
                (lambda k: (lambda x: (pos if f(x) >= 0 else neg)[k] * fp(x)))(k) for k in range(4)
            )
        return Type2Function(comps, self.domain, derivs)


def _as_function(F) -> Type2Function:
    return F.induced() if isinstance(F, ScaledFunction) else F


# -- limits -------------------------------------------------------------------

class LimitStatus(enum.Enum):
    CONFIRMED = "confirmed"
    REFUTED = "refuted"
    INCONCLUSIVE = "inconclusive"


def _combine_status(statuses) -> LimitStatus:
    statuses = list(statuses)
    if LimitStatus.INCONCLUSIVE in statuses:
        return LimitStatus.INCONCLUSIVE
    if LimitStatus.REFUTED in statuses:
        return LimitStatus.REFUTED
    return LimitStatus.CONFIRMED


def _probe_side(values_at, x0, sign, ladder, domain):
    """Rung values (k x width array) on one side, or None if the side is unusable."""
    xs = [x0 + sign * h for h in ladder]
    xs = [x for x in xs if x in domain and x != x0]
    if len(xs) < 3:
        return None, False
    try:
        V = np.array([values_at(x) for x in xs], dtype=np.float64)
    except _PROBE_ERRORS:
        return None, True
    return V, True


def _settle(V, ladder_ratio, tol):
    """Extrapolated limit of the last three rungs and whether they settled."""
    v3, v2, v1 = V[-3], V[-2], V[-1]
    r = ladder_ratio
    with np.errstate(all="ignore"):
        tail = np.max(np.abs(v2 - v1)) / (r - 1)
        resid = np.max(np.abs((v3 - v2) - r * (v2 - v1)))
        est = v1 - (v2 - v1) / (r - 1)
    ok = bool(tail <= tol and resid <= tol and np.all(np.isfinite(est)))
    return est, ok


def _ladder_ratio(ladder):
    return ladder[-2] / ladder[-1]


def _two_sided(values_at, x0, domain, ladder, tol, width):
    r = _ladder_ratio(ladder)
    sides = {}
    settled = []
    usable = False
    for name, sign in (("right", 1.0), ("left", -1.0)):
        V, present = _probe_side(values_at, x0, sign, ladder, domain)
        if not present:
            continue
        usable = True
        if V is None:
            settled.append(False)
            sides[name] = None
            continue
        est, ok = _settle(V, r, tol)
        sides[name] = est
        settled.append(ok)
    if not usable:
        return LimitStatus.INCONCLUSIVE, None, sides
    ests = [v for v in sides.values() if v is not None]
    value = np.mean(ests, axis=0) if ests else None
    if not all(settled):
        return LimitStatus.INCONCLUSIVE, value, sides
    if len(ests) == 2 and np.max(np.abs(ests[0] - ests[1])) > 2 * tol:
        return LimitStatus.REFUTED, value, sides
    # identical sides average to themselves exactly
    if len(ests) == 2 and np.array_equal(ests[0], ests[1]):
        value = ests[0]
    return LimitStatus.CONFIRMED, value, sides


@dataclass(frozen=True)
class RealLimit:
    status: LimitStatus
    value: Optional[float]
    left: Optional[float] = None
    right: Optional[float] = None

    @property
    def confirmed(self) -> bool:
        return self.status is LimitStatus.CONFIRMED


def real_limit(g: Callable, x0: float, domain=None, ladder=DEFAULT_LADDER, tol=TOL_LIMIT) -> RealLimit:
    """Numeric two-sided (or one-sided at a domain end) limit of a real function."""
    domain = Domain.coerce(domain)
    status, value, sides = _two_sided(lambda x: (float(g(x)),), x0, domain, ladder, tol, 1)

    def scalar(v):
        return None if v is None else float(v[0])

    return RealLimit(status, scalar(value), scalar(sides.get("left")), scalar(sides.get("right")))


@dataclass(frozen=True)
class LimitReport:
    """Numeric evidence for the limit of a Type-2 function at a point."""

    status: LimitStatus
    value: Optional[Type2Quad]
    left: Optional[Type2Quad] = None
    right: Optional[Type2Quad] = None

    @property
    def component_limits(self):
        return None if self.value is None else self.value.quad

    @property
    def confirmed(self) -> bool:
        return self.status is LimitStatus.CONFIRMED

    def to_json(self):
        return {
            "status": self.status.value,
            "value": None if self.value is None else self.value.to_json(),
        }


def _quad(v):
    return None if v is None else Type2Quad(*(float(t) for t in v))


def limit_estimate(F, x0: float, ladder=DEFAULT_LADDER, tol=TOL_LIMIT) -> LimitReport:
    """Probe F on both sides of x0 and assemble the limit componentwise.

    CONFIRMED when both sides settle and agree within 2*tol; REFUTED when both
    settle to different values; INCONCLUSIVE otherwise (divergence, oscillation,
    evaluation errors).
    """
    F = _as_function(F)
    status, value, sides = _two_sided(F.components_at, x0, F.domain, ladder, tol, 4)
    return LimitReport(status, _quad(value), _quad(sides.get("left")), _quad(sides.get("right")))


@dataclass(frozen=True)
class ContinuityVerdict:
    continuous: bool
    max_distance: float
    worst_x: Optional[float]

    def __bool__(self):
        return self.continuous


def is_continuous_at(F, x0: float, eps: float, ladder=DEFAULT_LADDER) -> ContinuityVerdict:
    """Check distance(F(x0 +- h), F(x0)) < eps over the whole probe ladder.

    A componentwise check runs alongside; the two must agree.
    """
    F = _as_function(F)
    if not eps > 0:
        raise ValueError("eps must be positive")
    base = evaluate(F, x0).quad
    worst, worst_x = 0.0, None
    metric_ok = comp_ok = True
    for h in ladder:
        for x in (x0 + h, x0 - h):
            if x not in F.domain:
                continue
            v = evaluate(F, x).quad
            d = quad_distance(v, base)
            if d > worst:
                worst, worst_x = d, x
            metric_ok &= d < eps
            comp_ok &= all(abs(v[k] - base[k]) < eps for k in range(4))
    if metric_ok != comp_ok:
        raise RuntimeError(f"metric and componentwise continuity checks disagree at x0={x0!r}")
    return ContinuityVerdict(metric_ok, worst, worst_x)


# -- gH difference ------------------------------------------------------------

def _gh_quad(a, b):
    d1, d2, d3, d4 = a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]
    return (min(d1, d4), min(d2, d3), max(d2, d3), max(d1, d4)), (d1, d2, d3, d4)


@dataclass(frozen=True)
class GHDifference:
    """gH difference ``C`` of A and B and which defining equation(s) it solves.

    Case "a" is ``A = B + C``; case "b" is ``B = A + (-1)C``. Improper results
    report no case. A proper result may satisfy neither when the componentwise
    differences are mixed.
    """

    quad: Type2Quad
    cases: tuple

    @property
    def proper(self) -> bool:
        return self.quad.proper

    def to_json(self):
        return {**self.quad.to_json(), "cases": list(self.cases)}


def gh_diff(a: Type2Interval, b: Type2Interval) -> GHDifference:
    q, (d1, d2, d3, d4) = _gh_quad(a.quad, b.quad)
    result = Type2Quad(*q)
    cases = []
    if not result.proper:
        # neither equation has an improper solution
        return GHDifference(result, ())
    if q == (d1, d2, d3, d4):
        cases.append("a")
    if q == (d4, d3, d2, d1):
        cases.append("b")
    return GHDifference(result, tuple(cases))


def _scale_quad(lam, q):
    """Scalar rule applied to a possibly improper quadruple."""
    if lam >= 0:
        return (lam * q[0], lam * q[1], lam * q[2], lam * q[3])
    return (lam * q[3], lam * q[2], lam * q[1], lam * q[0])


# -- derivatives --------------------------------------------------------------

class DerivativeForm(enum.Enum):
    FIRST = "first"
    SECOND = "second"
    BOTH = "both"
    NEITHER = "neither"

    @property
    def includes_first(self) -> bool:
        return self in (DerivativeForm.FIRST, DerivativeForm.BOTH)

    @property
    def includes_second(self) -> bool:
        return self in (DerivativeForm.SECOND, DerivativeForm.BOTH)


def finite_difference(g: Callable, x0: float, domain=None, steps=FD_STEPS, tol=TOL_DERIVATIVE) -> float:
    """Central differences with two levels of Richardson extrapolation.

    Raises ComponentNotDifferentiable when the extrapolated values disagree,
    when forward and backward one-sided estimates disagree (a kink), or when
    too few steps fit inside the domain.
    """
    domain = Domain.coerce(domain)
    hs = [h for h in steps if (x0 + h) in domain and (x0 - h) in domain]
    if len(hs) < 3:
        raise ComponentNotDifferentiable(f"x0={x0!r} is too close to the domain boundary for finite differences")
    try:
        g0 = float(g(x0))
        plus = [float(g(x0 + h)) for h in hs]
        minus = [float(g(x0 - h)) for h in hs]
    except _PROBE_ERRORS as exc:
        raise ComponentNotDifferentiable(f"component failed near x0={x0!r}: {exc}") from exc

    central = [(p - m) / (2 * h) for p, m, h in zip(plus, minus, hs)]
    level = central
    for order in (2, 4):
        nxt = []
        for j in range(len(level) - 1):
            r = (hs[j] / hs[j + 1]) ** order
            nxt.append((r * level[j + 1] - level[j]) / (r - 1))
        if len(nxt) < 2:
            break
        level = nxt
    est = level[0]
    scale = max(1.0, abs(est))
    if not all(math.isfinite(v) for v in level) or abs(level[0] - level[1]) > tol * scale:
        raise ComponentNotDifferentiable(f"finite differences do not stabilise at x0={x0!r}: {level}")

    # one-sided estimates, first-order Richardson on the two middle steps
    j = 1 if len(hs) >= 3 else 0
    h1, h2 = hs[j], hs[j + 1]
    r = h1 / h2
    fwd = (r * (plus[j + 1] - g0) / h2 - (plus[j] - g0) / h1) / (r - 1)
    bwd = (r * (g0 - minus[j + 1]) / h2 - (g0 - minus[j]) / h1) / (r - 1)
    if not abs(fwd - bwd) <= 10 * tol * scale:
        raise ComponentNotDifferentiable(
            f"one-sided derivatives disagree at x0={x0!r}: forward {fwd!r}, backward {bwd!r}"
        )
    return est


def component_derivatives(F, x0: float) -> tuple:
    """Supplied component derivatives at x0, or finite-difference estimates."""
    F = _as_function(F)
    if x0 not in F.domain:
        raise OutOfDomain(f"x0={x0!r} is outside the domain {F.domain}")
    if F.derivatives is not None:
        return tuple(float(d(x0)) for d in F.derivatives)
    return tuple(finite_difference(f, x0, F.domain) for f in F.components)


class GHDerivative(tuple):
    """``(quad, form)`` pair returned by :func:`gh_derivative_analytic`."""

    __slots__ = ()

    def __new__(cls, quad, form):
        return super().__new__(cls, (quad, form))

    @property
    def quad(self) -> Type2Quad:
        return self[0]

    @property
    def form(self) -> DerivativeForm:
        return self[1]

    def to_json(self):
        return {**self.quad.to_json(), "form": self.form.value}


def _derivative_pattern(d):
    d1, d2, d3, d4 = d
    return (min(d1, d4), min(d2, d3), max(d2, d3), max(d1, d4))


def _matches(q, d, tol):
    return all(abs(a - b) <= tol for a, b in zip(q, d))


def _proper_within(q, tol):
    return all(q[i] <= q[i + 1] + tol for i in range(3))


def gh_derivative_analytic(F, x0: float) -> GHDerivative:
    """Assemble the gH-derivative from the four component derivatives.

    Outer pair from {f1', f4'}, inner pair from {f2', f3'}. The result is
    classified FIRST when it equals (f1', f2', f3', f4'), SECOND when it equals
    (f4', f3', f2', f1'); either form requires a proper quadruple. Supplied
    derivatives are compared exactly; finite-difference estimates within
    their tolerance, so equal slopes are not split by rounding noise.
    """
    d = component_derivatives(F, x0)
    q = Type2Quad(*_derivative_pattern(d))
    tol = 0.0
    if _as_function(F).derivatives is None:
        tol = TOL_DERIVATIVE * max(1.0, max(abs(v) for v in d))
    proper = _proper_within(q.quad, tol)
    first = proper and _matches(q.quad, d, tol)
    second = proper and _matches(q.quad, tuple(reversed(d)), tol)
    if first and second:
        form = DerivativeForm.BOTH
    elif first:
        form = DerivativeForm.FIRST
    elif second:
        form = DerivativeForm.SECOND
    else:
        form = DerivativeForm.NEITHER
    return GHDerivative(q, form)


@dataclass(frozen=True)
class NumericDerivative:
    quad: Optional[Type2Quad]
    status: LimitStatus
    error: float

    @property
    def proper(self) -> bool:
        return self.quad is not None and self.quad.proper

    def to_json(self):
        return {
            "quad": None if self.quad is None else [float(v) for v in self.quad],
            "proper": self.proper,
            "status": self.status.value,
            "error": self.error if math.isfinite(self.error) else None,
        }


def _side_quotients(F, x0, base, sign, ladder):
    hs, Q = [], []
    for h in ladder:
        x = x0 + sign * h
        if x not in F.domain:
            continue
        step = x - x0
        g, _ = _gh_quad(F.components_at(x), base)
        Q.append(_scale_quad(1.0 / step, g))
        hs.append(abs(step))
    return hs, np.array(Q, dtype=np.float64).reshape(-1, 4)


def _extrapolate(hs, Q):
    """Richardson on a one-sided ladder; returns (estimate, error estimate)."""
    if len(hs) < 3:
        return None, math.inf
    R = []
    for j in range(len(hs) - 1):
        r = hs[j] / hs[j + 1]
        R.append((r * Q[j + 1] - Q[j]) / (r - 1))
    errs = [np.max(np.abs(R[j] - R[j + 1])) for j in range(len(R) - 1)]
    errs = [e if math.isfinite(e) else math.inf for e in errs]
    j = int(np.argmin(errs))
    return R[j], float(errs[j])


def gh_derivative_numeric(F, x0: float, ladder=DEFAULT_LADDER, tol=TOL_DERIVATIVE) -> NumericDerivative:
    """Limit of gH difference quotients ``(1/h) * (F(x0+h) gH- F(x0))``.

    Each one-sided ladder is Richardson-extrapolated; the two sides must agree
    within 2*tol (relative to magnitude above 1) for CONFIRMED.
    """
    F = _as_function(F)
    if x0 not in F.domain:
        raise OutOfDomain(f"x0={x0!r} is outside the domain {F.domain}")
    base = F.components_at(x0)
    ests = []
    try:
        for sign in (1.0, -1.0):
            hs, Q = _side_quotients(F, x0, base, sign, ladder)
            if hs:
                ests.append(_extrapolate(hs, Q))
    except _PROBE_ERRORS:
        return NumericDerivative(None, LimitStatus.INCONCLUSIVE, math.inf)
    ests = [(v, e) for v, e in ests if v is not None]
    if not ests:
        return NumericDerivative(None, LimitStatus.INCONCLUSIVE, math.inf)
    value = np.mean([v for v, _ in ests], axis=0)
    scale = max(1.0, float(np.max(np.abs(value))))
    err = max(e for _, e in ests)
    ok = all(np.all(np.isfinite(v)) for v, _ in ests) and err <= tol * scale
    if len(ests) == 2:
        gap = float(np.max(np.abs(ests[0][0] - ests[1][0])))
        ok = ok and gap <= 2 * tol * scale
        err = max(err, gap)
    status = LimitStatus.CONFIRMED if ok else LimitStatus.INCONCLUSIVE
    return NumericDerivative(_quad(value), status, err)


def _sign_check(S: ScaledFunction, x0):
    pts = list(S.domain.grid(SIGN_SAMPLES)) + [x0]
    vals = [float(S.f(float(x))) for x in pts]
    if any(v > 0 for v in vals) and any(v < 0 for v in vals):
        i = next(k for k, v in enumerate(vals) if v > 0)
        j = next(k for k, v in enumerate(vals) if v < 0)
        raise SignChangeDetected(f"f changes sign on the domain: f({pts[i]!r}) > 0, f({pts[j]!r}) < 0")


def scaled_derivative(S: ScaledFunction, x0: float) -> Type2Interval:
    """Derivative of ``f(x) * C`` for sign-definite f: ``f'(x0) * C``."""
    if x0 not in S.domain:
        raise OutOfDomain(f"x0={x0!r} is outside the domain {S.domain}")
    _sign_check(S, x0)
    fp = float(S.f_prime(x0)) if S.f_prime is not None else finite_difference(S.f, x0, S.domain)
    return scalar_mul(fp, S.C)


# -- scaled limits ------------------------------------------------------------

@dataclass(frozen=True)
class ScaledLimitReport:
    """Which of the two scaled-limit cases hold at x0, and the resulting limit.

    Case "a": lim f exists, limit is C * lim f. Case "b": lim |f| exists and C
    is symmetric (lower pair = -(upper pair)), limit is C * lim |f|.
    """

    cases: tuple
    symmetric: bool
    f_limit: RealLimit
    abs_limit: RealLimit
    limit: Optional[Type2Interval]
    numeric: LimitReport

    def to_json(self):
        return {
            "cases": list(self.cases),
            "symmetric": self.symmetric,
            "limit": None if self.limit is None else list(self.limit.quad),
            "numeric": self.numeric.to_json(),
        }


def classify_scaled_limit(S: ScaledFunction, x0: float, ladder=DEFAULT_LADDER, tol=TOL_LIMIT) -> ScaledLimitReport:
    C = S.C
    lim_f = real_limit(S.f, x0, S.domain, ladder, tol)
    lim_abs = real_limit(lambda x: abs(S.f(x)), x0, S.domain, ladder, tol)
    symmetric = C.lower_lo == -C.upper_hi and C.lower_hi == -C.upper_lo
    cases = []
    limit = None
    if lim_f.confirmed:
        cases.append("a")
        limit = scalar_mul(lim_f.value, C)
    if lim_abs.confirmed and symmetric:
        cases.append("b")
        if limit is None:
            limit = scalar_mul(lim_abs.value, C)
    numeric = limit_estimate(S.induced(), x0, ladder, tol)
    return ScaledLimitReport(tuple(cases), symmetric, lim_f, lim_abs, limit, numeric)

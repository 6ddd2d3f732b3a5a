"""Metric structure on Type-2 intervals: distance, norm, sequences and limits.

Every "for all n >= n0" statement is checked on a finite index range only, so
checkers return a :class:`ConvergenceVerdict` (confirmed up to an index,
refuted at an index, or inconclusive) rather than a bare boolean.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import kernels
from .core import Type2Interval, make
from .errors import LimitNotApparent, Type2Error

__all__ = [
    "distance",
    "quad_distance",
    "norm",
    "VerdictStatus",
    "ConvergenceVerdict",
    "Type2Sequence",
    "check_convergence",
    "check_real_convergence",
    "check_component_convergence",
    "check_cauchy",
    "estimate_limit",
    "completeness_witness",
]


def quad_distance(p, q) -> float:
    """Max of the four componentwise absolute differences of two quadruples."""
    return max(abs(p[0] - q[0]), abs(p[1] - q[1]), abs(p[2] - q[2]), abs(p[3] - q[3]))


def distance(x: Type2Interval, y: Type2Interval) -> float:
    """Extended Moore distance."""
    return quad_distance(x.quad, y.quad)


def norm(x: Type2Interval) -> float:
    """Distance to the zero interval; equals max(|lower_lo|, |upper_hi|)."""
    return max(abs(x.lower_lo), abs(x.lower_hi), abs(x.upper_lo), abs(x.upper_hi))


class VerdictStatus(enum.Enum):
    CONFIRMED_UP_TO = "confirmed_up_to"
    REFUTED_AT = "refuted_at"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class ConvergenceVerdict:
    """Finite evidence for a tail property.

    CONFIRMED_UP_TO carries the largest index checked and the largest distance
    seen; REFUTED_AT carries the first offending index and its distance.
    """

    status: VerdictStatus
    witness_index: int
    achieved_distance: float

    @property
    def confirmed(self) -> bool:
        return self.status is VerdictStatus.CONFIRMED_UP_TO

    @property
    def refuted(self) -> bool:
        return self.status is VerdictStatus.REFUTED_AT

    def to_json(self):
        d = self.achieved_distance
        return {
            "status": self.status.value,
            "witness_index": self.witness_index,
            "achieved_distance": d if math.isfinite(d) else None,
        }


def _confirmed(n, d):
    return ConvergenceVerdict(VerdictStatus.CONFIRMED_UP_TO, int(n), float(d))


def _refuted(n, d):
    return ConvergenceVerdict(VerdictStatus.REFUTED_AT, int(n), float(d))


def _inconclusive(n):
    return ConvergenceVerdict(VerdictStatus.INCONCLUSIVE, int(n), math.nan)


@dataclass(frozen=True)
class Type2Sequence:
    """A map from positive integers to Type-2 intervals.

    ``term`` must be pure. It may return a Type2Interval or any 4-sequence of
    reals, which is validated on the way out.
    """

    term: Callable

    def __call__(self, n: int) -> Type2Interval:
        if n < 1:
            raise ValueError(f"sequence index must be >= 1, got {n}")
        v = self.term(n)
        return v if isinstance(v, Type2Interval) else make(*v)

    @classmethod
    def constant(cls, a: Type2Interval) -> "Type2Sequence":
        return cls(lambda n: a)

    def component(self, k: int) -> Callable[[int], float]:
        """The k-th (0-based) real component sequence."""
        return lambda n: self(n).quad[k]

    def terms(self, n0: int, n_max: int) -> np.ndarray:
        """Terms n0..n_max as an (N, 4) array."""
        return np.array([self(n).quad for n in range(n0, n_max + 1)], dtype=np.float64).reshape(-1, 4)


def _check_range(eps, n0, n_max):
    if not eps > 0:
        raise ValueError(f"eps must be positive, got {eps!r}")
    if not 1 <= n0 <= n_max:
        raise ValueError(f"need 1 <= n0 <= n_max, got n0={n0}, n_max={n_max}")


def _collect(fn, n0, n_max, width):
    """Evaluate fn on n0..n_max; returns (array, index of first failure or None)."""
    rows = []
    for n in range(n0, n_max + 1):
        try:
            v = fn(n)
        except Type2Error:
            return np.array(rows, dtype=np.float64).reshape(-1, width), n
        rows.append(v)
    return np.array(rows, dtype=np.float64).reshape(-1, width), None


def _verdict_from_distances(d, n0, n_max, eps, failed_at):
    hits = np.flatnonzero(d >= eps)
    if hits.size:
        i = int(hits[0])
        return _refuted(n0 + i, d[i])
    if failed_at is not None:
        return _inconclusive(failed_at)
    return _confirmed(n_max, d.max() if d.size else 0.0)


def check_convergence(seq, limit: Type2Interval, eps: float, n0: int, n_max: int) -> ConvergenceVerdict:
    """Check distance(seq(n), limit) < eps for every n in [n0, n_max]."""
    _check_range(eps, n0, n_max)
    seq = seq if isinstance(seq, Type2Sequence) else Type2Sequence(seq)
    T, failed = _collect(lambda n: seq(n).quad, n0, n_max, 4)
    d = kernels.distances_to(T, limit.quad) if len(T) else np.empty(0)
    return _verdict_from_distances(d, n0, n_max, eps, failed)


def check_real_convergence(seq: Callable[[int], float], limit: float, eps: float, n0: int, n_max: int) -> ConvergenceVerdict:
    """Real-sequence analogue of :func:`check_convergence`."""
    _check_range(eps, n0, n_max)
    T, failed = _collect(lambda n: (float(seq(n)),), n0, n_max, 1)
    d = np.abs(T[:, 0] - float(limit))
    return _verdict_from_distances(d, n0, n_max, eps, failed)


def check_component_convergence(seq, limit: Type2Interval, eps, n0, n_max) -> list[ConvergenceVerdict]:
    """One real-convergence verdict per component, in quadruple order."""
    seq = seq if isinstance(seq, Type2Sequence) else Type2Sequence(seq)
    return [
        check_real_convergence(seq.component(k), limit.quad[k], eps, n0, n_max)
        for k in range(4)
    ]


def _sampled_pairs(count, budget, seed):
    """Near-diagonal, anchor and random far pairs (i < j) within ``budget``."""
    rng = np.random.default_rng(seed)
    share = max(1, budget // 3)
    parts_i, parts_j = [], []

    # every term against the last one
    anchors = np.arange(count - 1)
    if anchors.size > share:
        anchors = np.unique(np.linspace(0, count - 2, share).astype(np.intp))
    parts_i.append(anchors)
    parts_j.append(np.full(anchors.size, count - 1))

    # near-diagonal offsets
    offsets = max(1, share // count)
    for k in range(1, min(offsets, count - 1) + 1):
        i = np.arange(count - k)
        if i.size > share:
            i = np.unique(rng.integers(0, count - k, share))
        parts_i.append(i)
        parts_j.append(i + k)

    # random far pairs
    left = max(0, budget - sum(p.size for p in parts_i))
    if left:
        a = rng.integers(0, count, left)
        b = rng.integers(0, count, left)
        keep = a != b
        parts_i.append(np.minimum(a, b)[keep])
        parts_j.append(np.maximum(a, b)[keep])

    return np.concatenate(parts_i), np.concatenate(parts_j)


def check_cauchy(seq, eps: float, n0: int, n_max: int, pair_budget: int = 100_000, seed: int = 0) -> ConvergenceVerdict:
    """Check distance(seq(n), seq(m)) < eps for n0 <= n < m <= n_max.

    All pairs are scanned when they fit in ``pair_budget``; otherwise a
    stratified sample (anchors against the last term, near-diagonal pairs and
    seeded random far pairs) is checked. A refutation reports the larger index
    of the first offending pair.
    """
    _check_range(eps, n0, n_max)
    seq = seq if isinstance(seq, Type2Sequence) else Type2Sequence(seq)
    T, failed = _collect(lambda n: seq(n).quad, n0, n_max, 4)
    count = len(T)
    if count < 2:
        return _inconclusive(failed) if failed is not None else _confirmed(n_max, 0.0)

    if count * (count - 1) // 2 <= pair_budget:
        n, m, d, _ = kernels.cauchy_scan(T, eps)
        if m >= 0:
            return _refuted(n0 + m, d)
    else:
        I, J = _sampled_pairs(count, pair_budget, seed)
        dist = kernels.pair_distances(T, I, J)
        bad = np.flatnonzero(dist >= eps)
        if bad.size:
            order = np.lexsort((I[bad], J[bad]))
            k = bad[order[0]]
            return _refuted(n0 + int(J[k]), dist[k])
        d = float(dist.max())
    if failed is not None:
        return _inconclusive(failed)
    return _confirmed(n_max, d)


TAIL_PROBES = 8
TAIL_TOL = 1e-9
DEFAULT_PROBE = 1 << 30

_COMPONENT_NAMES = ("lower_lo", "lower_hi", "upper_lo", "upper_hi")


def estimate_limit(seq, n_probe: int = DEFAULT_PROBE, tol_tail: float = TAIL_TOL, probes: int = TAIL_PROBES) -> Type2Interval:
    """Read the limit off a geometric tail n, 2n, 4n, ...

    A component is accepted when consecutive probes differ by less than
    ``tol_tail`` and each probe also agrees with its successor index (which
    catches parity oscillation that powers of two would skip). The final probe
    term is returned; confirm with :func:`check_convergence`.
    """
    if n_probe < 8:
        raise ValueError(f"n_probe must be >= 8, got {n_probe}")
    seq = seq if isinstance(seq, Type2Sequence) else Type2Sequence(seq)
    idx = [n_probe << j for j in range(probes)]
    V = np.array([seq(n).quad for n in idx])
    W = np.array([seq(n + 1).quad for n in idx])
    step = np.abs(np.diff(V, axis=0))
    nbr = np.abs(W - V)
    for k in range(4):
        worst = max(step[:, k].max(initial=0.0), nbr[:, k].max())
        if not worst < tol_tail:
            raise LimitNotApparent(
                f"component {_COMPONENT_NAMES[k]} does not settle: tail spread {worst:.3g} "
                f">= {tol_tail:g} over indices {idx[0]}..{idx[-1] + 1}"
            )
    return seq(idx[-1])


def completeness_witness(seq, eps: float, n_max: int, n0: int = 1, n_probe: int = DEFAULT_PROBE):
    """Cauchy check, componentwise limit, then convergence to it at 2*eps.

    Returns ``(limit, verdict)``. Raises LimitNotApparent when the sequence is
    not Cauchy-confirmed on [n0, n_max] or a component tail does not settle.
    """
    seq = seq if isinstance(seq, Type2Sequence) else Type2Sequence(seq)
    cauchy = check_cauchy(seq, eps, n0, n_max)
    if not cauchy.confirmed:
        raise LimitNotApparent(f"sequence is not Cauchy at eps={eps:g} on [{n0}, {n_max}]: {cauchy.to_json()}")
    limit = estimate_limit(seq, n_probe)
    return limit, check_convergence(seq, limit, 2 * eps, n0, n_max)

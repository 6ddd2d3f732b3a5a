"""Type-2 intervals: intervals whose endpoints are themselves intervals."""

from .core import (
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
from .errors import *  # noqa: F401,F403
from .kernels import BACKEND
from .oracle import BinaryOp, corner_result, sample_membership
from .space import (
    ConvergenceVerdict,
    Type2Sequence,
    VerdictStatus,
    check_cauchy,
    check_component_convergence,
    check_convergence,
    completeness_witness,
    distance,
    estimate_limit,
    norm,
)
from .calc import (
    Domain,
    DerivativeForm,
    LimitStatus,
    ScaledFunction,
    Type2Function,
    classify_scaled_limit,
    gh_derivative_analytic,
    gh_derivative_numeric,
    gh_diff,
    is_continuous_at,
    limit_estimate,
    scaled_derivative,
)

__version__ = "0.1.0"

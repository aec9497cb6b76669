"""High-precision sums over zeros of special entire functions.

Two independent routes compute power sums of reciprocal (squared) zeros
from a function's normalized Taylor coefficients: a forward recurrence
and a scaled lower-triangular determinant.  A separate oracle locates
the zeros themselves by sign-change bracketing and brackets the same sums
with explicit tail bounds, so every family can be cross-checked without
shared code paths.
"""

from .characters import (
    DirichletCharacter,
    is_fundamental_discriminant,
    kronecker_character,
    kronecker_symbol,
)
from .errors import (
    AccuracyError,
    BracketFailureError,
    ConfigurationError,
    DomainError,
    InsufficientCoefficientsError,
    LimitExceededError,
    NotFundamentalError,
    NumericError,
    PoleError,
    PrecisionExhaustedError,
    ScanExhaustedError,
    SingularInputError,
    VanishingMomentError,
    ZeroScaleError,
    ZerosumError,
)
from .newton import (
    METHOD_DETERMINANT,
    METHOD_DIRECT,
    METHOD_RECURRENCE,
    CoefficientSeries,
    PowerSumReport,
    derivative_ratio_check,
    determinant,
    elementary_symmetric_finite,
    lower_triangular_system_matrix,
    power_sums_determinant,
    power_sums_finite,
    power_sums_recurrence,
    series_from_finite,
)
from . import oracle as zero_oracle
from .oracle import (
    TailEstimate,
    TruncatedPowerSum,
    ZeroList,
    airy_zeros,
    bessel_zeros,
    qairy_zeros,
    qbessel_zeros,
    tail_estimate,
    truncated_power_sum,
    xi_zeros,
)
from .precision import (
    DEFAULT_PREC,
    MIN_PREC,
    bernoulli,
    check_precision,
    gamma,
    log_gamma,
    pi_value,
    pochhammer,
    q_pochhammer_finite,
    q_pochhammer_infinite,
    to_real,
    working,
)
from .series import (
    AiryNormalization,
    BesselParams,
    QBesselParams,
    airy_normalization,
    airy_raw_coefficient,
    airy_sigmas,
    bessel_s_closed,
    bessel_sigmas,
    qairy_s_closed,
    qairy_sigmas,
    qbessel_s_closed,
    qbessel_sigmas,
    sinc_sigmas,
)
from .zeta import (
    MomentTable,
    QuadratureConfig,
    XiEvaluator,
    dirichlet_moments,
    phi_chi,
    phi_riemann,
    riemann_moments,
    riemann_s_closed,
    theta_selfcheck,
    xi_cosine,
)

__version__ = "0.1.0"

__all__ = [
    "AccuracyError",
    "AiryNormalization",
    "BesselParams",
    "BracketFailureError",
    "CoefficientSeries",
    "ConfigurationError",
    "DEFAULT_PREC",
    "DirichletCharacter",
    "DomainError",
    "InsufficientCoefficientsError",
    "LimitExceededError",
    "METHOD_DETERMINANT",
    "METHOD_DIRECT",
    "METHOD_RECURRENCE",
    "MIN_PREC",
    "MomentTable",
    "NotFundamentalError",
    "NumericError",
    "PoleError",
    "PowerSumReport",
    "PrecisionExhaustedError",
    "QBesselParams",
    "QuadratureConfig",
    "ScanExhaustedError",
    "SingularInputError",
    "TailEstimate",
    "TruncatedPowerSum",
    "VanishingMomentError",
    "XiEvaluator",
    "ZeroList",
    "ZeroScaleError",
    "ZerosumError",
    "airy_normalization",
    "airy_raw_coefficient",
    "airy_sigmas",
    "airy_zeros",
    "bernoulli",
    "bessel_s_closed",
    "bessel_sigmas",
    "bessel_zeros",
    "check_precision",
    "derivative_ratio_check",
    "determinant",
    "dirichlet_moments",
    "elementary_symmetric_finite",
    "gamma",
    "is_fundamental_discriminant",
    "kronecker_character",
    "kronecker_symbol",
    "log_gamma",
    "lower_triangular_system_matrix",
    "phi_chi",
    "phi_riemann",
    "pi_value",
    "pochhammer",
    "power_sums_determinant",
    "power_sums_finite",
    "power_sums_recurrence",
    "q_pochhammer_finite",
    "q_pochhammer_infinite",
    "qairy_s_closed",
    "qairy_sigmas",
    "qairy_zeros",
    "qbessel_s_closed",
    "qbessel_sigmas",
    "qbessel_zeros",
    "riemann_moments",
    "riemann_s_closed",
    "series_from_finite",
    "sinc_sigmas",
    "tail_estimate",
    "theta_selfcheck",
    "to_real",
    "truncated_power_sum",
    "working",
    "xi_cosine",
    "xi_zeros",
    "zero_oracle",
]

"""Exact quantum propagators over the real and p-adic completions of Q.

The library evaluates, composes and verifies quadratic-action
path-integral kernels at every place of the rationals using exact
rational arithmetic, with independent numerical Haar-measure and
Fresnel oracles for cross-checking.
"""

from .analytic import (
    PadicTruncation,
    chi_of_truncation,
    cos_p,
    series_eval,
    sin_p,
    sqrt_p,
    tan_p,
)
from .characters import (
    Amplitude,
    Phase,
    amp_mul,
    amp_render,
    chi,
    lambda_v,
    legendre,
)
from .dynamics import (
    PolynomialPath,
    QuadraticActionForm,
    action_constant_field,
    action_form_constant_field,
    action_integral,
    classical_path_constant_field,
    euler_lagrange_residual,
)
from .errors import (
    DegenerateFormError,
    DegenerateIntervalError,
    DegenerateQuadraticError,
    DomainError,
    NonSquareError,
    OracleCapError,
    PadicqmError,
    PartitionError,
    PrecisionError,
    QuadratureError,
    VerificationError,
    ZeroExpansionError,
)
from .gauss import (
    BallSpec,
    fresnel_limit,
    fresnel_oracle,
    gauss_full,
    haar_oracle,
    minimal_resolution,
    quad_char_integral_ball,
    quadratic_char_fn,
    stabilization_threshold,
)
from .places import (
    DigitExpansion,
    Place,
    digits,
    fractional_part,
    linear_less,
    norm,
    valuation,
)
from .propagators import (
    OscillatorBoundaryData,
    PartitionSpec,
    SymbolicKernel,
    compose,
    compose_kernels,
    desitter_action_form,
    finite_n_propagator,
    k_constant_field,
    k_desitter,
    k_free,
    k_general_quadratic,
    k_oscillator_td,
    k_oscillator_td_real,
    oscillator_action_form,
    overlap_ball_integral,
    overlap_vanishing_threshold,
    semigroup_residual,
    symbolic_constant_field_kernel,
)

__version__ = "0.1.0"

__all__ = [
    "Amplitude",
    "BallSpec",
    "DigitExpansion",
    "OscillatorBoundaryData",
    "PadicTruncation",
    "PartitionSpec",
    "Phase",
    "Place",
    "PolynomialPath",
    "QuadraticActionForm",
    "SymbolicKernel",
    "action_constant_field",
    "action_form_constant_field",
    "action_integral",
    "amp_mul",
    "amp_render",
    "chi",
    "chi_of_truncation",
    "classical_path_constant_field",
    "compose",
    "compose_kernels",
    "cos_p",
    "desitter_action_form",
    "digits",
    "euler_lagrange_residual",
    "finite_n_propagator",
    "fractional_part",
    "fresnel_limit",
    "fresnel_oracle",
    "gauss_full",
    "haar_oracle",
    "k_constant_field",
    "k_desitter",
    "k_free",
    "k_general_quadratic",
    "k_oscillator_td",
    "k_oscillator_td_real",
    "lambda_v",
    "legendre",
    "linear_less",
    "minimal_resolution",
    "norm",
    "oscillator_action_form",
    "overlap_ball_integral",
    "overlap_vanishing_threshold",
    "quad_char_integral_ball",
    "quadratic_char_fn",
    "semigroup_residual",
    "series_eval",
    "sin_p",
    "sqrt_p",
    "stabilization_threshold",
    "symbolic_constant_field_kernel",
    "tan_p",
    "valuation",
    # errors
    "PadicqmError",
    "ZeroExpansionError",
    "DegenerateQuadraticError",
    "DegenerateIntervalError",
    "DegenerateFormError",
    "PartitionError",
    "OracleCapError",
    "QuadratureError",
    "DomainError",
    "NonSquareError",
    "PrecisionError",
    "VerificationError",
]

"""Exception hierarchy for the padicqm library."""


class PadicqmError(Exception):
    """Base class for all library errors."""


class ZeroExpansionError(PadicqmError):
    """Zero has no canonical digit expansion."""


class DegenerateQuadraticError(PadicqmError):
    """The quadratic coefficient of a Gauss integral is zero.

    The full-line integral diverges; use a ball-restricted character
    integral instead.
    """


class DegenerateIntervalError(PadicqmError):
    """A time interval of length zero was supplied."""


class DegenerateFormError(PadicqmError):
    """A quadratic action form with vanishing mixed partial was supplied."""


class PartitionError(PadicqmError):
    """A time partition violates the required strict ordering."""


class OracleCapError(PadicqmError):
    """A coset enumeration would exceed the configured point cap."""


class QuadratureError(PadicqmError):
    """Numerical quadrature failed to converge."""


class DomainError(PadicqmError):
    """Argument outside the convergence domain of a p-adic power series."""


class NonSquareError(PadicqmError):
    """The argument has no square root in Q_p."""


class PrecisionError(PadicqmError):
    """The working precision cannot pin the requested quantity."""


class VerificationError(PadicqmError):
    """An exact identity that should hold failed; carries the witness."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness

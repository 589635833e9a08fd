"""Exception types raised by the dvfcsr library.

Everything derives from DvfcsrError so callers can catch library failures
with one handler. Input-validation errors also derive from ValueError,
runtime detection failures from RuntimeError.
"""


class DvfcsrError(Exception):
    """Base class for all dvfcsr errors."""


class NotPrimeError(DvfcsrError, ValueError):
    """The ground characteristic p is not prime."""


class DegreeZeroError(DvfcsrError, ValueError):
    """The defining polynomial has degree zero (or is empty)."""


class NotPrimitivePolynomialError(DvfcsrError, ValueError):
    """The defining polynomial is not primitive over F_p."""


class FactorizationBudgetError(DvfcsrError, ValueError):
    """An integer exceeded the trial-division factorization budget."""


class NonSquareMatrixError(DvfcsrError, ValueError):
    """A determinant was requested for a non-square (or ragged) matrix."""


class NotCongruentMinusOneError(DvfcsrError, ValueError):
    """A connection element is not congruent to -1 modulo pi."""


class NotCoprimeError(DvfcsrError, ValueError):
    """Multiplicative order requested for a base sharing a factor with the modulus."""


class ModulusTooSmallError(DvfcsrError, ValueError):
    """Multiplicative order requested modulo m < 2."""


class UndeterminedPeriodError(DvfcsrError, RuntimeError):
    """The observation window is too short to confirm any eventual period."""


class PrecisionTooLowError(DvfcsrError, RuntimeError):
    """Lifted linear-system entries did not stabilize across the working precision."""


class MemoryDivergedError(DvfcsrError, RuntimeError):
    """A memory coordinate left the configured bound during a run."""

"""Exception types shared across the package."""


class GenblochError(Exception):
    """Base class for all errors raised by this package."""


class NotHermitian(GenblochError, ValueError):
    pass


class NoConvergence(GenblochError, RuntimeError):
    pass


class DegreeMismatch(GenblochError, ValueError):
    pass


class ResourceLimit(GenblochError, ValueError):
    pass


class BadIndex(GenblochError, ValueError):
    pass


class ModeMismatch(GenblochError, ValueError):
    pass


class DimensionMismatch(GenblochError, ValueError):
    pass


class GradeOutOfRange(GenblochError, ValueError):
    pass


class GradeMismatch(GenblochError, ValueError):
    pass


class NonUnitTrace(GenblochError, ValueError):
    pass


class UnsupportedM(GenblochError, ValueError):
    pass


class UnknownName(GenblochError, KeyError):
    pass


class NotUnitary(GenblochError, ValueError):
    pass


class KindMismatch(GenblochError, ValueError):
    pass


class ComplexRoots(GenblochError, ArithmeticError):
    """Closed-form roots came out complex for input that should give real ones.

    Signals an internal inconsistency (bad invariants fed to a spectrum
    formula), not a user error.
    """


class ClosedFormMismatch(GenblochError, RuntimeError):
    """Closed-form spectrum disagrees with the numeric oracle.

    Carries the residual so callers see how far off the factorized form is
    instead of silently receiving wrong eigenvalues.
    """

    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual


class NegativeDiscriminant(GenblochError, ValueError):
    pass


class BadResolution(GenblochError, ValueError):
    pass


class UsageError(GenblochError, ValueError):
    """Bad command-line arguments."""

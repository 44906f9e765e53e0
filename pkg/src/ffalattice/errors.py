"""Exception types shared across the package."""


class DomainError(ValueError):
    """Argument outside the mathematical domain of an operation."""


class BandEdgeError(DomainError):
    """Evaluation exactly at a band edge where the density of states diverges
    or the spectral density vanishes."""


class BranchCutError(DomainError):
    """Complex energy lies on the branch cut [-2*kappa0, 2*kappa0]."""


class HermitianInputError(ValueError):
    """Operation requires Im(Ea) != 0 but was given Hermitian parameters."""


class NonHermitianInputError(ValueError):
    """Operation is only defined for Hermitian parameters (Im(Ea) = 0)."""


class RealSpectrumRequiredError(ValueError):
    """Operation requires a purely continuous (real) spectrum, but the
    parameters support bound states."""


class ReflectionDivergenceError(ArithmeticError):
    """Reflection coefficient diverges (amplifying spectral singularity hit
    exactly)."""


class QuadratureError(RuntimeError):
    """Numerical quadrature failed to converge to the requested accuracy."""

    def __init__(self, message, achieved_error=None):
        super().__init__(message)
        self.achieved_error = achieved_error


class ContourError(RuntimeError):
    """Argument-principle contour passes too close to a zero; retry with a
    jittered rectangle."""


class InsufficientLatticeError(RuntimeError):
    """Wave amplitude reached the hard-wall end of the truncated lattice."""


class StepSizeError(RuntimeError):
    """Local error estimate of an integration step exceeded the tolerance."""


class PoleProximityWarning(UserWarning):
    """Resolvent evaluated very close to one of its poles."""

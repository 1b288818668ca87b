"""Exception types shared across the package."""


class DomainError(ValueError):
    """An input is outside the physical/mathematical domain of an operation."""


class CutoffTooSmallError(ValueError):
    """A Fock-space cutoff cannot hold the requested state within tail tolerance.

    Carries the per-mode cutoffs that would suffice in ``required_cutoffs``.
    """

    def __init__(self, message, required_cutoffs=None):
        super().__init__(message)
        self.required_cutoffs = required_cutoffs


class NumericalToleranceError(RuntimeError):
    """A numerical invariant (trace, Hermiticity, unitarity, entropy drift,
    quadrature symmetry) was violated beyond its declared tolerance."""


class ConsistencyError(RuntimeError):
    """A cross-check between two independent computation routes disagreed."""


class TruncationWarning(UserWarning):
    """Occupation is leaking into the top Fock level; results may be off."""

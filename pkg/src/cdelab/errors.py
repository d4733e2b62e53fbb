"""Exception types shared across the package."""


class CdelabError(Exception):
    """Base class for all package-specific failures."""


class NewtonDivergence(CdelabError):
    """An implicit or shooting Newton iteration failed to converge."""


class NonFiniteState(CdelabError):
    """A trajectory component overflowed (escape along the hyperbolic direction)."""


class EmptyTrajectory(CdelabError):
    """An operation required a nonempty trajectory."""


class NonConjugatePair(CdelabError):
    """Spinor pair (psi_plus, psi_minus) is not related by complex conjugation."""


class ConvergenceFailure(CdelabError):
    """Eigenvalue residual tolerance could not be reached."""


class NoEllipticPair(CdelabError):
    """Spectrum contains no purely imaginary eigenvalue pair."""


class TruncationMismatch(CdelabError):
    """Field and operator data live on different truncations or periods."""


class SolverStall(CdelabError):
    """An inner linear solve (conjugate gradient) failed to converge."""


class ConvergedToEquilibrium(CdelabError):
    """A periodic-orbit solve collapsed onto an equilibrium point."""


class GridCoverage(CdelabError):
    """Requested output grid maps outside the input grid."""


class DegenerateProfile(CdelabError):
    """Profile has identically vanishing spinor density; no coupling to fit."""


class NonConvergence(CdelabError):
    """Ground-state solver did not reach its tolerances.

    The best iterate found is attached as the ``best`` attribute.
    """

    def __init__(self, message, best=None, diagnostics=None):
        super().__init__(message)
        self.best = best
        self.diagnostics = diagnostics

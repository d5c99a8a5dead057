"""Exception types shared across the package."""


class EigenstrataError(Exception):
    """Base class for all package-specific errors."""


class NonSquareError(EigenstrataError):
    pass


class SingularMatrixError(EigenstrataError):
    pass


class BadPrimeError(EigenstrataError):
    """A denominator reduced to zero modulo the chosen prime."""


class ReconstructFailError(EigenstrataError):
    """No rational within the height bound matches the residues."""


class NotMonicError(EigenstrataError):
    pass


class SizeError(EigenstrataError):
    """Symbolic expansion guard tripped."""


class DimensionError(EigenstrataError):
    pass


class SizeMismatchError(EigenstrataError):
    pass


class DuplicateEigenvalueError(EigenstrataError):
    pass


class NonSymmetricError(EigenstrataError):
    pass


class VerificationFailError(EigenstrataError):
    """An interpolated polynomial failed exact re-verification on fresh samples."""


class MixedDegreeError(EigenstrataError):
    pass


class NotOnVarietyError(EigenstrataError):
    pass


class SizeGuardError(EigenstrataError):
    """Combinatorial size guard tripped."""


class DegenerateError(EigenstrataError):
    pass


class NonConvergenceError(EigenstrataError):
    pass

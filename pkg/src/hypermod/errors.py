"""Exception types shared across the package."""


class InternalInconsistencyError(RuntimeError):
    """A quantity that must be exact by construction came out wrong.

    Raised instead of rounding or clamping: a negative multiplicity or a
    non-exact division signals a bug, never a value to repair.
    """


class StabilizationError(RuntimeError):
    """A limit of shifted multiplicities failed to settle below the cap."""


class TableDomainError(ValueError):
    """A local-cohomology query fell outside the stored, derivable domain."""


class PathSpaceError(RuntimeError):
    """A path-space dimension was still growing when the length cap was hit."""

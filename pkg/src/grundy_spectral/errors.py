"""Exception types shared across the package."""


class GrundySpectralError(Exception):
    """Base class for all domain errors."""


class GraphFormatError(GrundySpectralError, ValueError):
    """Raised when an edge-list text is malformed."""


class CapExceededError(GrundySpectralError, ValueError):
    """Raised when an input exceeds a documented size cap."""


class BudgetExceededError(GrundySpectralError, RuntimeError):
    """Raised when a search exhausts its node-expansion budget."""

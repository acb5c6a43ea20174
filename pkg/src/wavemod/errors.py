"""Exception types shared across the package."""


class ConfigurationError(ValueError):
    """A parameter or configuration value violates a documented contract."""


class ShapeError(ValueError):
    """A sequence has an incompatible length (parity, divisibility, mismatch)."""

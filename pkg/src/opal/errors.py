"""Shared exception types."""


class StructuralError(ValueError):
    """Raised when degrees, arities, or endpoints fail to line up."""


class ConfigError(ValueError):
    """Raised for malformed suite configuration."""

"""Exception types shared across the package."""


class ContractViolation(Exception):
    """An operation was called with inputs that break its structural contract."""


class DomainError(ValueError):
    """A numeric input lies outside the operation's valid domain."""


class ConfigError(Exception):
    """A configuration document is missing, malformed, or fails validation."""


class DisplacementUnavailable(Exception):
    """No intact boundary pair exists on the requested axis."""

    def __init__(self, axis: str):
        self.axis = axis
        super().__init__(f"no intact {axis} boundary pair in both frames")

"""Validation Exception."""


# ----------------------------------------------------------------------------
# ----------------------------------------------------------------------------
class ValidationExceptionError(Exception):
    """Exception raised for configuration and command line validation errors."""

    # ----------------------------------------------------------------------------
    def __init__(self, base: str, key: str) -> None:
        """Initialize ValidationException with the offending section and key."""
        super().__init__(f"Invalid {key} in {base} configuration")
        self.base = base
        self.key = key

"""Structure Exception."""


# ----------------------------------------------------------------------------
# ----------------------------------------------------------------------------
class StructureExceptionError(Exception):
    """Exception raised for shape, extent and divisibility errors."""

    # ----------------------------------------------------------------------------
    def __init__(self, msg: str) -> None:
        """Initialize Structure Exception with a message."""
        super().__init__(msg)
        self.msg = msg

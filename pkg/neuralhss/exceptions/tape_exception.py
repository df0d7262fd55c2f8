"""Tape Exception."""


# ----------------------------------------------------------------------------
# ----------------------------------------------------------------------------
class TapeExceptionError(Exception):
    """Exception raised when a backward pass receives a stale or foreign tape."""

    # ----------------------------------------------------------------------------
    def __init__(self, msg: str) -> None:
        """Initialize Tape Exception with a message."""
        super().__init__(msg)
        self.msg = msg

"""Generation Exception."""


# ----------------------------------------------------------------------------
# ----------------------------------------------------------------------------
class GenerationExceptionError(Exception):
    """Exception raised when a dataset generator fails."""

    # ----------------------------------------------------------------------------
    def __init__(self, msg: str, index: int | None = None) -> None:
        """Initialize Generation Exception with a message and sample index."""
        if index is not None:
            msg = f"{msg} (sample {index})"
        super().__init__(msg)
        self.msg = msg
        self.index = index

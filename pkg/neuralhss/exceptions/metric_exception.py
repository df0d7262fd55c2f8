"""Metric Exception."""


# ----------------------------------------------------------------------------
# ----------------------------------------------------------------------------
class MetricExceptionError(Exception):
    """Exception raised when a metric or rollout is undefined for its input."""

    # ----------------------------------------------------------------------------
    def __init__(self, msg: str, index: int | None = None) -> None:
        """Initialize Metric Exception with a message and sample index."""
        if index is not None:
            msg = f"{msg} (sample {index})"
        super().__init__(msg)
        self.msg = msg
        self.index = index

"""Training Exception."""


# ----------------------------------------------------------------------------
# ----------------------------------------------------------------------------
class TrainingExceptionError(Exception):
    """Exception raised when training cannot start or diverges."""

    # ----------------------------------------------------------------------------
    def __init__(
        self, msg: str, epoch: int | None = None, step: int | None = None
    ) -> None:
        """Initialize Training Exception with a message and position."""
        if epoch is not None:
            msg = f"{msg} (epoch {epoch}, step {step})"
        super().__init__(msg)
        self.msg = msg
        self.epoch = epoch
        self.step = step

"""Artifact Exception."""


# ----------------------------------------------------------------------------
# ----------------------------------------------------------------------------
class ArtifactExceptionError(Exception):
    """Exception raised for unreadable or inconsistent files on disk."""

    # ----------------------------------------------------------------------------
    def __init__(self, msg: str, field: str | None = None) -> None:
        """Initialize Artifact Exception with a message and manifest field."""
        if field is not None:
            msg = f"{msg} [field: {field}]"
        super().__init__(msg)
        self.msg = msg
        self.field = field

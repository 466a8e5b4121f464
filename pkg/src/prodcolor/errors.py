"""Shared exception types."""


class CapExceeded(RuntimeError):
    """An operation would exceed a configured size cap.

    The message names the cap and the size that tripped it; nothing is
    silently truncated.
    """


class ParseError(ValueError):
    """Malformed graph or digraph text input, reported with a line number."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no

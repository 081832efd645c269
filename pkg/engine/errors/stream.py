"""Module containing exceptions raised while reading and replaying streams."""


class StreamError(Exception):
    """
    Exception representing a problem with an edge stream.

    Attributes:
        message {string} -- Message explaining what went wrong.
        line {int} -- Line number in the stream file (None if unknown).
        code {int} -- Exit code used by the CLI.

    """

    code = 2

    def __init__(self, message, line=None):
        """
        Initialize a stream error instance.

        Arguments:
            message {string} -- Message explaining what went wrong.
            line {int} -- Line number in the stream file (None if unknown).

        """
        if line is not None:
            message = f"line {line}: {message}"

        super().__init__(message)

        self.message = message
        self.line = line


class MalformedLine(StreamError):
    """A line does not follow the stream file grammar."""


class DuplicateInsert(StreamError):
    """An insertion of an edge that is already present."""


class DeleteAbsent(StreamError):
    """A deletion of an edge that is not present."""


class VertexOutOfRange(StreamError):
    """A vertex id outside of [0, n)."""


class TerminalFlagOnLaterEdge(StreamError):
    """A terminal flag attached to an edge other than the vertex's first one."""


class PassBudgetExceeded(StreamError):
    """A consumer or a run asked for more passes than it is allowed."""

    code = 3


class ModeMismatch(StreamError):
    """An insertion-only consumer was registered on a turnstile stream."""

    code = 3


class SpaceCapExceeded(StreamError):
    """The space ledger went over the configured word cap."""

    code = 3

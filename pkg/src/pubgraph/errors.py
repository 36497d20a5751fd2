"""Exception hierarchy shared by the library and the command line."""


class PubGraphError(Exception):
    """Base class for all errors raised by pubgraph."""

    exit_code = 1


class UsageError(PubGraphError, ValueError):
    """Invalid arguments or inputs that violate an operation's precondition."""

    exit_code = 2


class InvalidName(UsageError):
    """A name that is empty after normalization."""


class ParseError(PubGraphError):
    """Stream-level malformation in a bibliographic input.

    ``position`` is a human-readable location such as ``"byte 17"`` or
    ``"line 3, column 5"``.
    """

    exit_code = 3

    def __init__(self, message, position=None):
        self.position = position
        if position is not None:
            message = f"{message} (at {position})"
        super().__init__(message)


class IoError(PubGraphError):
    """An input could not be read or an output could not be written."""

    exit_code = 4


class DisconnectedGraph(PubGraphError):
    """A metric that requires a connected graph received a disconnected one."""

    exit_code = 5

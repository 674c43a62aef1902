"""
Exception hierarchy shared by every package
"""


class OnePOError(Exception):
    """Base class for all workbench errors"""


class GraphError(OnePOError, ValueError):
    """Malformed graph or invalid graph operation"""


class InvalidGraphError(GraphError):
    pass


class NotAnEdgeError(GraphError):
    pass


class DisconnectedGraphError(GraphError):
    pass


class NotATreeError(GraphError):
    pass


class PreconditionError(OnePOError):
    """An operation was called outside its precondition"""


class ModeError(PreconditionError):
    """Input lies outside the class a recognizer mode is defined on.

    This is not a reject: the caller may fall back to the 2-SAT oracle.
    """

    def __init__(self, mode: str, message: str = None):
        self.mode = mode
        super().__init__(message or f"input is outside the {mode} class")


class MalformedModelError(OnePOError, ValueError):
    pass


class PatternError(OnePOError, KeyError):
    """Unknown or untranscribed pattern name"""

    def __str__(self):
        return str(self.args[0]) if self.args else ""


class InvalidStepError(OnePOError, ValueError):
    pass


class A2PrimeViolation(InvalidStepError):
    """An A2 step attached to an edge lying in two or more induced cycles"""


class GeneratorError(OnePOError, ValueError):
    pass


class EnumerationRangeError(OnePOError, ValueError):
    pass


class UnknownSuiteError(OnePOError, KeyError):

    def __str__(self):
        return str(self.args[0]) if self.args else ""


class ParseError(OnePOError, ValueError):
    """Malformed input text, with the position of the first problem"""

    def __init__(self, message: str, line: int = 1, column: int = 1):
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}")


class UnsupportedFormatError(OnePOError, ValueError):
    """Value and text format do not fit together"""

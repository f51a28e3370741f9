"""Exception hierarchy.

Everything raised on bad input derives from :class:`TwoModeError`, which the
CLI maps to exit code 1.
"""


class TwoModeError(ValueError):
    """Base class for validation errors raised by this package."""


class IndexOutOfRange(TwoModeError):
    pass


class DuplicateEdge(TwoModeError):
    pass


class IntraPartEdge(TwoModeError):
    pass


class DisconnectedGraph(TwoModeError):
    pass


class NonConvergence(TwoModeError):
    pass


class InvalidSize(TwoModeError):
    pass


class SizeLimitExceeded(TwoModeError):
    pass


class NotATree(TwoModeError):
    pass


class RootNotAdjacentToAllA1(TwoModeError):
    pass


class DegreeGapTooSmall(TwoModeError):
    pass


class RootDegreeOne(TwoModeError):
    pass


class ContextMismatch(TwoModeError):
    pass


class MalformedLine(TwoModeError):
    def __init__(self, lineno, line):
        super().__init__(f"line {lineno}: cannot parse {line!r}")
        self.lineno = lineno
        self.line = line


class DuplicatePair(TwoModeError):
    pass


class LabelInBothParts(TwoModeError):
    pass

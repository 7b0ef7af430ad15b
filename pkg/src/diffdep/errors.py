"""Exception types shared across the package."""


class DiffDepError(Exception):
    """Base class for all errors raised by diffdep."""


class SignatureError(DiffDepError, ValueError):
    """Operands live in algebras with different signatures or arities."""


class DegreeError(DiffDepError, ValueError):
    """Degrees were requested for the zero polynomial."""


class ResourceLimitError(DiffDepError):
    """A search exceeded its configured bound.

    This is never a mathematical verdict: the object searched for exists,
    only the budget ran out.
    """


class InvariantError(DiffDepError, AssertionError):
    """An internal algebraic invariant was violated."""


class ParseError(DiffDepError, ValueError):
    def __init__(self, message, line=1, column=1):
        self.line = line
        self.column = column
        self.message = message
        super().__init__(f"line {line}, column {column}: {message}")

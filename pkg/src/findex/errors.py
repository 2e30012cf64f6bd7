"""Exception hierarchy. Every input problem is a :class:`GraphError`."""

from __future__ import annotations


class GraphError(ValueError):
    """Base class for invalid graphs, bad parameters and malformed documents."""


class LoopEdge(GraphError):
    def __init__(self, pair):
        self.pair = tuple(pair)
        super().__init__(f"loop edge {self.pair}: endpoints must differ")


class EndpointOutOfRange(GraphError):
    def __init__(self, pair, n):
        self.pair = tuple(pair)
        self.n = n
        super().__init__(f"edge {self.pair} has an endpoint outside 0..{n - 1}")


class DuplicateEdge(GraphError):
    def __init__(self, pair):
        self.pair = tuple(pair)
        super().__init__(f"duplicate edge {self.pair}")


class SizeTooSmall(GraphError):
    pass


class InvalidProbability(GraphError):
    pass


class FormatSyntaxError(GraphError):
    """Malformed document; ``line`` and ``column`` are 1-based when known."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)


class CountMismatch(GraphError):
    def __init__(self, declared, actual):
        self.declared = declared
        self.actual = actual
        super().__init__(f"header declares {declared} edges but {actual} edge lines follow")

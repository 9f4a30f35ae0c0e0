"""Exception hierarchy shared across the package."""

from __future__ import annotations


class UpoError(Exception):
    """Base class for every error raised by :mod:`upo`."""


# graph construction / lookup


class GraphError(UpoError, ValueError):
    def __init__(self, message: str, witness: tuple[str, ...] = ()):
        super().__init__(message)
        self.witness = witness


class CycleDetected(GraphError):
    pass


class SelfLoop(GraphError):
    pass


class BoundaryNotLeaf(GraphError):
    pass


class DuplicateId(GraphError):
    pass


class DanglingEndpoint(GraphError):
    pass


class UnknownVertex(GraphError, KeyError):
    def __str__(self) -> str:
        return self.args[0]


class UnknownEdge(GraphError, KeyError):
    def __str__(self) -> str:
        return self.args[0]


# orders


class OrderError(UpoError, ValueError):
    pass


class MarkersNotSorted(OrderError):
    pass


class OverlappingDomains(OrderError):
    pass


class DomainMismatch(OrderError):
    pass


# composition


class ComposeError(UpoError):
    #: index of the failing stage when raised from ``compose_many``/``pipeline``
    stage: int | None = None


class ArityMismatch(ComposeError, ValueError):
    pass


class NotAdmissibleUpo(ComposeError, ValueError):
    def __init__(self, message: str, side: str, report):
        super().__init__(message)
        self.side = side
        self.report = report


class WireFusionCollision(ComposeError, ValueError):
    pass


class IdCollision(ComposeError, ValueError):
    pass


# layers / oracle


class InvalidCell(UpoError, ValueError):
    pass


class WidthMismatch(ComposeError, ValueError):
    def __init__(self, message: str, layer: int):
        super().__init__(message)
        self.layer = layer


class TooLarge(UpoError, ValueError):
    pass


# text formats


class ParseError(UpoError, ValueError):
    def __init__(self, message: str, line: int | None = None):
        super().__init__(f"line {line}: {message}" if line else message)
        self.line = line


class UpgSyntaxError(ParseError):
    pass


class ValidationError(ParseError):
    pass


class OrderDomainMismatch(ParseError):
    pass

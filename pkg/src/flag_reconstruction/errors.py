"""Exceptions raised by flag_reconstruction.

Everything derives from `FlagReconstructionError`, itself a `ValueError`, so
callers that only guard against bad input with `except ValueError` keep
working.
"""

from collections.abc import Sequence


class FlagReconstructionError(ValueError):
    pass


class UnknownVertexError(FlagReconstructionError):
    def __init__(self, vertices: Sequence[str]) -> None:
        self.vertices = tuple(vertices)
        msg = f"Unknown vertex label(s): {', '.join(map(repr, self.vertices))}"
        super().__init__(msg)


class LabelCollisionError(FlagReconstructionError):
    def __init__(self, labels: Sequence[str]) -> None:
        self.labels = tuple(labels)
        msg = f"Vertex labels shared by both graphs: {', '.join(map(repr, self.labels))}"
        super().__init__(msg)


class InvalidParameterError(FlagReconstructionError):
    pass


class NotASimplexError(FlagReconstructionError):
    def __init__(self, simplex: Sequence[str]) -> None:
        self.simplex = tuple(simplex)
        msg = f"{list(self.simplex)} is not a simplex of the complex"
        super().__init__(msg)


class DimensionCapExceededError(FlagReconstructionError):
    def __init__(self, dimension: int, cap: int) -> None:
        self.dimension = dimension
        self.cap = cap
        msg = (
            f"Flag complex has a simplex of dimension {dimension}, "
            f"above the configured cap of {cap}"
        )
        super().__init__(msg)


class EmptyComplexError(FlagReconstructionError):
    pass


class BoundaryExtractionError(FlagReconstructionError):
    """The complex is not a relative homology manifold of the expected shape."""

    def __init__(self, vertex: str, reason: str) -> None:
        self.vertex = vertex
        self.reason = reason
        msg = f"Cannot extract boundary at vertex {vertex!r}: {reason}"
        super().__init__(msg)


class HypothesisError(FlagReconstructionError):
    pass


class Graph6FormatError(FlagReconstructionError):
    pass


class ParseError(FlagReconstructionError):
    def __init__(self, line_number: int, reason: str) -> None:
        self.line_number = line_number
        self.reason = reason
        msg = f"line {line_number}: {reason}"
        super().__init__(msg)


class DeckMismatchError(FlagReconstructionError):
    pass

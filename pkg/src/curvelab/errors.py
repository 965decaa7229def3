"""Exception types shared across the package."""

from __future__ import annotations


class CurvelabError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(CurvelabError):
    """Malformed polynomial text.  Carries the offset where parsing stopped."""

    def __init__(self, position: int, expected: str):
        self.position = position
        self.expected = expected
        super().__init__(f"syntax error at position {position}: expected {expected}")


class UnknownVariableError(CurvelabError):
    def __init__(self, name: str, position: int = -1):
        self.name = name
        self.position = position
        super().__init__(f"unknown variable {name!r}")


class DimensionMismatchError(CurvelabError):
    pass


class ExtensionLimitError(CurvelabError):
    """A computation would require a field tower or an extension beyond the
    configured degree bound."""


class NotReducedError(CurvelabError):
    pass


class NonReducedModelError(CurvelabError):
    pass


class NonReducedResultError(CurvelabError):
    pass


class PointNotOnCurveError(CurvelabError):
    pass


class UnresolvedError(CurvelabError):
    pass


class DepthExceededError(CurvelabError):
    def __init__(self, depth: int):
        self.depth = depth
        super().__init__(f"blow-up depth cap {depth} exceeded")


class NonIsolatedCriticalPointError(CurvelabError):
    pass


class DuplicateSlopeError(CurvelabError):
    pass


class ParameterClashError(CurvelabError):
    pass


class UnknownNameError(CurvelabError):
    pass


class SingularSurfacePointError(CurvelabError):
    pass


class NonReducedSectionError(CurvelabError):
    pass


class EliminationTooLargeError(CurvelabError):
    pass


class FrameConsistencyError(CurvelabError):
    """The two deterministic frame completions disagreed on a weight excess."""

"""Exception hierarchy.

Every error raised by this package derives from LikingToolkitError, so
callers (the CLI in particular) can distinguish "bad input" from genuine
bugs with a single except clause.
"""


class LikingToolkitError(Exception):
    """Base class for all errors raised by liking_digraphs."""


# -- digraph construction ----------------------------------------------------

class OrderTooLargeError(LikingToolkitError):
    """Vertex count exceeds the 64-vertex representation limit."""


class LoopArcError(LikingToolkitError):
    """An arc u -> u was supplied; loops are not representable."""


class VertexOutOfRangeError(LikingToolkitError):
    """A vertex index falls outside 0..n-1."""


class DuplicateArcError(LikingToolkitError):
    """The same ordered pair was supplied twice."""


class EmptySubsetError(LikingToolkitError):
    """An operation that needs a nonempty vertex subset got the empty set."""


class NotSymmetricError(LikingToolkitError):
    """An adjacency matrix expected to be symmetric is not."""


# -- .dg text format ---------------------------------------------------------

class ParseError(LikingToolkitError):
    """Malformed .dg text.  Carries 1-based line and column of the defect."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class NonZeroDiagonalError(ParseError):
    """The adjacency matrix has a 1 on its diagonal (a loop)."""


class RaggedMatrixError(ParseError):
    """A matrix row does not have exactly n characters."""


# -- canonical forms ---------------------------------------------------------

class OrderTooLargeForCanonError(LikingToolkitError):
    """Digraph order exceeds the canonical-form search bound."""


# -- liking analysis ---------------------------------------------------------

class BadParametersError(LikingToolkitError):
    """Parameters (t, lambda) outside the range an operation accepts."""


class NotALikingDigraphError(LikingToolkitError):
    """A validator's liking-digraph precondition was checked and is false."""


class HypothesisNotMetError(LikingToolkitError):
    """Neither hypothesis branch of a conditional validator applies; skip."""


class ArithmeticOverflowError(LikingToolkitError):
    """Binomial arguments outside the supported exact range."""


class BadSubsetSizeError(LikingToolkitError):
    """Subset size outside 1..t-1 for the reduced-digraph construction."""


# -- search engine -----------------------------------------------------------

class ConfigInvalidError(LikingToolkitError):
    """SearchConfig violates its own invariants."""


class OrderTooLargeForOracleError(LikingToolkitError):
    """Brute-force oracle is capped at 5 vertices."""


# -- design theory -----------------------------------------------------------

class NotDiregularError(LikingToolkitError):
    """Design extraction needs a diregular digraph.  Carries the first
    vertex (0-based) whose out- and in-degree differ."""

    def __init__(self, message: str, vertex: int):
        super().__init__(message)
        self.vertex = vertex


class NonIntegerCountError(LikingToolkitError):
    """A design count formula did not divide exactly; input is not a design."""


class NotApplicableError(LikingToolkitError):
    """A check's side condition (e.g. t >= 3) does not hold."""

"""Loop-free digraphs on up to 64 vertices, stored as out-neighborhood bitmasks.

Row i of ``out_rows`` is the mask of out-neighbors of vertex i, so every
vertex set fits one machine word and neighborhood queries are single AND
operations.  Digraph values are immutable after construction; all queries
are read-only and safe to share across workers.

The ``.dg`` text format, used by the CLI and the catalog files:
line 1 is the decimal order n, lines 2..n+1 are exactly n characters from
{0,1}; character j of line i+1 is 1 iff the arc i -> j is present.  The
diagonal must be zero.  Vertices are 0-indexed in code; human-facing output
labels them v1..vn.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from .bitset import bits
from .errors import (
    DuplicateArcError,
    EmptySubsetError,
    LoopArcError,
    NonZeroDiagonalError,
    NotSymmetricError,
    OrderTooLargeError,
    ParseError,
    RaggedMatrixError,
    VertexOutOfRangeError,
)

MAX_ORDER = 64


@dataclass(frozen=True)
class Digraph:
    """Immutable loop-free digraph: order n plus one out-row mask per vertex."""

    n: int
    out_rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_ORDER:
            raise OrderTooLargeError(f"order {self.n} outside 1..{MAX_ORDER}")
        if len(self.out_rows) != self.n:
            raise VertexOutOfRangeError(
                f"expected {self.n} out-rows, got {len(self.out_rows)}")
        universe = (1 << self.n) - 1
        for i, row in enumerate(self.out_rows):
            if row & ~universe:
                raise VertexOutOfRangeError(
                    f"row of v{i + 1} has bits beyond vertex v{self.n}")
            if row >> i & 1:
                raise LoopArcError(f"loop at v{i + 1}")

    @property
    def universe(self) -> int:
        """Mask of all n vertices."""
        return (1 << self.n) - 1

    def out_neighbors(self, v: int) -> int:
        return self.out_rows[v]

    def in_neighbors(self, v: int) -> int:
        bit = 1 << v
        m = 0
        for u, row in enumerate(self.out_rows):
            if row & bit:
                m |= 1 << u
        return m

    def out_degree(self, v: int) -> int:
        return self.out_rows[v].bit_count()

    def in_degree(self, v: int) -> int:
        return self.in_neighbors(v).bit_count()

    def has_arc(self, u: int, v: int) -> bool:
        return bool(self.out_rows[u] >> v & 1)

    @property
    def arc_count(self) -> int:
        return sum(row.bit_count() for row in self.out_rows)

    def arcs(self) -> list[tuple[int, int]]:
        """All arcs (u, v), sorted."""
        return [(u, v) for u, row in enumerate(self.out_rows) for v in bits(row)]

    def reverse(self) -> Digraph:
        """Digraph with every arc direction flipped."""
        return Digraph(self.n, tuple(self.in_neighbors(v) for v in range(self.n)))

    def is_complete(self) -> bool:
        universe = self.universe
        return all(row == universe ^ (1 << i) for i, row in enumerate(self.out_rows))

    def diregular_degree(self) -> int | None:
        """The common out- and in-degree k >= 1, or None if not diregular."""
        outs, ins = degree_sequences(self)
        k = outs[0]
        if k >= 1 and all(d == k for d in outs) and all(d == k for d in ins):
            return k
        return None


def build(n: int, arcs: Iterable[tuple[int, int]]) -> Digraph:
    """Digraph on n vertices with exactly the given arcs.

    Rejects loops, out-of-range endpoints, and duplicate pairs.
    """
    if n < 1:
        raise VertexOutOfRangeError(f"order {n} must be at least 1")
    if n > MAX_ORDER:
        raise OrderTooLargeError(f"order {n} exceeds {MAX_ORDER}")
    rows = [0] * n
    for u, v in arcs:
        if not (0 <= u < n and 0 <= v < n):
            raise VertexOutOfRangeError(f"arc ({u}, {v}) outside 0..{n - 1}")
        if u == v:
            raise LoopArcError(f"loop at v{u + 1}")
        if rows[u] >> v & 1:
            raise DuplicateArcError(f"arc ({u}, {v}) supplied twice")
        rows[u] |= 1 << v
    return Digraph(n, tuple(rows))


def complete_digraph(n: int) -> Digraph:
    """Both arcs between every pair of distinct vertices."""
    if n < 1:
        raise VertexOutOfRangeError(f"order {n} must be at least 1")
    if n > MAX_ORDER:
        raise OrderTooLargeError(f"order {n} exceeds {MAX_ORDER}")
    universe = (1 << n) - 1
    return Digraph(n, tuple(universe ^ (1 << i) for i in range(n)))


def common_out_neighbors(d: Digraph, subset: int) -> int:
    """Intersection of out-neighborhoods over all members of the subset mask."""
    if subset == 0:
        raise EmptySubsetError("common out-neighborhood of the empty set")
    if subset & ~d.universe:
        raise VertexOutOfRangeError("subset has bits beyond the digraph order")
    m = d.universe
    for v in bits(subset):
        m &= d.out_rows[v]
    return m


def common_in_neighbors(d: Digraph, subset: int) -> int:
    """Intersection of in-neighborhoods over all members of the subset mask."""
    if subset == 0:
        raise EmptySubsetError("common in-neighborhood of the empty set")
    if subset & ~d.universe:
        raise VertexOutOfRangeError("subset has bits beyond the digraph order")
    m = d.universe
    for v in bits(subset):
        m &= d.in_neighbors(v)
    return m


def degree_sequences(d: Digraph) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """(out-degrees, in-degrees) in vertex order."""
    outs = tuple(row.bit_count() for row in d.out_rows)
    ins = [0] * d.n
    for row in d.out_rows:
        for v in bits(row):
            ins[v] += 1
    return outs, tuple(ins)


def induced_subdigraph(d: Digraph, subset: int) -> Digraph:
    """Subdigraph induced on the subset, relabeled 0..|S|-1 by ascending
    original index."""
    if subset == 0:
        raise EmptySubsetError("induced subdigraph on the empty set")
    if subset & ~d.universe:
        raise VertexOutOfRangeError("subset has bits beyond the digraph order")
    members = list(bits(subset))
    position = {v: i for i, v in enumerate(members)}
    rows = []
    for v in members:
        row = 0
        for w in bits(d.out_rows[v] & subset):
            row |= 1 << position[w]
        rows.append(row)
    return Digraph(len(members), tuple(rows))


def double_graph(adjacency: Sequence[int]) -> Digraph:
    """Digraph obtained from a simple undirected graph by replacing each
    edge with a 2-cycle of opposite arcs.

    The input is the graph's symmetric adjacency as row masks; the result
    satisfies d+(v) = d-(v) = deg(v).
    """
    n = len(adjacency)
    if n < 1:
        raise VertexOutOfRangeError("graph must have at least one vertex")
    if n > MAX_ORDER:
        raise OrderTooLargeError(f"order {n} exceeds {MAX_ORDER}")
    universe = (1 << n) - 1
    for i, row in enumerate(adjacency):
        if row & ~universe:
            raise VertexOutOfRangeError(
                f"row of v{i + 1} has bits beyond vertex v{n}")
        if row >> i & 1:
            raise LoopArcError(f"loop at v{i + 1}")
    for i in range(n):
        for j in bits(adjacency[i]):
            if not adjacency[j] >> i & 1:
                raise NotSymmetricError(
                    f"edge v{i + 1}-v{j + 1} present in only one direction")
    return Digraph(n, tuple(adjacency))


def read_digraph(text: str) -> Digraph:
    """Parse .dg text.  Errors carry 1-based line and column."""
    lines = text.splitlines()
    while lines and lines[-1].strip() == "":
        lines.pop()
    if not lines:
        raise ParseError("empty input", 1, 1)
    header = lines[0].strip()
    if not header.isdigit():
        raise ParseError(f"expected a decimal vertex count, got {header!r}", 1, 1)
    n = int(header)
    if n < 1:
        raise ParseError("vertex count must be at least 1", 1, 1)
    if n > MAX_ORDER:
        raise OrderTooLargeError(f"order {n} exceeds {MAX_ORDER}")
    if len(lines) - 1 < n:
        raise ParseError(f"expected {n} matrix rows, found {len(lines) - 1}",
                         len(lines) + 1, 1)
    if len(lines) - 1 > n:
        raise ParseError("unexpected content after the matrix", n + 2, 1)
    rows = []
    for i in range(n):
        line = lines[i + 1].rstrip()
        if len(line) != n:
            raise RaggedMatrixError(
                f"row has {len(line)} characters, expected {n}",
                i + 2, min(len(line), n) + 1)
        row = 0
        for j, ch in enumerate(line):
            if ch == "1":
                if j == i:
                    raise NonZeroDiagonalError(
                        f"diagonal entry of v{i + 1} is 1", i + 2, j + 1)
                row |= 1 << j
            elif ch != "0":
                raise ParseError(f"invalid character {ch!r}", i + 2, j + 1)
        rows.append(row)
    return Digraph(n, tuple(rows))


def write_digraph(d: Digraph) -> str:
    """Serialize to .dg text (row i+1, character j is the arc i -> j)."""
    lines = [str(d.n)]
    for i in range(d.n):
        row = d.out_rows[i]
        lines.append("".join("1" if row >> j & 1 else "0" for j in range(d.n)))
    return "\n".join(lines) + "\n"

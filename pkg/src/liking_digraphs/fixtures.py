"""Built-in example digraphs.

The seven-vertex example is a (2,2)-liking digraph that is not diregular:
every pair of vertices has exactly two common out-neighbors, yet v5 has
out-degree 3 while the rest have 4 (in-degrees 5,3,3,3,3,5,5).  It shows
that at t=2, the liking property does not force diregularity, and it
anchors the self-verification suite.  The same digraph ships as
data/nondiregular7.dg for CLI use; a test pins the two copies together.
"""

from __future__ import annotations

from .digraph import Digraph, build

# Arcs of the example, 0-indexed (v1 is vertex 0).
_EXAMPLE7_ARCS: tuple[tuple[int, int], ...] = (
    (0, 2), (0, 3), (0, 5), (0, 6),  # v1 -> v3 v4 v6 v7
    (1, 0), (1, 3), (1, 4), (1, 6),  # v2 -> v1 v4 v5 v7
    (2, 0), (2, 1), (2, 3), (2, 5),  # v3 -> v1 v2 v4 v6
    (3, 1), (3, 4), (3, 5), (3, 6),  # v4 -> v2 v5 v6 v7
    (4, 0), (4, 5), (4, 6),          # v5 -> v1 v6 v7
    (5, 0), (5, 1), (5, 2), (5, 6),  # v6 -> v1 v2 v3 v7
    (6, 0), (6, 2), (6, 4), (6, 5),  # v7 -> v1 v3 v5 v6
)


def nondiregular_22_example() -> Digraph:
    """The 7-vertex, 27-arc (2,2)-liking digraph that is not diregular."""
    return build(7, _EXAMPLE7_ARCS)


def corrupted_22_example() -> Digraph:
    """The example with one arc removed; fails the (2,2) liking check.

    Negative control for the verification suite: feeding this in place of
    the real example must make claim P1 fail.
    """
    return build(7, _EXAMPLE7_ARCS[1:])

"""Canonical labelings for small digraphs.

Strategy: bucket vertices by the invariant pair (out-degree, in-degree),
list the buckets in ascending pair order, and exhaustively minimize the
row-concatenated adjacency bitstring over all relabelings that keep each
vertex inside its bucket.  Any isomorphism maps a vertex to one with the
same degree pair, so the restricted minimum is still a complete
isomorphism invariant, while the search shrinks from n! to the product of
bucket factorials.  Equal keys certify isomorphism; the key decodes back
to the representative digraph.

Complete and edgeless digraphs are label-transitive within this scheme and
skip the search entirely.  The order cap keeps worst cases (one big bucket)
affordable; catalogs in practice stay below 10 vertices.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations, product

from .bitset import bits
from .digraph import Digraph, degree_sequences
from .errors import OrderTooLargeForCanonError

CANON_MAX_ORDER = 12


def canonical_form(d: Digraph, max_order: int = CANON_MAX_ORDER) -> bytes:
    """Label-invariant key: the minimized row-concatenated '0'/'1' bitstring."""
    rows = _canonical_rows(d.n, d.out_rows, max_order)
    n = d.n
    return "".join(format(r, f"0{n}b") for r in rows).encode("ascii")


def canonical_digraph(d: Digraph, max_order: int = CANON_MAX_ORDER) -> Digraph:
    """The relabeling of d that realizes its canonical key."""
    rows = _canonical_rows(d.n, d.out_rows, max_order)
    n = d.n
    # _canonical_rows stores column j at bit n-1-j; flip back to column-j-at-bit-j.
    std = []
    for r in rows:
        row = 0
        for b in bits(r):
            row |= 1 << (n - 1 - b)
        std.append(row)
    return Digraph(n, tuple(std))


def are_isomorphic(d1: Digraph, d2: Digraph,
                   max_order: int = CANON_MAX_ORDER) -> bool:
    if d1.n != d2.n or d1.arc_count != d2.arc_count:
        return False
    return canonical_form(d1, max_order) == canonical_form(d2, max_order)


def digraph_from_key(key: bytes) -> Digraph:
    """Decode a canonical key (n*n '0'/'1' bytes) back into a digraph."""
    text = key.decode("ascii")
    n = int(len(text) ** 0.5)
    if n * n != len(text):
        raise ValueError(f"key length {len(text)} is not a square")
    rows = []
    for i in range(n):
        row = 0
        for j, ch in enumerate(text[i * n:(i + 1) * n]):
            if ch == "1":
                row |= 1 << j
        rows.append(row)
    return Digraph(n, tuple(rows))


def degree_buckets(n: int, out_rows: tuple[int, ...]) -> list[list[int]]:
    """Vertices grouped by (out-degree, in-degree), groups in ascending
    pair order.  This partition both restricts and orders the canonical
    relabeling search."""
    outs, ins = degree_sequences(Digraph(n, out_rows))
    buckets: dict[tuple[int, int], list[int]] = {}
    for v in range(n):
        buckets.setdefault((outs[v], ins[v]), []).append(v)
    return [buckets[key] for key in sorted(buckets)]


@lru_cache(maxsize=65536)
def _canonical_rows(n: int, out_rows: tuple[int, ...],
                    max_order: int) -> tuple[int, ...]:
    """Minimal comparison-row tuple (column j at bit n-1-j, so integer order
    equals bitstring order) over bucket-respecting relabelings."""
    if n > max_order:
        raise OrderTooLargeForCanonError(
            f"order {n} exceeds the canonical-form bound {max_order}")

    arc_total = sum(r.bit_count() for r in out_rows)
    if arc_total in (0, n * (n - 1)):
        # Edgeless or complete: every relabeling gives the same string.
        return tuple(_compare_rows(n, out_rows, tuple(range(n))))

    groups = degree_buckets(n, out_rows)
    if all(len(g) == 1 for g in groups):
        order = tuple(v for g in groups for v in g)
        return tuple(_compare_rows(n, out_rows, order))

    nbrs = [list(bits(row)) for row in out_rows]
    weight = [1 << (n - 1 - i) for i in range(n)]
    pos = [0] * n
    order = [0] * n
    best: list[int] | None = None
    for arrangement in product(*(permutations(g) for g in groups)):
        idx = 0
        for part in arrangement:
            for v in part:
                pos[v] = idx
                order[idx] = v
                idx += 1
        rows: list[int] = []
        decided_better = False
        for i in range(n):
            row = 0
            for w in nbrs[order[i]]:
                row |= weight[pos[w]]
            if not decided_better and best is not None:
                if row > best[i]:
                    rows = []
                    break
                if row < best[i]:
                    decided_better = True
            rows.append(row)
        if rows and (best is None or decided_better):
            best = rows
    assert best is not None
    return tuple(best)


def _compare_rows(n: int, out_rows: tuple[int, ...],
                  order: tuple[int, ...]) -> list[int]:
    pos = [0] * n
    for idx, v in enumerate(order):
        pos[v] = idx
    rows = []
    for i in range(n):
        row = 0
        for w in bits(out_rows[order[i]]):
            row |= 1 << (n - 1 - pos[w])
        rows.append(row)
    return rows


def find_isomorphism(n: int, rows1: tuple[int, ...],
                     rows2: tuple[int, ...]) -> list[int] | None:
    """A vertex mapping phi with rows2 = phi(rows1), or None.

    Bucket-constrained backtracking: a vertex may only map to one with the
    same degree pair, and every assignment is checked for arc agreement
    (both directions) against all earlier assignments, so a returned
    mapping is a verified isomorphism.  Used by the search's catalog dedup
    to avoid re-canonicalizing every labeled copy of an already-found
    class; exhaustive, so None is conclusive.
    """
    if sum(r.bit_count() for r in rows1) != sum(r.bit_count() for r in rows2):
        return None
    groups1 = degree_buckets(n, rows1)
    groups2 = degree_buckets(n, rows2)
    if [len(g) for g in groups1] != [len(g) for g in groups2]:
        return None
    outs1 = [r.bit_count() for r in rows1]
    outs2 = [r.bit_count() for r in rows2]

    # Flatten: source vertices in bucket order; candidate targets per bucket.
    source = [v for g in groups1 for v in g]
    candidates = {v: groups2[i] for i, g in enumerate(groups1) for v in g}
    if any(outs1[source[i]] != outs2[candidates[source[i]][0]]
           for i in range(n)):
        return None

    phi = [-1] * n
    used = [False] * n

    def extend(i: int) -> bool:
        if i == n:
            return True
        v = source[i]
        rv = rows1[v]
        for w in candidates[v]:
            if used[w]:
                continue
            ok = True
            for j in range(i):
                u = source[j]
                pu = phi[u]
                if (rv >> u & 1) != (rows2[w] >> pu & 1):
                    ok = False
                    break
                if (rows1[u] >> v & 1) != (rows2[pu] >> w & 1):
                    ok = False
                    break
            if ok:
                phi[v] = w
                used[w] = True
                if extend(i + 1):
                    return True
                phi[v] = -1
                used[w] = False
        return False

    if not extend(0):
        return None
    # Final belt-and-braces: the mapping must reproduce rows2 exactly.
    for v in range(n):
        mapped = 0
        for w in bits(rows1[v]):
            mapped |= 1 << phi[w]
        if mapped != rows2[phi[v]]:
            return None
    return phi

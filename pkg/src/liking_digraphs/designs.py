"""Symmetric design extraction from diregular liking digraphs.

A k-diregular (t,lam)-liking digraph on n vertices yields a symmetric
t-(n,k,lam) design: vertices become varieties, in-neighborhoods become
blocks.  Blocks are a multiset (degenerate inputs can repeat an
in-neighborhood) and are kept in vertex order, one block per vertex, which
is exactly why the extracted designs are symmetric: b = v by construction,
and the count formulas then force each variety into exactly k blocks.

All count arithmetic is integer multiply-then-exact-divide; a division
that does not come out exact is reported as an error because it proves the
input was not a design.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .bitset import bits, subsets_fixed_size
from .digraph import Digraph, degree_sequences
from .errors import (
    BadParametersError,
    NonIntegerCountError,
    NotApplicableError,
    NotDiregularError,
    NotALikingDigraphError,
)
from .liking import binomial, check_liking


@dataclass(frozen=True)
class Design:
    """A t-(v,k,lam) design candidate: varieties 0..v-1, blocks as masks.

    Construction does not validate the axioms; verify_design does, so that
    deliberately broken candidates can be represented and rejected.
    """

    v: int
    k: int
    t: int
    lam: int
    blocks: tuple[int, ...]


class DesignCheck(NamedTuple):
    ok: bool
    # None, or ("block-size", index, size) / ("variety-range", index)
    # / ("coverage", subset_mask, count)
    violation: tuple | None


class DesignCounts(NamedTuple):
    b: int
    r: int
    symmetric: bool
    consistent: bool
    problem: str | None


def _check_parameters(design: Design) -> None:
    if not (design.v > design.k >= design.t >= 1):
        raise BadParametersError(
            f"need v > k >= t >= 1, got v={design.v}, k={design.k}, t={design.t}")
    if design.lam < 1:
        raise BadParametersError(f"lambda={design.lam} must be positive")


def verify_design(design: Design) -> DesignCheck:
    """Check the three design axioms by exhaustive t-subset counting.

    Returns the first violation in a deterministic order: block sizes in
    block order, then coverage counts over t-subsets in colex order.
    """
    _check_parameters(design)
    universe = (1 << design.v) - 1
    for i, block in enumerate(design.blocks):
        if block & ~universe:
            return DesignCheck(False, ("variety-range", i))
        size = block.bit_count()
        if size != design.k:
            return DesignCheck(False, ("block-size", i, size))
    for smask in subsets_fixed_size(design.v, design.t):
        count = 0
        for block in design.blocks:
            if smask & block == smask:
                count += 1
        if count != design.lam:
            return DesignCheck(False, ("coverage", smask, count))
    return DesignCheck(True, None)


def extract_design(d: Digraph, t: int, lam: int) -> Design:
    """Design from a diregular (t,lam)-liking digraph: in-neighborhoods as
    blocks, one per vertex."""
    report = check_liking(d, t, lam)
    if not report.verdict:
        raise NotALikingDigraphError(
            f"not ({t},{lam})-liking: subset {report.witness:#x} has "
            f"{report.witness_count} common out-neighbors")
    outs, ins = degree_sequences(d)
    for v in range(d.n):
        if outs[v] != ins[v]:
            raise NotDiregularError(
                f"v{v + 1} has out-degree {outs[v]} but in-degree {ins[v]}", v)
    k = outs[0]
    for v in range(d.n):
        if outs[v] != k:
            raise NotDiregularError(
                f"v{v + 1} has degree {outs[v]}, v1 has {k}", v)
    if k < 1:
        raise NotDiregularError("diregularity requires positive degree", 0)
    blocks = tuple(d.in_neighbors(v) for v in range(d.n))
    return Design(v=d.n, k=k, t=t, lam=lam, blocks=blocks)


def design_counts(design: Design) -> DesignCounts:
    """Count formulas with exact division, checked against the actual blocks.

    b = lam*C(v,t)/C(k,t) and r = lam*C(v-1,t-1)/C(k-1,t-1); symmetric
    means b = v.  consistent reports whether the actual block list matches:
    b blocks, every variety in exactly r of them, and in exactly k of them
    when symmetric.
    """
    _check_parameters(design)
    v, k, t, lam = design.v, design.k, design.t, design.lam

    num = lam * binomial(v, t)
    den = binomial(k, t)
    if num % den:
        raise NonIntegerCountError(
            f"block count {lam}*C({v},{t})/C({k},{t}) is not an integer")
    b = num // den

    num = lam * binomial(v - 1, t - 1)
    den = binomial(k - 1, t - 1)
    if num % den:
        raise NonIntegerCountError(
            f"replication {lam}*C({v - 1},{t - 1})/C({k - 1},{t - 1}) "
            "is not an integer")
    r = num // den

    symmetric = b == v
    consistent = True
    problem = None
    if len(design.blocks) != b:
        consistent = False
        problem = f"{len(design.blocks)} blocks but the formula gives b={b}"
    else:
        replication = [0] * v
        for block in design.blocks:
            for x in bits(block):
                replication[x] += 1
        for x in range(v):
            if replication[x] != r:
                consistent = False
                problem = f"variety {x + 1} is in {replication[x]} blocks, not r={r}"
                break
            if symmetric and replication[x] != k:
                consistent = False
                problem = f"variety {x + 1} is in {replication[x]} blocks, not k={k}"
                break
    return DesignCounts(b, r, symmetric, consistent, problem)


def check_hughes_bound(design: Design) -> bool:
    """For symmetric designs with t >= 3, block size is at least v-1.

    Vacuously true for non-symmetric designs; t < 3 is out of the bound's
    scope and reported as such.
    """
    if design.t < 3:
        raise NotApplicableError(f"bound needs t >= 3, got t={design.t}")
    counts = design_counts(design)
    if not counts.symmetric:
        return True
    return design.k >= design.v - 1


def write_design(design: Design) -> str:
    """Design file: 't v k lambda' then one sorted 1-indexed block per line."""
    lines = [f"{design.t} {design.v} {design.k} {design.lam}"]
    for block in design.blocks:
        lines.append(" ".join(str(x + 1) for x in bits(block)))
    return "\n".join(lines) + "\n"


def read_design(text: str) -> Design:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise BadParametersError("empty design file")
    try:
        t, v, k, lam = (int(x) for x in lines[0].split())
    except ValueError as exc:
        raise BadParametersError(f"bad design header {lines[0]!r}") from exc
    blocks = []
    for ln in lines[1:]:
        members = [int(x) - 1 for x in ln.split()]
        if any(x < 0 for x in members):
            raise BadParametersError(f"varieties are 1-indexed: {ln!r}")
        mask = 0
        for x in members:
            mask |= 1 << x
        blocks.append(mask)
    return Design(v=v, k=k, t=t, lam=lam, blocks=tuple(blocks))

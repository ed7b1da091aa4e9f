"""Exhaustive, isomorph-free enumeration of (t,lam)-liking digraphs.

The search assigns one full out-neighborhood row per vertex, in vertex
order.  A placed row never changes, so intersections among placed rows are
final and each rule rejects exactly, not approximately:

  R1 (min out-degree): a row needs at least t+lam-1 bits.
  R2 (exact intersections): every t-subset of placed rows that includes
      the newest row must meet in exactly lam vertices.  Applied at every
      depth this is the whole liking definition, so leaves need no second
      pass while R2 is on.
  R3 (subset lower bound): every smaller subset including the newest row
      must meet in at least lam + (t - size) vertices.  Its singleton case
      coincides with R1 and is skipped while R1 is on.
  R4 (symmetry breaking, optional): out-degrees non-increasing in vertex
      index.  Sound because every isomorphism class has such a labeling
      and canonical dedup runs afterward regardless.

Disabling any one rule must never change the catalog, only the node
counts; the tests enforce that against the unpruned brute-force oracle.

Parallelism and budget: the candidate first rows form a fixed task list.
Each task owns an equal share of the node budget and tasks merge by
canonical key, so catalogs, class counts, and truncation points are
identical for any worker count.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations, product

from .canon import canonical_digraph, canonical_form
from .digraph import Digraph
from .errors import ConfigInvalidError, OrderTooLargeForOracleError
from .liking import _first_violation

ENUM_MAX_ORDER = 16
ORACLE_MAX_ORDER = 5

_PRUNE_KEYS = ("r1", "r2", "r3", "r4", "leaf")


@dataclass(frozen=True)
class SearchConfig:
    t: int
    lam: int
    n: int
    max_nodes: int | None = None
    workers: int = 1
    symmetry_breaking: bool = True
    use_min_outdegree: bool = True      # R1
    use_exact_intersection: bool = True  # R2
    use_subset_lower_bound: bool = True  # R3

    def __post_init__(self) -> None:
        if not 1 <= self.n <= ENUM_MAX_ORDER:
            raise ConfigInvalidError(f"n={self.n} outside 1..{ENUM_MAX_ORDER}")
        if not 1 <= self.t <= self.n:
            raise ConfigInvalidError(f"t={self.t} outside 1..n={self.n}")
        if self.lam < 1:
            raise ConfigInvalidError(f"lambda={self.lam} must be positive")
        if self.workers < 1:
            raise ConfigInvalidError(f"workers={self.workers} must be positive")
        if self.max_nodes is not None and self.max_nodes < 1:
            raise ConfigInvalidError("max_nodes must be positive when given")


@dataclass
class SearchStats:
    expanded: int = 0
    extended: int = 0
    completed: int = 0
    prunes: dict[str, int] = field(
        default_factory=lambda: {k: 0 for k in _PRUNE_KEYS})
    wall_time: float = 0.0
    truncated: bool = False

    def consistent(self) -> bool:
        return self.expanded == self.extended + self.completed + sum(
            self.prunes.values())


@dataclass(frozen=True)
class Catalog:
    config: SearchConfig
    representatives: tuple[Digraph, ...]
    stats: SearchStats

    @property
    def class_count(self) -> int:
        return len(self.representatives)

    def canonical_keys(self) -> list[bytes]:
        return [canonical_form(d) for d in self.representatives]


class _BudgetStop(Exception):
    pass


def _depth_candidates(n: int, j: int) -> list[int]:
    """All loop-free row masks for vertex j, ascending (bit j forced 0)."""
    low = (1 << j) - 1
    return [((m >> j) << (j + 1)) | (m & low) for m in range(1 << (n - 1))]


def _run_task(args: tuple[SearchConfig, int, int | None]) \
        -> tuple[dict[bytes, tuple[int, ...]], dict[str, int], bool]:
    """Search the subtree rooted at one fixed first row.

    Returns (canonical reps, counters, truncated).  Counters use the keys
    expanded/extended/completed plus one per prune rule; the first rule
    that rejects a candidate gets the credit, in the order r4, r1, r2, r3.
    """
    cfg, first_row, budget = args
    n, t, lam = cfg.n, cfg.t, cfg.lam
    min_deg = t + lam - 1
    universe = (1 << n) - 1
    use_r1 = cfg.use_min_outdegree
    use_r2 = cfg.use_exact_intersection
    use_r3 = cfg.use_subset_lower_bound
    sym = cfg.symmetry_breaking

    candidates = [_depth_candidates(n, j) for j in range(n)]
    candidates[0] = [first_row]

    counters = dict.fromkeys(
        ("expanded", "extended", "completed") + _PRUNE_KEYS, 0)
    reps: dict[bytes, tuple[int, ...]] = {}
    state = {"remaining": budget}

    def explore(rows: list[int], depth: int) -> None:
        r2_inters: list[int] | None = None
        if use_r2 and depth >= t - 1:
            if t == 1:
                r2_inters = [universe]
            elif t == 2:
                r2_inters = list(rows)
            else:
                r2_inters = []
                for combo in combinations(rows, t - 1):
                    m = universe
                    for x in combo:
                        m &= x
                    r2_inters.append(m)
        r3_reqs: list[tuple[int, int]] = []
        if use_r3:
            for size in range(2 if use_r1 else 1, t):
                req = lam + t - size
                take = size - 1
                if take == 0:
                    r3_reqs.append((universe, req))
                elif take <= depth:
                    for combo in combinations(rows, take):
                        m = universe
                        for x in combo:
                            m &= x
                        r3_reqs.append((m, req))

        last = depth == n - 1
        prev_pop = rows[-1].bit_count() if rows else None
        remaining = state["remaining"]
        for cand in candidates[depth]:
            if remaining is not None:
                if remaining == 0:
                    state["remaining"] = 0
                    raise _BudgetStop
                remaining -= 1
            counters["expanded"] += 1
            pc = cand.bit_count()
            if sym and prev_pop is not None and pc > prev_pop:
                counters["r4"] += 1
                continue
            if use_r1 and pc < min_deg:
                counters["r1"] += 1
                continue
            if r2_inters is not None:
                ok = True
                for m in r2_inters:
                    if (m & cand).bit_count() != lam:
                        ok = False
                        break
                if not ok:
                    counters["r2"] += 1
                    continue
            if r3_reqs:
                ok = True
                for m, req in r3_reqs:
                    if (m & cand).bit_count() < req:
                        ok = False
                        break
                if not ok:
                    counters["r3"] += 1
                    continue
            if last:
                full = tuple(rows) + (cand,)
                if not use_r2 and _first_violation(n, full, t, lam) is not None:
                    counters["leaf"] += 1
                    continue
                counters["completed"] += 1
                dg = Digraph(n, full)
                key = canonical_form(dg)
                if key not in reps:
                    reps[key] = canonical_digraph(dg).out_rows
            else:
                counters["extended"] += 1
                state["remaining"] = remaining
                rows.append(cand)
                explore(rows, depth + 1)
                rows.pop()
                remaining = state["remaining"]
        state["remaining"] = remaining

    truncated = False
    try:
        explore([], 0)
    except _BudgetStop:
        truncated = True
    return reps, counters, truncated


def enumerate_liking(config: SearchConfig) -> Catalog:
    """All isomorphism classes of (t,lam)-liking digraphs on n vertices.

    Returns a catalog of canonical representatives sorted by canonical key,
    with node statistics.  A node budget truncates deterministically: each
    first-row task owns an equal share, independent of the worker count.
    """
    start = time.perf_counter()
    tasks = _depth_candidates(config.n, 0)
    if config.max_nodes is None:
        per_task: int | None = None
    else:
        per_task = max(1, config.max_nodes // len(tasks))
    args = [(config, first, per_task) for first in tasks]

    if config.workers == 1:
        results = [_run_task(a) for a in args]
    else:
        chunk = max(1, len(args) // (config.workers * 4))
        with ProcessPoolExecutor(max_workers=config.workers) as pool:
            results = list(pool.map(_run_task, args, chunksize=chunk))

    merged: dict[bytes, tuple[int, ...]] = {}
    stats = SearchStats()
    for reps, counters, truncated in results:
        merged.update(reps)
        stats.expanded += counters["expanded"]
        stats.extended += counters["extended"]
        stats.completed += counters["completed"]
        for k in _PRUNE_KEYS:
            stats.prunes[k] += counters[k]
        stats.truncated = stats.truncated or truncated
    stats.wall_time = time.perf_counter() - start

    representatives = tuple(
        Digraph(config.n, merged[key]) for key in sorted(merged))
    return Catalog(config=config, representatives=representatives, stats=stats)


@dataclass(frozen=True)
class RangeReport:
    """Catalogs for one (t,lam) over a span of orders, plus whether the
    span is consistent with the uniqueness regime t >= lam+2 (exactly one
    class, the complete digraph, at n = t+lam; nothing elsewhere)."""

    catalogs: tuple[Catalog, ...]
    uniqueness_regime: bool
    uniqueness_consistent: bool | None

    @property
    def class_counts(self) -> list[int]:
        return [c.class_count for c in self.catalogs]


def enumerate_range(t: int, lam: int, n_min: int, n_max: int,
                    max_nodes: int | None = None, workers: int = 1) -> RangeReport:
    """One catalog per order n_min..n_max (inclusive)."""
    if n_min > n_max:
        raise ConfigInvalidError(f"empty range {n_min}..{n_max}")
    catalogs = []
    for n in range(n_min, n_max + 1):
        cfg = SearchConfig(t=t, lam=lam, n=n, max_nodes=max_nodes,
                           workers=workers)
        catalogs.append(enumerate_liking(cfg))

    regime = t >= lam + 2
    consistent: bool | None = None
    if regime:
        if any(c.stats.truncated for c in catalogs):
            consistent = None
        else:
            consistent = True
            for c in catalogs:
                if c.config.n == t + lam:
                    if c.class_count != 1 or not c.representatives[0].is_complete():
                        consistent = False
                elif c.class_count != 0:
                    consistent = False
    return RangeReport(tuple(catalogs), regime, consistent)


def brute_force_oracle(t: int, lam: int, n: int) -> Catalog:
    """Catalog by sweeping every loop-free digraph on n vertices, no pruning.

    Test-only correctness oracle for enumerate_liking; the only shared
    machinery is the liking definition itself and the canonical dedup.
    """
    if n > ORACLE_MAX_ORDER:
        raise OrderTooLargeForOracleError(
            f"oracle sweeps 2^(n(n-1)) digraphs; n={n} exceeds {ORACLE_MAX_ORDER}")
    config = SearchConfig(t=t, lam=lam, n=n)
    start = time.perf_counter()
    choices = [_depth_candidates(n, v) for v in range(n)]
    reps: dict[bytes, tuple[int, ...]] = {}
    examined = 0
    survivors = 0
    for rows in product(*choices):
        examined += 1
        if _first_violation(n, rows, t, lam) is None:
            survivors += 1
            dg = Digraph(n, rows)
            key = canonical_form(dg)
            if key not in reps:
                reps[key] = canonical_digraph(dg).out_rows
    stats = SearchStats(expanded=examined, completed=survivors)
    stats.prunes["leaf"] = examined - survivors
    stats.wall_time = time.perf_counter() - start
    representatives = tuple(Digraph(n, reps[key]) for key in sorted(reps))
    return Catalog(config=config, representatives=representatives, stats=stats)


def catalog_to_text(catalog: Catalog) -> str:
    """Catalog file: a header line, then one canonical bitstring per class."""
    cfg, stats = catalog.config, catalog.stats
    lines = [
        f"# t={cfg.t} lambda={cfg.lam} n={cfg.n} nodes={stats.expanded} "
        f"complete={'no' if stats.truncated else 'yes'}"
    ]
    for key in catalog.canonical_keys():
        lines.append(f"{cfg.n}:{key.decode('ascii')}")
    return "\n".join(lines) + "\n"


def parse_catalog_text(text: str) -> tuple[dict[str, str], list[Digraph]]:
    """Read a catalog file back: (header fields, representative digraphs)."""
    from .canon import digraph_from_key

    meta: dict[str, str] = {}
    digraphs: list[Digraph] = []
    for line in text.splitlines():
        line = line.strip()
        if not line:
            continue
        if line.startswith("#"):
            for part in line[1:].split():
                if "=" in part:
                    k, v = part.split("=", 1)
                    meta[k] = v
            continue
        n_text, bitstring = line.split(":", 1)
        dg = digraph_from_key(bitstring.encode("ascii"))
        if dg.n != int(n_text):
            raise ValueError(f"catalog line order mismatch: {line!r}")
        digraphs.append(dg)
    return meta, digraphs

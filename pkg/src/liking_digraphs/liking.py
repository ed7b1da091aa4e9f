"""Exact liking-property checking and the structural validators.

A digraph is (t,lam)-liking when every t-subset of vertices has exactly
lam common out-neighbors.  check_liking decides that by exhaustive subset
enumeration; liking_profile returns the full histogram of common-out-
neighbor counts.  The validators in this module assert consequences that
hold for every liking digraph (degree bounds, an exact counting identity,
binomial and product inequalities, subset expansion); a failure on a
digraph known to be liking falsifies the implementation, so the catalog
tests run all of them over every representative found by the search.

All arithmetic here is exact integer arithmetic; floating point is
deliberately absent.  Validators treat "the digraph is liking" as a
precondition and take verify=True to re-check it first.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from typing import NamedTuple

from .bitset import bits, subsets_fixed_size
from .canon import CANON_MAX_ORDER, canonical_form
from .digraph import Digraph, common_out_neighbors, complete_digraph, \
    degree_sequences, induced_subdigraph
from .errors import ArithmeticOverflowError, BadParametersError, \
    BadSubsetSizeError, HypothesisNotMetError, NotALikingDigraphError

BINOMIAL_MAX = 64


def binomial(n: int, k: int) -> int:
    """Exact C(n, k) with the convention C(n, k) = 0 for k > n.

    Arguments outside 0..64 are reported, never wrapped or approximated.
    """
    if not (0 <= n <= BINOMIAL_MAX and 0 <= k <= BINOMIAL_MAX):
        raise ArithmeticOverflowError(
            f"binomial({n}, {k}) outside the supported range 0..{BINOMIAL_MAX}")
    if k > n:
        return 0
    return math.comb(n, k)


@dataclass(frozen=True)
class LikingReport:
    """Outcome of a liking check.

    On failure, witness is the first violating t-subset in colex order and
    witness_count its common-out-neighbor count.
    """

    t: int
    lam: int
    verdict: bool
    witness: int | None = None
    witness_count: int | None = None


@dataclass(frozen=True)
class LikingProfile:
    """Histogram of |common out-neighborhood| over all t-subsets."""

    t: int
    histogram: dict[int, int]

    @property
    def min_cn(self) -> int:
        return min(self.histogram)

    @property
    def max_cn(self) -> int:
        return max(self.histogram)

    def is_point_mass_at(self, lam: int) -> bool:
        return set(self.histogram) == {lam}


@dataclass(frozen=True)
class ConditionVector:
    """The five completeness conditions, each evaluated independently:
    (a) complete on t+lam vertices, (b) also (t-1, lam+1)-liking,
    (c) every out-degree is t+lam-1, (d) some vertex sees all others,
    (e) diregular.  (d) is a completeness criterion only when
    (t, lam) != (2, 1); (e) only when t >= 3."""

    a: bool
    b: bool
    c: bool
    d: bool
    e: bool
    d_applicable: bool
    e_applicable: bool

    def applicable_values(self) -> list[bool]:
        vals = [self.a, self.b, self.c]
        if self.d_applicable:
            vals.append(self.d)
        if self.e_applicable:
            vals.append(self.e)
        return vals

    def coherent(self) -> bool:
        """True when every applicable condition agrees."""
        return len(set(self.applicable_values())) == 1


class OrderCheck(NamedTuple):
    holds: bool
    order_ok: bool
    min_outdegree_ok: bool
    offending_vertex: int | None


class IdentityCheck(NamedTuple):
    holds: bool
    lhs: int
    rhs: int


class DegreeBinomialCheck(NamedTuple):
    holds: bool
    worst_vertex: int
    worst_lhs: int
    worst_rhs: int


class ProductCheck(NamedTuple):
    holds: bool
    offending_vertex: int | None


class BalanceCheck(NamedTuple):
    holds: bool
    offending_vertex: int | None


class ExpansionCheck(NamedTuple):
    holds: bool
    worst_subset: int
    worst_count: int
    worst_required: int


def _validate_params(d: Digraph, t: int, lam: int) -> None:
    if t < 1 or t > d.n:
        raise BadParametersError(f"t={t} outside 1..n={d.n}")
    if lam < 1:
        raise BadParametersError(f"lambda={lam} must be positive")


def _first_violation(n: int, rows: tuple[int, ...], t: int,
                     lam: int) -> tuple[int, int] | None:
    """First t-subset (colex order) whose common out-neighborhood does not
    have exactly lam members, with its count; None when none exists.

    Works on raw row masks so the brute-force oracle can reuse it without
    constructing Digraph objects.
    """
    universe = (1 << n) - 1
    for smask in subsets_fixed_size(n, t):
        m = universe
        s = smask
        while s:
            lsb = s & -s
            m &= rows[lsb.bit_length() - 1]
            if not m:
                break
            s ^= lsb
        cnt = m.bit_count()
        if cnt != lam:
            return smask, cnt
    return None


def check_liking(d: Digraph, t: int, lam: int) -> LikingReport:
    """Decide whether every t-subset has exactly lam common out-neighbors.

    t = 1 is legal (it asks for constant out-degree lam); the completeness
    evaluators need it for their (t-1)-liking condition even though the
    structural results themselves start at t = 2.
    """
    _validate_params(d, t, lam)
    hit = _first_violation(d.n, d.out_rows, t, lam)
    if hit is None:
        return LikingReport(t=t, lam=lam, verdict=True)
    return LikingReport(t=t, lam=lam, verdict=False,
                        witness=hit[0], witness_count=hit[1])


def liking_profile(d: Digraph, t: int) -> LikingProfile:
    """Histogram of common-out-neighbor counts over all C(n, t) subsets."""
    if t < 1 or t > d.n:
        raise BadParametersError(f"t={t} outside 1..n={d.n}")
    hist: Counter[int] = Counter()
    universe = d.universe
    rows = d.out_rows
    for smask in subsets_fixed_size(d.n, t):
        m = universe
        for v in bits(smask):
            m &= rows[v]
        hist[m.bit_count()] += 1
    return LikingProfile(t=t, histogram=dict(hist))


def _require_liking(d: Digraph, t: int, lam: int, verify: bool) -> None:
    if verify:
        report = check_liking(d, t, lam)
        if not report.verdict:
            raise NotALikingDigraphError(
                f"not ({t},{lam})-liking: subset {report.witness:#x} has "
                f"{report.witness_count} common out-neighbors")


def check_order_and_mindegree(d: Digraph, t: int, lam: int,
                              verify: bool = False) -> OrderCheck:
    """Order at least t+lam and minimum out-degree at least t+lam-1."""
    _validate_params(d, t, lam)
    _require_liking(d, t, lam, verify)
    order_ok = d.n >= t + lam
    offending = None
    for v in range(d.n):
        if d.out_degree(v) < t + lam - 1:
            offending = v
            break
    min_ok = offending is None
    return OrderCheck(order_ok and min_ok, order_ok, min_ok, offending)


def check_counting_identity(d: Digraph, t: int, lam: int,
                            verify: bool = False) -> IdentityCheck:
    """Sum over vertices of C(in-degree, t) equals lam * C(n, t), exactly."""
    _validate_params(d, t, lam)
    _require_liking(d, t, lam, verify)
    _, ins = degree_sequences(d)
    lhs = sum(binomial(deg, t) for deg in ins)
    rhs = lam * binomial(d.n, t)
    return IdentityCheck(lhs == rhs, lhs, rhs)


def check_degree_binomial_inequality(d: Digraph, t: int, lam: int,
                                     verify: bool = False) -> DegreeBinomialCheck:
    """C(in-degree, t-1) <= C(out-degree, lam) at every vertex; reports the
    vertex with the smallest slack."""
    _validate_params(d, t, lam)
    _require_liking(d, t, lam, verify)
    outs, ins = degree_sequences(d)
    worst_v = 0
    worst_lhs = worst_rhs = 0
    worst_margin = None
    for v in range(d.n):
        lhs = binomial(ins[v], t - 1)
        rhs = binomial(outs[v], lam)
        margin = rhs - lhs
        if worst_margin is None or margin < worst_margin:
            worst_margin = margin
            worst_v, worst_lhs, worst_rhs = v, lhs, rhs
    assert worst_margin is not None
    return DegreeBinomialCheck(worst_margin >= 0, worst_v, worst_lhs, worst_rhs)


def check_degree_product_inequality(d: Digraph, t: int, lam: int,
                                    verify: bool = False) -> ProductCheck:
    """Wherever out-degree <= in-degree, the product
    (out-degree - t - lam + 1) * (lam - t + 1) is nonnegative, and strictly
    positive where the degree inequality is strict."""
    _validate_params(d, t, lam)
    _require_liking(d, t, lam, verify)
    outs, ins = degree_sequences(d)
    for v in range(d.n):
        if outs[v] > ins[v]:
            continue
        product = (outs[v] - t - lam + 1) * (lam - t + 1)
        if outs[v] < ins[v]:
            if product <= 0:
                return ProductCheck(False, v)
        elif product < 0:
            return ProductCheck(False, v)
    return ProductCheck(True, None)


def check_degree_balance(d: Digraph, t: int, lam: int,
                         verify: bool = False) -> BalanceCheck:
    """Out-degree equals in-degree at every vertex, under either hypothesis
    t >= lam+1 or constant out-degree t+lam-1.  Raises HypothesisNotMetError
    when neither branch applies (a skip, not a failure)."""
    _validate_params(d, t, lam)
    _require_liking(d, t, lam, verify)
    outs, ins = degree_sequences(d)
    if t < lam + 1 and not all(deg == t + lam - 1 for deg in outs):
        raise HypothesisNotMetError(
            f"t={t} < lambda+1={lam + 1} and out-degrees are not all {t + lam - 1}")
    for v in range(d.n):
        if outs[v] != ins[v]:
            return BalanceCheck(False, v)
    return BalanceCheck(True, None)


def check_subset_expansion(d: Digraph, t: int, lam: int,
                           verify: bool = False) -> ExpansionCheck:
    """Every (t-i)-subset has at least lam+i common out-neighbors, for each
    i in 1..t-1; reports the subset with the smallest slack."""
    _validate_params(d, t, lam)
    _require_liking(d, t, lam, verify)
    universe = d.universe
    rows = d.out_rows
    worst = ExpansionCheck(True, 0, 0, 0)
    worst_margin = None
    for i in range(1, t):
        required = lam + i
        for smask in subsets_fixed_size(d.n, t - i):
            m = universe
            for v in bits(smask):
                m &= rows[v]
            cnt = m.bit_count()
            margin = cnt - required
            if worst_margin is None or margin < worst_margin:
                worst_margin = margin
                worst = ExpansionCheck(margin >= 0, smask, cnt, required)
    return worst


def derived_liking_digraph(d: Digraph, t: int, lam: int,
                           subset: int) -> tuple[Digraph, int, int]:
    """Induced subdigraph on the common out-neighborhood of the subset,
    which inherits the liking property with t reduced by |subset|.

    The reduction is guaranteed for liking inputs; the result is re-checked
    and a failure reports that the input was not (t,lam)-liking after all.
    """
    _validate_params(d, t, lam)
    size = subset.bit_count()
    if not 1 <= size < t:
        raise BadSubsetSizeError(f"subset size {size} outside 1..{t - 1}")
    cn = common_out_neighbors(d, subset)
    if cn == 0:
        raise NotALikingDigraphError(
            "empty common out-neighborhood; the input cannot be "
            f"({t},{lam})-liking")
    sub = induced_subdigraph(d, cn)
    report = check_liking(sub, t - size, lam)
    if not report.verdict:
        raise NotALikingDigraphError(
            f"reduction is not ({t - size},{lam})-liking, so the input was "
            f"not ({t},{lam})-liking")
    return sub, t - size, lam


def completeness_conditions(d: Digraph, t: int, lam: int) -> ConditionVector:
    """Evaluate the five equivalent-completeness conditions independently.

    Requires t >= 2: condition (b) needs a (t-1)-liking check, and the
    equivalences are stated only from t = 2 up.
    """
    if t < 2:
        raise BadParametersError(f"t={t} must be at least 2")
    _validate_params(d, t, lam)
    outs, ins = degree_sequences(d)
    target = t + lam

    if d.n != target:
        cond_a = False
    elif d.n <= CANON_MAX_ORDER:
        cond_a = canonical_form(d) == canonical_form(complete_digraph(target))
    else:
        cond_a = d.is_complete()
    cond_b = check_liking(d, t - 1, lam + 1).verdict
    cond_c = all(deg == target - 1 for deg in outs)
    cond_d = any(deg == d.n - 1 for deg in outs)
    cond_e = d.diregular_degree() is not None

    return ConditionVector(
        a=cond_a, b=cond_b, c=cond_c, d=cond_d, e=cond_e,
        d_applicable=(t, lam) != (2, 1),
        e_applicable=t >= 3,
    )

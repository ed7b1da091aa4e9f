"""Command-line surface: likedg <subcommand>.

Exit codes are uniform across subcommands: 0 when the queried property
holds (or the work succeeded), 1 when it fails, 2 on bad input.  Human
output labels vertices v1..vn; files and the library are 0-indexed.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .bitset import bits
from .canon import canonical_form
from .designs import check_hughes_bound, design_counts, extract_design, \
    verify_design, write_design
from .digraph import Digraph, double_graph, read_digraph, write_digraph
from .errors import LikingToolkitError, NotALikingDigraphError, \
    NotApplicableError, NotDiregularError, HypothesisNotMetError
from .liking import check_counting_identity, check_degree_balance, \
    check_degree_binomial_inequality, check_degree_product_inequality, \
    check_liking, check_order_and_mindegree, check_subset_expansion, \
    liking_profile
from .search import SearchConfig, enumerate_liking, catalog_to_text
from .verification import run_verification


def _fmt_vertices(mask: int) -> str:
    return "{" + ",".join(f"v{i + 1}" for i in bits(mask)) + "}"


def _load(path: str) -> Digraph:
    return read_digraph(Path(path).read_text())


def _cmd_check(args: argparse.Namespace) -> int:
    d = _load(args.path)
    report = check_liking(d, args.t, args.lam)
    if report.verdict:
        print(f"({args.t},{args.lam})-liking: yes")
    else:
        print(f"({args.t},{args.lam})-liking: no — "
              f"{_fmt_vertices(report.witness)} has {report.witness_count} "
              f"common out-neighbors, expected {args.lam}")
    if args.profile:
        profile = liking_profile(d, args.t)
        print(f"profile over {sum(profile.histogram.values())} "
              f"{args.t}-subsets:")
        for cnt in sorted(profile.histogram):
            print(f"  {cnt} common out-neighbors: {profile.histogram[cnt]} subsets")
    failed_validator = False
    if args.validate and report.verdict:
        failed_validator = not _print_validators(d, args.t, args.lam)
    return 0 if report.verdict and not failed_validator else 1


def _print_validators(d: Digraph, t: int, lam: int) -> bool:
    ok = True

    order = check_order_and_mindegree(d, t, lam)
    print(f"order/min-out-degree: {'PASS' if order.holds else 'FAIL'} "
          f"(n={d.n}, bound {t + lam}; min out-degree bound {t + lam - 1})")
    ok &= order.holds

    ident = check_counting_identity(d, t, lam)
    print(f"counting identity: {'PASS' if ident.holds else 'FAIL'} "
          f"({ident.lhs} vs {ident.rhs})")
    ok &= ident.holds

    degbin = check_degree_binomial_inequality(d, t, lam)
    print(f"degree binomial: {'PASS' if degbin.holds else 'FAIL'} "
          f"(worst v{degbin.worst_vertex + 1}: "
          f"{degbin.worst_lhs} <= {degbin.worst_rhs})")
    ok &= degbin.holds

    prod = check_degree_product_inequality(d, t, lam)
    where = "" if prod.offending_vertex is None \
        else f" at v{prod.offending_vertex + 1}"
    print(f"degree product: {'PASS' if prod.holds else 'FAIL'}{where}")
    ok &= prod.holds

    try:
        balance = check_degree_balance(d, t, lam)
        print(f"degree balance: {'PASS' if balance.holds else 'FAIL'}")
        ok &= balance.holds
    except HypothesisNotMetError as exc:
        print(f"degree balance: SKIP ({exc})")

    expansion = check_subset_expansion(d, t, lam)
    if t == 1:
        print("subset expansion: SKIP (no smaller subsets at t=1)")
    else:
        print(f"subset expansion: {'PASS' if expansion.holds else 'FAIL'} "
              f"(worst {_fmt_vertices(expansion.worst_subset)}: "
              f"{expansion.worst_count} >= {expansion.worst_required})")
        ok &= expansion.holds
    return ok


def _parse_order_range(text: str) -> tuple[int, int]:
    if ".." in text:
        lo, hi = text.split("..", 1)
        return int(lo), int(hi)
    n = int(text)
    return n, n


def _cmd_search(args: argparse.Namespace) -> int:
    n_lo, n_hi = _parse_order_range(args.n)
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)

    catalogs = []
    for n in range(n_lo, n_hi + 1):
        cfg = SearchConfig(
            t=args.t, lam=args.lam, n=n,
            max_nodes=args.budget, workers=args.workers,
            symmetry_breaking=not args.no_symmetry,
            use_min_outdegree=not args.no_min_outdegree,
            use_exact_intersection=not args.no_exact_intersection,
            use_subset_lower_bound=not args.no_subset_bound,
        )
        catalog = enumerate_liking(cfg)
        catalogs.append(catalog)
        path = out_dir / f"catalog_t{args.t}_l{args.lam}_n{n}.txt"
        path.write_text(catalog_to_text(catalog))
        note = " TRUNCATED" if catalog.stats.truncated else ""
        print(f"n={n}: {catalog.class_count} classes "
              f"(nodes={catalog.stats.expanded}, "
              f"{catalog.stats.wall_time:.2f}s){note} -> {path}")

    if args.t >= args.lam + 2:
        target = args.t + args.lam
        consistent = True
        for catalog in catalogs:
            want = 1 if catalog.config.n == target else 0
            if catalog.class_count != want:
                consistent = False
            elif want == 1 and not catalog.representatives[0].is_complete():
                consistent = False
        verdict = "consistent" if consistent else "INCONSISTENT"
        print(f"uniqueness regime (t >= lambda+2): {verdict} with the "
              f"complete digraph on {target} vertices being the only class")

    if args.find_nondiregular:
        nondiregular = sum(
            1 for catalog in catalogs for rep in catalog.representatives
            if rep.diregular_degree() is None)
        print(f"non-diregular classes: {nondiregular}")

    if args.strict and any(c.stats.truncated for c in catalogs):
        print("budget exhausted", file=sys.stderr)
        return 1
    return 0


def _cmd_extract_design(args: argparse.Namespace) -> int:
    d = _load(args.path)
    try:
        design = extract_design(d, args.t, args.lam)
    except (NotDiregularError, NotALikingDigraphError) as exc:
        print(f"cannot extract: {exc}", file=sys.stderr)
        return 1
    check = verify_design(design)
    if not check.ok:
        print(f"extracted block system fails design axioms: {check.violation}",
              file=sys.stderr)
        return 1
    counts = design_counts(design)
    out = Path(args.out) if args.out else Path(args.path).with_suffix(".design")
    out.write_text(write_design(design))
    print(f"{design.t}-({design.v},{design.k},{design.lam}) design: "
          f"b={counts.b} r={counts.r} "
          f"symmetric={'yes' if counts.symmetric else 'no'} -> {out}")
    try:
        bound = check_hughes_bound(design)
        print(f"symmetric-design bound k >= v-1: "
              f"{'holds' if bound else 'VIOLATED'} (k={design.k}, v={design.v})")
    except NotApplicableError:
        pass
    return 0


def _cmd_verify_paper(args: argparse.Namespace) -> int:
    report = run_verification(
        skip_search=args.skip_search,
        workers=args.workers,
        corrupt_example=args.corrupt_example,
        max_nodes=args.budget,
    )
    print(report.to_json() if args.json else report.render())
    return 0 if report.ok else 1


def _cmd_convert(args: argparse.Namespace) -> int:
    g = _load(args.path)
    doubled = double_graph(g.out_rows)
    out = Path(args.out) if args.out else Path(args.path).with_suffix(".doubled.dg")
    out.write_text(write_digraph(doubled))
    print(f"doubled {g.arc_count // 2} edges into {doubled.arc_count} arcs -> {out}")
    return 0


def _cmd_iso(args: argparse.Namespace) -> int:
    d1, d2 = _load(args.path1), _load(args.path2)
    if d1.n == d2.n and canonical_form(d1) == canonical_form(d2):
        print("isomorphic")
        return 0
    print("not isomorphic")
    return 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="likedg",
        description="Check, catalog, and dissect (t,lambda)-liking digraphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_tl(p: argparse.ArgumentParser) -> None:
        p.add_argument("-t", type=int, required=True, help="subset size t")
        p.add_argument("-l", "--lam", type=int, required=True, dest="lam",
                       help="required number of common out-neighbors")

    p = sub.add_parser("check", help="check one digraph for the liking property")
    p.add_argument("path", help=".dg file")
    add_tl(p)
    p.add_argument("--profile", action="store_true",
                   help="print the histogram of common-out-neighbor counts")
    p.add_argument("--validate", action="store_true",
                   help="run the structural validators after a positive check")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("search", help="catalog all classes at given orders")
    add_tl(p)
    p.add_argument("-n", required=True,
                   help="order or inclusive range, e.g. 7 or 4..6")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--budget", type=int, default=None,
                   help="search-node budget (deterministic truncation)")
    p.add_argument("--strict", action="store_true",
                   help="exit 1 when the budget truncates the search")
    p.add_argument("--out-dir", default=".", help="directory for catalog files")
    p.add_argument("--no-symmetry", action="store_true",
                   help="disable the degree-ordering symmetry breaker")
    p.add_argument("--no-min-outdegree", action="store_true",
                   help="disable the minimum out-degree prune")
    p.add_argument("--no-exact-intersection", action="store_true",
                   help="disable exact intersection pruning (leaf-check instead)")
    p.add_argument("--no-subset-bound", action="store_true",
                   help="disable the subset lower-bound prune")
    p.add_argument("--find-nondiregular", action="store_true",
                   help="report how many cataloged classes are not diregular")
    p.set_defaults(func=_cmd_search)

    p = sub.add_parser("extract-design",
                       help="blocks = in-neighborhoods of a diregular liking digraph")
    p.add_argument("path", help=".dg file")
    add_tl(p)
    p.add_argument("-o", "--out", default=None, help="design file to write")
    p.set_defaults(func=_cmd_extract_design)

    p = sub.add_parser("verify-paper",
                       help="run the built-in claim suite (P1..P7)")
    p.add_argument("--skip-search", action="store_true",
                   help="skip the enumeration-backed claims P3/P4")
    p.add_argument("--json", action="store_true",
                   help="machine-readable report")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--budget", type=int, default=None)
    p.add_argument("--corrupt-example", action="store_true",
                   help=argparse.SUPPRESS)  # negative control for tests
    p.set_defaults(func=_cmd_verify_paper)

    p = sub.add_parser("convert",
                       help="double an undirected graph into a digraph")
    p.add_argument("path", help="symmetric 0/1 matrix in .dg layout")
    p.add_argument("-o", "--out", default=None)
    p.set_defaults(func=_cmd_convert)

    p = sub.add_parser("iso", help="compare two digraphs by canonical key")
    p.add_argument("path1")
    p.add_argument("path2")
    p.set_defaults(func=_cmd_iso)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (LikingToolkitError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

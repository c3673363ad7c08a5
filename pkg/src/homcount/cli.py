"""Command-line entry point.

Exit codes: 0 success, 1 the tool ran but the verdict is negative, 2 bad input.
"""

from __future__ import annotations

import argparse
import sys
from typing import Callable, Sequence

from . import table1
from .categories import (
    POSET_KINDS,
    MissingProductError,
    build_ab_category,
    build_group_category,
    build_poset_category,
    cancellation_demo,
)
from .fincat import CategoryFormatError, FiniteCategory, dump_category, read_category, validate
from .graphs import (
    GraphFormatError,
    InexactDivisionError,
    distinguish,
    dump_graph,
    hom_count,
    hom_profile,
    inj_count_direct,
    inj_via_inclusion_exclusion,
    inj_via_mobius,
    pultr_identity_graphs,
    read_graph,
)
from .graphs.graph import DirectednessError
from .theorems import (
    Condition,
    ConditionReport,
    HypothesisError,
    IClass,
    MClass,
    check_corollary_conditions,
    check_dawar_pushouts,
    check_main_conditions,
    check_pultr_conditions,
    check_variant_condition,
    check_weak_conditions,
    hom_matrix,
    inclusion_exclusion_terms,
    is_combinatorial,
    mono_count_direct,
    mono_count_inclusion_exclusion,
    parse_class_spec,
)

OK, NEGATIVE, BAD_INPUT = 0, 1, 2
_MAX_SPANS = 8


class InputError(Exception):
    """Anything the user supplied that cannot be used; reported with exit code 2."""


def _yes(b: bool | None) -> str:
    return "not-checked" if b is None else ("yes" if b else "no")


# -- categories ----------------------------------------------------------------------------


def _load_category(path: str) -> FiniteCategory:
    C = read_category(path)
    report = validate(C)
    if not report.ok:
        v = report.violations[0]
        raise InputError(f"{path}: not a category ({v.kind}: {v.message})")
    return C


def _describe_witness(C: FiniteCategory, cond: Condition) -> str:
    w = cond.witness
    if w is None:
        return ""
    obj_first = {"pushouts", "epi-pushouts", "below-maximal", "well-founded-supobjects"}
    if isinstance(w, list):  # spans without a pushout
        shown = " ".join(f"({C.label(f)},{C.label(g)})" for f, g in w[:_MAX_SPANS])
        return shown + (f" and {len(w) - _MAX_SPANS} more" if len(w) > _MAX_SPANS else "")
    if isinstance(w, int):
        return C.label(w)
    if cond.name in obj_first and isinstance(w[0], int) and len(w) >= 2:
        rest = [m for part in w[1:] for m in (part if isinstance(part, (tuple, list)) else (part,))]
        return f"{C.objects[w[0]]}: " + " ".join(C.label(m) for m in rest)
    return " ".join(C.label(m) for m in w)


def _render_report(C: FiniteCategory, report: ConditionReport) -> list[str]:
    lines = []
    for c in report.conditions:
        line = f"{report.theorem} {c.name}: {_yes(c.holds)}"
        if c.holds is False:
            line += f" witness {_describe_witness(C, c)}"
        if c.counts:
            line += " counts " + " ".join(f"{k}={v}" for k, v in c.counts.items())
        lines.append(line)
    return lines


def _classes(args: argparse.Namespace, C: FiniteCategory) -> tuple[MClass, IClass]:
    return parse_class_spec(args.m_class, C, MClass), parse_class_spec(args.i_class, C, IClass)


def cmd_cat_validate(args: argparse.Namespace) -> int:
    C = read_category(args.file)
    report = validate(C)
    if report.ok:
        print(f"valid: {C.n_objects} objects, {C.n_morphisms} morphisms")
        return OK
    for v in report.violations[: args.limit]:
        print(f"{v.kind}: {v.message}")
    if len(report.violations) > args.limit:
        print(f"... {len(report.violations) - args.limit} more")
    return NEGATIVE


def cmd_cat_check(args: argparse.Namespace) -> int:
    C = _load_category(args.file)
    M, I = _classes(args, C)
    checkers: dict[str, Callable[[], ConditionReport]] = {
        "main": lambda: check_main_conditions(C, M, I),
        "weak": lambda: check_weak_conditions(C),
        "corollary": lambda: check_corollary_conditions(C),
        "pultr": lambda: check_pultr_conditions(C),
        "variant": lambda: check_variant_condition(C),
        "dawar": lambda: check_dawar_pushouts(C),
    }
    chosen = list(checkers) if args.theorem == "all" else [args.theorem]
    status = OK
    for name in chosen:
        report = checkers[name]()
        for line in _render_report(C, report):
            print(line)
        if report.failed():
            status = NEGATIVE
    return status


def cmd_cat_hom_matrix(args: argparse.Namespace) -> int:
    C = _load_category(args.file)
    m = hom_matrix(C)
    names = [C.objects[c] for c in m.cols]
    rows = [[C.objects[r]] + [str(v) for v in row] for r, row in zip(m.rows, m.entries)]
    if args.output == "csv":
        print(",".join(["object"] + names))
        for row in rows:
            print(",".join(row))
    else:
        header = ["X\\A"] + names
        widths = [max(len(r[i]) for r in [header] + rows) for i in range(len(header))]
        for r in [header] + rows:
            print("  ".join(cell.rjust(w) for cell, w in zip(r, widths)).rstrip())
    return OK


def cmd_cat_combinatorial(args: argparse.Namespace) -> int:
    C = _load_category(args.file)
    result = is_combinatorial(C)
    if result.holds:
        print("combinatorial: yes")
        return OK
    a, b = result.witness
    print(f"combinatorial: no (objects {C.objects[a]} and {C.objects[b]} share a hom column)")
    return NEGATIVE


def cmd_cat_monocount(args: argparse.Namespace) -> int:
    C = _load_category(args.file)
    M, I = _classes(args, C)
    z, a = C.obj(args.source), C.obj(args.target)
    direct = mono_count_direct(C, z, a, I)
    try:
        via = mono_count_inclusion_exclusion(C, z, a, M, I)
    except HypothesisError as e:
        print(f"direct: {direct}")
        print(f"inclusion-exclusion: hypothesis violated: {e}")
        return NEGATIVE
    if args.terms:
        for t in inclusion_exclusion_terms(C, z, a, M):
            sub = ",".join(C.label(q) for q in t.subset) or "-"
            print(f"term {sub} apex {C.objects[t.apex]} sign {t.sign:+d} count {t.count}")
    print(f"direct: {direct}")
    print(f"inclusion-exclusion: {via}")
    return OK if direct == via else NEGATIVE


def cmd_cat_build(args: argparse.Namespace) -> int:
    if args.kind == "ab":
        C = build_ab_category(args.depth, boundary=not args.no_boundary)
    elif args.kind in POSET_KINDS:
        C = build_poset_category(args.kind, args.depth)
    else:
        C = build_group_category(args.max_order)
    text = dump_category(C)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return OK


# -- graphs -----------------------------------------------------------------------------------


def _csv_counts(pairs: Sequence[tuple[str, int]]) -> None:
    print("key,count")
    for k, v in pairs:
        print(f"{k},{v}")


def _emit(args: argparse.Namespace, pairs: list[tuple[str, int]]) -> None:
    if args.output == "csv":
        _csv_counts(pairs)
    else:
        for k, v in pairs:
            print(f"{k}: {v}")


def cmd_graph_hom(args: argparse.Namespace) -> int:
    _emit(args, [("hom", hom_count(read_graph(args.source), read_graph(args.target)))])
    return OK


def cmd_graph_inj(args: argparse.Namespace) -> int:
    X, A = read_graph(args.source), read_graph(args.target)
    methods = {
        "direct": inj_count_direct,
        "inclusion-exclusion": inj_via_inclusion_exclusion,
        "mobius": inj_via_mobius,
    }
    chosen = list(methods) if args.method == "all" else [args.method]
    results = [(m, methods[m](X, A)) for m in chosen]
    _emit(args, results)
    return OK if len({v for _, v in results}) == 1 else NEGATIVE


def cmd_graph_distinguish(args: argparse.Namespace) -> int:
    A, B = read_graph(args.first), read_graph(args.second)
    d = distinguish(A, B, args.max_size)
    if d.certified_equal:
        print(f"certified-equal up to {args.max_size} vertices")
        return OK
    print(f"witness: {d.count_a} vs {d.count_b} homomorphisms")
    sys.stdout.write(dump_graph(d.witness))
    return OK


def cmd_graph_profile(args: argparse.Namespace) -> int:
    _emit(args, list(hom_profile(read_graph(args.file), args.max_size).items()))
    return OK


def cmd_graph_pultr(args: argparse.Namespace) -> int:
    A, B = read_graph(args.first), read_graph(args.second)
    try:
        report = pultr_identity_graphs(A, B)
    except InexactDivisionError as e:
        print(f"inexact division: {e}")
        return NEGATIVE
    if args.output == "csv":
        _csv_counts([(t.key, t.contribution) for t in report.terms] + [("total", report.total), ("hom", report.hom)])
    else:
        for t in report.terms:
            print(f"{t.key}: {t.surjections}*{t.injections}/{t.automorphisms} = {t.contribution}")
        print(f"total: {report.total}")
        print(f"hom: {report.hom}")
        print(f"identity: {_yes(report.holds)}")
    return OK if report.holds else NEGATIVE


# -- reports --------------------------------------------------------------------------------------


def cmd_table1(args: argparse.Namespace) -> int:
    depths = args.depths or [2, 3, 4, 5, 6]
    rows = table1.table1_report(depths, args.depth, args.group_order)
    sys.stdout.write(table1.render_csv(rows) if args.output == "csv" else table1.render_text(rows, args.series))
    return OK


def cmd_demo_cancellation(args: argparse.Namespace) -> int:
    cat = build_group_category(args.max_order)
    for name in (args.a, args.b, args.c):
        if name not in cat.object_index:
            raise InputError(f"group {name!r} not in the catalog of order <= {args.max_order}")
    rep = cancellation_demo(cat, args.a, args.b, args.c)
    if args.output == "csv":
        print(f"Z,hom_Z_{args.b},hom_Z_{args.c}")
        for z in rep.column_b:
            print(f"{z},{rep.column_b[z]},{rep.column_c[z]}")
    else:
        for z, (p, x, y) in rep.product_rule.items():
            print(f"{z}: |Hom(Z,{args.a}x{args.b})| = {p} = {x}*{y}")
        print(f"product rule: {_yes(rep.product_rule_holds)}")
        diff = rep.first_difference
        if diff is None:
            print(f"columns of {args.b} and {args.c}: agree")
        else:
            print(f"columns of {args.b} and {args.c}: differ at Z={diff} ({rep.column_b[diff]} vs {rep.column_c[diff]})")
    return OK if rep.product_rule_holds else NEGATIVE


# -- parser -----------------------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="homcount", description="Hom-counting checks for finite categories and graphs.")
    sub = p.add_subparsers(dest="command", required=True, metavar="subcommand")

    def add(name: str, func: Callable[[argparse.Namespace], int], help: str) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, help=help, description=help)
        sp.set_defaults(func=func)
        sp.add_argument("--output", choices=("text", "csv"), default="text")
        return sp

    def classes(sp: argparse.ArgumentParser) -> None:
        sp.add_argument("--m-class", default="maximal-epis", help=f"one of {MClass.KINDS[:-1]} or explicit:f,g")
        sp.add_argument("--i-class", default="all-monos", help=f"one of {IClass.KINDS[:-1]} or explicit:f,g")

    sp = add("cat-validate", cmd_cat_validate, "check category axioms of a .cat file")
    sp.add_argument("file")
    sp.add_argument("--limit", type=int, default=20, help="maximum violations to print")

    sp = add("cat-check", cmd_cat_check, "check theorem hypotheses on a category")
    sp.add_argument("file")
    sp.add_argument("--theorem", choices=("main", "weak", "corollary", "pultr", "variant", "dawar", "all"), default="all")
    classes(sp)

    sp = add("cat-hom-matrix", cmd_cat_hom_matrix, "hom counts between iso-class representatives")
    sp.add_argument("file")

    sp = add("cat-combinatorial", cmd_cat_combinatorial, "decide whether hom columns separate iso classes")
    sp.add_argument("file")

    sp = add("cat-monocount", cmd_cat_monocount, "count I-monos Z -> A directly and by inclusion-exclusion")
    sp.add_argument("file")
    sp.add_argument("source", help="object Z")
    sp.add_argument("target", help="object A")
    sp.add_argument("--terms", action="store_true", help="list the signed pushout terms")
    classes(sp)

    sp = add("cat-build", cmd_cat_build, "write a built-in example category in .cat format")
    sp.add_argument("kind", choices=("ab",) + POSET_KINDS + ("groups",))
    sp.add_argument("--depth", type=int, default=2)
    sp.add_argument("--max-order", type=int, default=6)
    sp.add_argument("--no-boundary", action="store_true", help="ab only: omit the sink object")
    sp.add_argument("-o", "--out")

    sp = add("graph-hom", cmd_graph_hom, "count homomorphisms X -> A")
    sp.add_argument("source")
    sp.add_argument("target")

    sp = add("graph-inj", cmd_graph_inj, "count injective homomorphisms X -> A")
    sp.add_argument("source")
    sp.add_argument("target")
    sp.add_argument("--method", choices=("direct", "inclusion-exclusion", "mobius", "all"), default="all")

    sp = add("graph-distinguish", cmd_graph_distinguish, "find a small graph with different hom counts")
    sp.add_argument("first")
    sp.add_argument("second")
    sp.add_argument("--max-size", type=int, default=4)

    sp = add("graph-profile", cmd_graph_profile, "hom counts from every graph up to a size")
    sp.add_argument("file")
    sp.add_argument("--max-size", type=int, default=4)

    sp = add("graph-pultr", cmd_graph_pultr, "decompose hom(A,B) over quotients of A")
    sp.add_argument("first")
    sp.add_argument("second")

    sp = add("table1", cmd_table1, "scope table of the counting theorems over the example categories")
    sp.add_argument("--depth", type=int, default=4, help="truncation depth for hard verdicts")
    sp.add_argument("--depths", type=int, nargs="+", help="depths for divergence series (default 2..6)")
    sp.add_argument("--group-order", type=int, default=6)
    sp.add_argument("--series", action="store_true", help="print count series of divergent cells")

    sp = add("demo-cancellation", cmd_demo_cancellation, "product rule and hom-column comparison in finite groups")
    sp.add_argument("--max-order", type=int, default=6)
    sp.add_argument("--a", default="Z2")
    sp.add_argument("--b", default="Z2")
    sp.add_argument("--c", default="Z3")
    return p


def run(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (CategoryFormatError, GraphFormatError, InputError, DirectednessError, MissingProductError) as e:
        print(f"error: {e}", file=sys.stderr)
        return BAD_INPUT
    except OSError as e:
        print(f"error: {e.filename}: {e.strerror}", file=sys.stderr)
        return BAD_INPUT
    except (KeyError, ValueError) as e:
        print(f"error: {e.args[0] if isinstance(e, KeyError) and e.args else e}", file=sys.stderr)
        return BAD_INPUT


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

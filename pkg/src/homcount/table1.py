"""Regenerate the scope table: which counting theorems apply to which example categories.

Finite truncations stand in for infinite categories.  A cell whose verdict
hinges on infinitude is reported as ``depth-divergent`` together with the
per-depth count series that grows without bound.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from .categories import POSET_KINDS, build_ab_category, build_group_category, build_poset_category
from .fincat import FiniteCategory
from .graphs import enumerate_graphs, inj_count_direct, inj_via_inclusion_exclusion, inj_via_mobius, pultr_identity_graphs
from .theorems import (
    ConditionReport,
    IClass,
    MClass,
    check_dawar_pushouts,
    check_main_conditions,
    check_pultr_conditions,
    check_variant_condition,
    check_weak_conditions,
)

YES, NO, DIVERGENT, NOT_CHECKED = "yes", "no", "depth-divergent", "not-checked"
COLUMNS = ("main", "weak", "pultr", "variant", "dawar", "reggio")
HEADERS = ("Main", "Weak", "Pultr", "Variant", "Dawar", "Reggio")


@dataclass
class Series:
    obj: str
    depths: tuple[int, ...]
    counts: tuple[int, ...]

    def render(self) -> str:
        return f"{self.obj}={'/'.join(map(str, self.counts))}"


@dataclass
class Table1Row:
    tag: str
    verdicts: dict[str, str]
    depth: int | None  # truncation depth of the hard verdicts; None when not truncated
    series: dict[str, Series] = field(default_factory=dict)

    def __getitem__(self, column: str) -> str:
        return self.verdicts[column]


# (column, checker, condition holding the per-object counts)
_CountedChecker = tuple[str, Callable[[FiniteCategory], ConditionReport], str]


def _checkers(M: MClass, I: IClass) -> list[_CountedChecker]:
    return [
        ("main", lambda C: check_main_conditions(C, M, I), "finite-classes"),
        ("weak", check_weak_conditions, "finite-maximal"),
        ("pultr", check_pultr_conditions, "finite-subobjects"),
        ("variant", check_variant_condition, "well-founded-supobjects"),
    ]


def _hard_ok(report: ConditionReport, counted: str) -> bool:
    # the counted condition is judged by its series, every other one by its verdict
    return all(c.holds is not False for c in report.conditions if c.name != counted)


def _diverging(depths: list[int], per_depth: list[dict[str, int]]) -> Series | None:
    """First object, in order of appearance, whose count strictly increases over every depth."""
    common = [o for o in per_depth[0] if all(o in d for d in per_depth)]
    for obj in common:
        counts = tuple(d[obj] for d in per_depth)
        if len(counts) > 1 and all(a < b for a, b in zip(counts, counts[1:])):
            return Series(obj, tuple(depths), counts)
    return None


def truncated_row(
    tag: str,
    build: Callable[[int], FiniteCategory],
    depths: list[int],
    verdict_depth: int,
    M: MClass,
    I: IClass,
) -> Table1Row:
    cats = {d: build(d) for d in sorted(set(depths) | {verdict_depth})}
    verdicts: dict[str, str] = {}
    series: dict[str, Series] = {}
    for column, check, counted in _checkers(M, I):
        reports = {d: check(C) for d, C in cats.items()}
        if not all(_hard_ok(r, counted) and r[counted].holds is not False for r in reports.values()):
            verdicts[column] = NO
            continue
        s = _diverging(depths, [reports[d][counted].counts for d in depths])
        if s is not None:
            verdicts[column] = DIVERGENT
            series[column] = s
        else:
            verdicts[column] = YES
    dawar_ok = all(check_dawar_pushouts(C, first_only=True)["pushouts"].holds for C in cats.values())
    verdicts["dawar"] = NOT_CHECKED if dawar_ok else NO
    verdicts["reggio"] = NOT_CHECKED
    return Table1Row(tag, verdicts, verdict_depth, series)


def groups_row(max_order: int = 6) -> Table1Row:
    C = build_group_category(max_order)
    M, I = MClass("maximal-epis"), IClass("all-monos")
    verdicts = {col: YES if check(C).overall else NO for col, check, _ in _checkers(M, I)}
    verdicts["dawar"] = NOT_CHECKED if check_dawar_pushouts(C, first_only=True)["pushouts"].holds else NO
    verdicts["reggio"] = NOT_CHECKED
    return Table1Row("groups", verdicts, None)


def digraph_row(max_vertices: int = 3) -> Table1Row:
    """Delegates to the graph counters on all small directed graphs.

    Main and Weak hold when the three injective counts agree; Pultr and
    Variant hold when the decomposition identity is exact.
    """
    gs = enumerate_graphs(max_vertices, directed=True)
    inj_ok = all(
        inj_count_direct(X, A) == inj_via_inclusion_exclusion(X, A) == inj_via_mobius(X, A) for X in gs for A in gs
    )
    pultr_ok = all(pultr_identity_graphs(A, B).holds for A in gs for B in gs)
    v_inj, v_pultr = (YES if inj_ok else NO), (YES if pultr_ok else NO)
    verdicts = {"main": v_inj, "weak": v_inj, "pultr": v_pultr, "variant": v_pultr, "dawar": NOT_CHECKED, "reggio": NOT_CHECKED}
    return Table1Row("digraphs", verdicts, None)


def table1_report(depths: list[int] | tuple[int, ...] = (2, 3, 4, 5, 6), verdict_depth: int = 4, group_order: int = 6) -> list[Table1Row]:
    depths = sorted(depths)
    posets = MClass("none"), IClass("all-morphisms")
    rows = [
        digraph_row(),
        groups_row(group_order),
        truncated_row("ab", build_ab_category, depths, verdict_depth, MClass("maximal-epis"), IClass("all-monos")),
    ]
    for kind in POSET_KINDS:
        rows.append(truncated_row(kind, lambda k, kind=kind: build_poset_category(kind, k), depths, verdict_depth, *posets))
    return rows


def render_text(rows: list[Table1Row], with_series: bool = False) -> str:
    header = ("category",) + HEADERS + ("depth",)
    body = [(r.tag,) + tuple(r.verdicts[c] for c in COLUMNS) + ("-" if r.depth is None else str(r.depth),) for r in rows]
    widths = [max(len(row[i]) for row in [header] + body) for i in range(len(header))]
    lines = ["  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip() for row in [header] + body]
    if with_series:
        for r in rows:
            for col in COLUMNS:
                if col in r.series:
                    s = r.series[col]
                    lines.append(f"{r.tag} {col}: {s.obj} over depths {'/'.join(map(str, s.depths))}: {'/'.join(map(str, s.counts))}")
    return "\n".join(lines) + "\n"


def render_csv(rows: list[Table1Row]) -> str:
    lines = [",".join(("category",) + COLUMNS + ("depth", "series"))]
    for r in rows:
        series = ";".join(f"{c}@{r.series[c].render()}" for c in COLUMNS if c in r.series)
        depth = "" if r.depth is None else str(r.depth)
        lines.append(",".join((r.tag,) + tuple(r.verdicts[c] for c in COLUMNS) + (depth, series)))
    return "\n".join(lines) + "\n"

"""Hypothesis checkers and hom-counting identities for finite categories.

Each ``check_*`` function returns a :class:`ConditionReport` with one verdict
per hypothesis; a false verdict carries a witness (object and morphism
indices) that can be replayed with the predicates in :mod:`homcount.fincat`.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Any, Iterable

from .fincat import FiniteCategory
from .fincat.structure import (
    _memo,
    coimage,
    factors_through_epi,
    hom_count,
    image,
    inverse,
    is_epi,
    is_extremal,
    is_iso,
    is_mono,
    iso_classes,
    iso_representatives,
    maximal_supobjects,
    precomposites,
    proper_supobjects,
    pushout,
    subobjects,
    supobjects,
    well_founded_supobjects,
)


class HypothesisError(ValueError):
    """A counting identity was requested outside the hypotheses that justify it."""


@dataclass
class Condition:
    name: str
    holds: bool | None  # None: not checked
    witness: Any = None
    detail: str = ""
    counts: dict[str, int] = field(default_factory=dict)


@dataclass
class ConditionReport:
    theorem: str
    conditions: list[Condition] = field(default_factory=list)

    @property
    def overall(self) -> bool:
        return all(c.holds for c in self.conditions if c.holds is not None)

    def __getitem__(self, name: str) -> Condition:
        for c in self.conditions:
            if c.name == name:
                return c
        raise KeyError(name)

    def failed(self) -> list[Condition]:
        return [c for c in self.conditions if c.holds is False]


# -- morphism classes ---------------------------------------------------------------


@dataclass(frozen=True)
class MClass:
    """Which supobjects count as M-supobjects.

    ``kind`` is one of ``maximal-epis``, ``all-proper-epis``, ``none`` or
    ``explicit`` (with ``indices``).
    """

    kind: str = "maximal-epis"
    indices: frozenset[int] = frozenset()

    KINDS = ("maximal-epis", "all-proper-epis", "none", "explicit")

    def select(self, C: FiniteCategory) -> frozenset[int]:
        if self.kind == "none":
            chosen: Iterable[int] = ()
        elif self.kind == "maximal-epis":
            chosen = [f for x in range(C.n_objects) for c in maximal_supobjects(C, x) for f in c.members]
        elif self.kind == "all-proper-epis":
            chosen = [f for f in range(C.n_morphisms) if is_epi(C, f) and not is_iso(C, f)]
        elif self.kind == "explicit":
            chosen = self.indices
        else:
            raise ValueError(f"unknown M class {self.kind!r}")
        chosen = frozenset(int(f) for f in chosen)
        bad = [f for f in chosen if not is_epi(C, f)]
        if bad:
            raise ValueError(f"M class contains non-epimorphisms: {[C.label(f) for f in bad]}")
        return chosen


@dataclass(frozen=True)
class IClass:
    """Which monomorphisms count as I-monos; always contains the identities.

    ``kind`` is one of ``all-monos``, ``all-morphisms`` (only valid when every
    morphism is mono), ``identities`` or ``explicit``.
    """

    kind: str = "all-monos"
    indices: frozenset[int] = frozenset()

    KINDS = ("all-monos", "all-morphisms", "identities", "explicit")

    def select(self, C: FiniteCategory) -> frozenset[int]:
        if self.kind == "all-monos":
            chosen: Iterable[int] = (f for f in range(C.n_morphisms) if is_mono(C, f))
        elif self.kind == "all-morphisms":
            chosen = range(C.n_morphisms)
        elif self.kind == "identities":
            chosen = C.identity
        elif self.kind == "explicit":
            chosen = self.indices
        else:
            raise ValueError(f"unknown I class {self.kind!r}")
        chosen = frozenset(int(f) for f in chosen)
        missing = [e for e in C.identity if e not in chosen]
        if missing:
            raise ValueError(f"I class omits identities: {[C.label(e) for e in missing]}")
        bad = [f for f in chosen if not is_mono(C, f)]
        if bad:
            raise ValueError(f"I class contains non-monomorphisms: {[C.label(f) for f in bad]}")
        return chosen


def parse_class_spec(text: str, C: FiniteCategory, cls: type) -> MClass | IClass:
    """``maximal-epis`` or ``explicit:f,g,h`` (morphism labels)."""
    if text.startswith("explicit:"):
        labels = [s for s in text[len("explicit:") :].split(",") if s]
        return cls("explicit", frozenset(C.mor(lab) for lab in labels))
    if text not in cls.KINDS:
        raise ValueError(f"unknown class spec {text!r}; expected one of {cls.KINDS} or explicit:...")
    return cls(text)


def m_representatives(C: FiniteCategory, z: int, M: MClass) -> list[int]:
    """One M-selected epi per supobject class of ``z``, least index first."""
    chosen = M.select(C)
    reps = []
    for c in supobjects(C, z):
        picked = [f for f in c.members if f in chosen]
        if picked:
            reps.append(min(picked))
    return reps


# -- pushouts of M-supobjects and the inclusion-exclusion count ------------------------------


def check_main_conditions(C: FiniteCategory, M: MClass | None = None, I: IClass | None = None) -> ConditionReport:
    M = M or MClass()
    I = I or IClass()
    return _memo(C, ("main", M, I), lambda: _check_main(C, M, I))


def _check_main(C: FiniteCategory, M: MClass, I: IClass) -> ConditionReport:
    report = ConditionReport("main")
    chosen_m = M.select(C)
    chosen_i = I.select(C)

    witness = None
    for z in range(C.n_objects):
        reps = m_representatives(C, z, M)
        for size in range(1, len(reps) + 1):
            for S in combinations(reps, size):
                if pushout(C, S) is None:
                    witness = (z, S)
                    break
            if witness:
                break
        if witness:
            break
    report.conditions.append(
        Condition("pushouts", witness is None, witness, "pushout of every finite set of M-supobject representatives")
    )

    counts = {C.objects[z]: len(m_representatives(C, z, M)) for z in range(C.n_objects)}
    report.conditions.append(Condition("finite-classes", True, None, "M-supobject classes per object", counts))

    witness = None
    for f in range(C.n_morphisms):
        if f in chosen_i:
            continue
        if not any(f in precomposites(C, q) for q in chosen_m if C.dom(q) == C.dom(f)):
            witness = f
            break
    report.conditions.append(
        Condition("non-I-factors", witness is None, witness, "every non-I-mono factors through an M-supobject")
    )

    witness = None
    for q in sorted(chosen_m):
        hit = sorted(precomposites(C, q) & chosen_i)
        if hit:
            witness = (hit[0], q)
            break
    report.conditions.append(
        Condition("factor-not-I", witness is None, witness, "factoring through an M-supobject rules out I-mono")
    )
    return report


def mono_count_direct(C: FiniteCategory, z: int, a: int, I: IClass | None = None) -> int:
    chosen = (I or IClass()).select(C)
    return sum(1 for f in C.hom(z, a) if int(f) in chosen)


@dataclass(frozen=True)
class InclusionExclusionTerm:
    subset: tuple[int, ...]
    apex: int
    sign: int
    count: int


def inclusion_exclusion_terms(C: FiniteCategory, z: int, a: int, M: MClass | None = None) -> list[InclusionExclusionTerm]:
    """Signed terms ``(-1)^|S| |Hom(pushout(S), a)|`` over all subsets ``S`` (empty subset first)."""
    M = M or MClass()
    reps = m_representatives(C, z, M)
    terms = [InclusionExclusionTerm((), z, 1, hom_count(C, z, a))]
    for size in range(1, len(reps) + 1):
        for S in combinations(reps, size):
            po = pushout(C, S)
            if po is None:
                raise RuntimeError(f"pushout of {[C.label(q) for q in S]} missing although conditions hold")
            # precomposition with the epi z -> apex is injective, so this counts q_S^* Hom(apex, a)
            terms.append(InclusionExclusionTerm(S, po.apex, (-1) ** size, hom_count(C, po.apex, a)))
    return terms


def mono_count_inclusion_exclusion(
    C: FiniteCategory, z: int | str, a: int | str, M: MClass | None = None, I: IClass | None = None
) -> int:
    """|Mono_I(z, a)| from hom counts of pushouts of M-supobjects of ``z``."""
    M = M or MClass()
    I = I or IClass()
    z, a = C.obj(z), C.obj(a)
    report = check_main_conditions(C, M, I)
    if not report.overall:
        bad = report.failed()[0]
        raise HypothesisError(f"condition {bad.name!r} fails (witness {bad.witness})")
    return sum(t.sign * t.count for t in inclusion_exclusion_terms(C, z, a, M))


# -- weak conditions: maximal epis ---------------------------------------------------------


def _epi_pair_pushouts(C: FiniteCategory) -> Condition:
    for x in range(C.n_objects):
        reps = [c.representative for c in supobjects(C, x)]
        for i, p in enumerate(reps):
            for q in reps[i:]:
                if pushout(C, (p, q)) is None:
                    return Condition("epi-pushouts", False, (x, p, q), "pushout of every pair of epimorphisms")
    return Condition("epi-pushouts", True, None, "pushout of every pair of epimorphisms")


def _maximal_counts(C: FiniteCategory) -> Condition:
    counts = {C.objects[x]: len(maximal_supobjects(C, x)) for x in range(C.n_objects)}
    return Condition("finite-maximal", True, None, "maximal supobject classes per object", counts)


def _below_maximal(C: FiniteCategory) -> Condition:
    for x in range(C.n_objects):
        maximal = maximal_supobjects(C, x)
        for c in proper_supobjects(C, x):
            if not any(c.id in m.order_above for m in maximal):
                return Condition("below-maximal", False, (x, c.representative), "every proper supobject lies below a maximal one")
    return Condition("below-maximal", True, None, "every proper supobject lies below a maximal one")


def _proper_factorizer(C: FiniteCategory, f: int) -> int | None:
    for c in proper_supobjects(C, C.dom(f)):
        if factors_through_epi(C, f, c.representative):
            return c.representative
    return None


def check_weak_conditions(C: FiniteCategory) -> ConditionReport:
    def compute() -> ConditionReport:
        report = ConditionReport("weak")
        report.conditions += [_epi_pair_pushouts(C), _maximal_counts(C), _below_maximal(C)]
        witness = next((f for f in range(C.n_morphisms) if not is_mono(C, f) and _proper_factorizer(C, f) is None), None)
        report.conditions.append(
            Condition("non-mono-factors", witness is None, witness, "every non-mono factors through a proper supobject")
        )
        witness = None
        for f in range(C.n_morphisms):
            q = _proper_factorizer(C, f)
            if q is not None and is_mono(C, f):
                witness = (f, q)
                break
        report.conditions.append(
            Condition("factor-not-mono", witness is None, witness, "factoring through a proper supobject rules out mono")
        )
        return report

    return _memo(C, ("weak",), compute)


def check_corollary_conditions(C: FiniteCategory) -> ConditionReport:
    report = ConditionReport("corollary")
    report.conditions += [_epi_pair_pushouts(C), _maximal_counts(C), _below_maximal(C)]
    witness = next((f for f in range(C.n_morphisms) if coimage(C, f) is None), None)
    report.conditions.append(Condition("coimages", witness is None, witness, "every morphism has a coimage"))
    witness = None
    for f in range(C.n_morphisms):
        co = coimage(C, f)
        if co is not None and is_mono(C, f) != is_iso(C, co.representative):
            witness = f
            break
    report.conditions.append(
        Condition("mono-iff-coimage-iso", witness is None, witness, "f is mono iff its coimage epi is an isomorphism")
    )
    return report


# -- image factorizations, well-foundedness, pushout closure ------------------------------


def _image_conditions(C: FiniteCategory) -> list[Condition]:
    witness = next((f for f in range(C.n_morphisms) if image(C, f) is None), None)
    out = [Condition("images", witness is None, witness, "every morphism has an image")]
    witness = None
    for h in range(C.n_morphisms):
        im = image(C, h)
        if im is None:
            continue
        for g in im.members:
            for f in C.hom(C.dom(h), C.dom(g)):
                f = int(f)
                if C.table[g, f] == h and not is_extremal(C, f):
                    witness = (h, g, f)
                    break
            if witness:
                break
        if witness:
            break
    out.append(Condition("extremal-epi-part", witness is None, witness, "epi part of an image factorization is extremal"))
    return out


def check_pultr_conditions(C: FiniteCategory) -> ConditionReport:
    def compute() -> ConditionReport:
        report = ConditionReport("pultr")
        counts = {C.objects[x]: len(subobjects(C, x)) for x in range(C.n_objects)}
        report.conditions.append(Condition("finite-subobjects", True, None, "subobject classes per object", counts))
        report.conditions += _image_conditions(C)
        return report

    return _memo(C, ("pultr",), compute)


def check_variant_condition(C: FiniteCategory) -> ConditionReport:
    def compute() -> ConditionReport:
        report = ConditionReport("variant")
        chains = {}
        witness = None
        for x in range(C.n_objects):
            wf = well_founded_supobjects(C, x)
            chains[C.objects[x]] = wf.chain_length
            if not wf.holds and witness is None:
                witness = (x, wf.chain)
        report.conditions.append(
            Condition("well-founded-supobjects", witness is None, witness, "longest strictly decreasing supobject chain", chains)
        )
        report.conditions += _image_conditions(C)
        return report

    return _memo(C, ("variant",), compute)


def check_dawar_pushouts(C: FiniteCategory, first_only: bool = False) -> ConditionReport:
    """Pushout half only: every span ``X -> Y, X -> Z`` has a pushout.

    All failing spans are collected in the witness list unless ``first_only``.
    """
    failing: list[tuple[int, int]] = []
    for x in range(C.n_objects):
        out = [int(f) for f in C.out_of(x)]
        for i, f in enumerate(out):
            for g in out[i:]:
                if pushout(C, (f, g)) is None:
                    failing.append((f, g))
                    if first_only:
                        break
            if failing and first_only:
                break
        if failing and first_only:
            break
    report = ConditionReport("dawar-pushouts")
    report.conditions.append(Condition("pushouts", not failing, failing or None, "pushout of every span"))
    report.conditions.append(Condition("proper-factorization-system", None, None, "not checked"))
    return report


# -- identities ----------------------------------------------------------------------------------


@dataclass
class PultrTerm:
    T: int
    extremal: int
    mono: int
    automorphisms: int
    hom_part: int  # |Hom(A,B)_T|: morphisms whose image has domain isomorphic to T

    @property
    def contribution(self) -> Fraction:
        return Fraction(self.extremal * self.mono, self.automorphisms)


@dataclass
class PultrReport:
    A: int
    B: int
    hom: int
    terms: list[PultrTerm]
    fibers_ok: bool
    partition_ok: bool

    @property
    def total(self) -> Fraction:
        return sum((t.contribution for t in self.terms), Fraction(0))

    @property
    def holds(self) -> bool:
        return self.fibers_ok and self.partition_ok and self.total == self.hom


def pultr_decomposition_identity(C: FiniteCategory, A: int | str, B: int | str) -> PultrReport:
    """Check ``|Hom(A,B)| = sum_T |Extr(A,T)| |Mono(T,B)| / |Isom(T,T)|`` and the fiber claim behind it."""
    A, B = C.obj(A), C.obj(B)
    report = check_pultr_conditions(C)
    if not report.overall:
        bad = report.failed()[0]
        raise HypothesisError(f"condition {bad.name!r} fails (witness {bad.witness})")

    rep_of = {x: block[0] for block in iso_classes(C) for x in block}
    homs = [int(h) for h in C.hom(A, B)]
    image_rep = {h: rep_of[C.dom(image(C, h).representative)] for h in homs}

    terms = []
    fibers_ok = True
    covered: Counter[int] = Counter()
    for T in iso_representatives(C):
        extr = [int(f) for f in C.hom(A, T) if is_extremal(C, int(f))]
        mono = [int(g) for g in C.hom(T, B) if is_mono(C, int(g))]
        aut = [int(m) for m in C.hom(T, T) if is_iso(C, int(m))]
        fibers: dict[int, set[tuple[int, int]]] = {}
        for f in extr:
            for g in mono:
                fibers.setdefault(int(C.table[g, f]), set()).add((f, g))
        for h, fiber in fibers.items():
            covered[h] += 1
            if image_rep[h] != T or len(fiber) != len(aut):
                fibers_ok = False
                continue
            f, g = min(fiber)
            orbit = {(int(C.table[inverse(C, m), f]), int(C.table[g, m])) for m in aut}
            if orbit != fiber:
                fibers_ok = False
        hom_part = sum(1 for h in homs if image_rep[h] == T)
        terms.append(PultrTerm(T, len(extr), len(mono), len(aut), hom_part))
    partition_ok = all(covered[h] == 1 for h in homs) and set(covered) <= set(homs)
    return PultrReport(A, B, len(homs), terms, fibers_ok, partition_ok)


@dataclass
class LovaszLemmaReport:
    mono_counterexamples: list[tuple[int, int]] = field(default_factory=list)
    epi_counterexamples: list[tuple[int, int]] = field(default_factory=list)
    pairs_checked: int = 0

    @property
    def holds(self) -> bool:
        return not self.mono_counterexamples and not self.epi_counterexamples


def verify_lovasz_lemma(C: FiniteCategory) -> LovaszLemmaReport:
    """Mutual monos (or mutual epis) between two objects are all isomorphisms."""
    rep = LovaszLemmaReport()
    n = C.n_objects
    for a in range(n):
        for b in range(a, n):
            rep.pairs_checked += 1
            for pred, sink in ((is_mono, rep.mono_counterexamples), (is_epi, rep.epi_counterexamples)):
                there = [int(f) for f in C.hom(a, b) if pred(C, int(f))]
                back = [int(f) for f in C.hom(b, a) if pred(C, int(f))]
                if there and back:
                    for m in there + back:
                        if not is_iso(C, m):
                            sink.append((m, there[0] if m in back else back[0]))
    return rep


@dataclass
class PushoutHomReport:
    lhs: frozenset[int]
    rhs: frozenset[int]

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs


def verify_pushout_hom_lemma(C: FiniteCategory, q1: int, q2: int, Y: int | str) -> PushoutHomReport:
    """``q3^* Hom(Q3, Y) == q1^* Hom(Q1, Y) & q2^* Hom(Q2, Y)`` inside ``Hom(X, Y)``."""
    Y = C.obj(Y)
    po = pushout(C, (q1, q2))
    if po is None:
        raise HypothesisError(f"no pushout of {C.label(q1)} and {C.label(q2)}")

    def pulled(q: int) -> frozenset[int]:
        return frozenset(int(C.table[h, q]) for h in C.hom(C.cod(q), Y))

    return PushoutHomReport(pulled(po.diagonal), pulled(q1) & pulled(q2))


# -- combinatoriality -------------------------------------------------------------------------


@dataclass
class HomMatrix:
    """``entries[i][j] = |Hom(rows[i], cols[j])|``; columns are iso-class representatives."""

    rows: list[int]
    cols: list[int]
    entries: list[list[int]]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(row[j] for row in self.entries)


def hom_matrix(C: FiniteCategory) -> HomMatrix:
    reps = iso_representatives(C)
    return HomMatrix(reps, reps, [[hom_count(C, x, a) for a in reps] for x in reps])


@dataclass
class CombinatorialResult:
    holds: bool
    witness: tuple[int, int] | None
    matrix: HomMatrix
    iso_columns_equal: bool  # sanity: isomorphic objects share a column

    def __bool__(self) -> bool:
        return self.holds


def is_combinatorial(C: FiniteCategory) -> CombinatorialResult:
    matrix = hom_matrix(C)
    cols = {}
    witness = None
    for j, a in enumerate(matrix.cols):
        # the test objects X range over all objects; isomorphic X give equal rows
        col = tuple(hom_count(C, x, a) for x in range(C.n_objects))
        if col in cols and witness is None:
            witness = (cols[col], a)
        cols.setdefault(col, a)
    sane = all(
        all(hom_count(C, x, a) == hom_count(C, x, b) for x in range(C.n_objects))
        for block in iso_classes(C)
        for a in block
        for b in block
    )
    return CombinatorialResult(witness is None, witness, matrix, sane)

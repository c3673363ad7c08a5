"""Exhaustive categorical predicates and constructions on a :class:`FiniteCategory`.

Everything here is decided by brute force over hom-sets.  Results that are
reused (mono/epi flags, factorization sets, sub/supobject classes) are memoised
on the category instance, which is immutable.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Sequence

import numpy as np

from .category import FiniteCategory


def _memo(C: FiniteCategory, key: tuple, compute):
    try:
        return C._memo[key]
    except KeyError:
        value = C._memo[key] = compute()
        return value


# -- hom-sets -------------------------------------------------------------------


def hom_set(C: FiniteCategory, a: int | str, b: int | str) -> list[int]:
    return [int(f) for f in C.hom(C.obj(a), C.obj(b))]


def hom_count(C: FiniteCategory, a: int | str, b: int | str) -> int:
    return len(C.hom(C.obj(a), C.obj(b)))


# -- mono / epi / iso -------------------------------------------------------------


def is_mono(C: FiniteCategory, f: int) -> bool:
    """``f . g = f . h`` forces ``g = h`` for every parallel pair into ``dom f``."""

    def compute() -> bool:
        vals = C.table[f, C.into(C.dom(f))]
        return len(np.unique(vals)) == len(vals)

    return _memo(C, ("mono", f), compute)


def is_epi(C: FiniteCategory, f: int) -> bool:
    def compute() -> bool:
        vals = C.table[C.out_of(C.cod(f)), f]
        return len(np.unique(vals)) == len(vals)

    return _memo(C, ("epi", f), compute)


def inverse(C: FiniteCategory, f: int) -> int | None:
    a, b = C.dom(f), C.cod(f)
    ida, idb = C.identity[a], C.identity[b]
    for g in C.hom(b, a):
        if C.table[g, f] == ida and C.table[f, g] == idb:
            return int(g)
    return None


def is_iso(C: FiniteCategory, f: int) -> bool:
    return _memo(C, ("iso", f), lambda: inverse(C, f) is not None)


def monos(C: FiniteCategory) -> list[int]:
    return [f for f in range(C.n_morphisms) if is_mono(C, f)]


def epis(C: FiniteCategory) -> list[int]:
    return [f for f in range(C.n_morphisms) if is_epi(C, f)]


def isos(C: FiniteCategory, a: int, b: int) -> list[int]:
    return [int(f) for f in C.hom(a, b) if is_iso(C, int(f))]


# -- factorizations ---------------------------------------------------------------


def precomposites(C: FiniteCategory, q: int) -> frozenset[int]:
    """All ``h . q``: the morphisms that factor through ``q`` as first step."""
    return _memo(C, ("after", q), lambda: frozenset(C.table[C.out_of(C.cod(q)), q].tolist()))


def postcomposites(C: FiniteCategory, m: int) -> frozenset[int]:
    """All ``m . g``: the morphisms that factor through ``m`` as last step."""
    return _memo(C, ("before", m), lambda: frozenset(C.table[m, C.into(C.dom(m))].tolist()))


def factors_through_epi(C: FiniteCategory, f: int, q: int) -> bool:
    """True iff ``f = h . q`` for some ``h``."""
    return C.dom(f) == C.dom(q) and f in precomposites(C, q)


def factors_through_mono(C: FiniteCategory, f: int, m: int) -> bool:
    """True iff ``f = m . g`` for some ``g``."""
    return C.cod(f) == C.cod(m) and f in postcomposites(C, m)


class NotEpiError(ValueError):
    pass


def is_extremal_epi(C: FiniteCategory, e: int) -> bool:
    """Every factorization ``e = m . g`` with ``m`` mono has ``m`` an isomorphism."""
    if not is_epi(C, e):
        raise NotEpiError(f"{C.label(e)} is not an epimorphism")

    def compute() -> bool:
        for m in C.into(C.cod(e)):
            m = int(m)
            if is_mono(C, m) and not is_iso(C, m) and factors_through_mono(C, e, m):
                return False
        return True

    return _memo(C, ("extremal", e), compute)


def is_extremal(C: FiniteCategory, e: int) -> bool:
    """Like :func:`is_extremal_epi` but returns False for non-epis."""
    return is_epi(C, e) and is_extremal_epi(C, e)


# -- isomorphism classes of objects ---------------------------------------------------


def iso_classes(C: FiniteCategory) -> list[tuple[int, ...]]:
    """Blocks of isomorphic objects, each sorted, ordered by least member."""

    def compute():
        parent = list(range(C.n_objects))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for m in C.morphisms:
            if m.dom != m.cod and is_iso(C, m.index):
                ra, rb = find(m.dom), find(m.cod)
                if ra != rb:
                    parent[max(ra, rb)] = min(ra, rb)
        blocks: dict[int, list[int]] = {}
        for a in range(C.n_objects):
            blocks.setdefault(find(a), []).append(a)
        return [tuple(b) for _, b in sorted(blocks.items())]

    return _memo(C, ("iso_classes",), compute)


def iso_representatives(C: FiniteCategory) -> list[int]:
    return [block[0] for block in iso_classes(C)]


def representative(C: FiniteCategory, a: int) -> int:
    for block in iso_classes(C):
        if a in block:
            return block[0]
    raise KeyError(a)


# -- sub- and supobjects ----------------------------------------------------------------


@dataclass(frozen=True)
class SupobjectClass:
    """An isomorphism class of epis out of (or monos into) a fixed object.

    ``order_above`` lists the class ids this class dominates, itself included:
    for supobjects ``q >= q'`` when ``q' = h . q``; for subobjects ``m >= m'``
    when ``m' = m . h``.  Class ids are positions in the list returned by
    :func:`supobjects` / :func:`subobjects`.
    """

    id: int
    representative: int
    members: tuple[int, ...]
    order_above: frozenset[int]

    def __contains__(self, f: int) -> bool:
        return f in self.members


def _classes(C: FiniteCategory, candidates: list[int], dominates) -> list[SupobjectClass]:
    # dominates(p, q): p >= q
    k = len(candidates)
    geq = [[dominates(candidates[i], candidates[j]) for j in range(k)] for i in range(k)]
    cls_of = [-1] * k
    groups: list[list[int]] = []
    for i in range(k):
        if cls_of[i] >= 0:
            continue
        cls_of[i] = len(groups)
        group = [i]
        for j in range(i + 1, k):
            if cls_of[j] < 0 and geq[i][j] and geq[j][i]:
                cls_of[j] = cls_of[i]
                group.append(j)
        groups.append(group)
    # candidates arrive sorted, so group order already follows least member
    out = []
    for cid, group in enumerate(groups):
        lead = group[0]
        below = frozenset(cls_of[j] for j in range(k) if geq[lead][j])
        out.append(SupobjectClass(cid, candidates[lead], tuple(candidates[i] for i in group), below))
    return out


def supobjects(C: FiniteCategory, x: int | str) -> list[SupobjectClass]:
    """Isomorphism classes of epis out of ``x`` with their factorization order."""
    x = C.obj(x)

    def compute():
        cands = sorted(int(q) for q in C.out_of(x) if is_epi(C, int(q)))
        return _classes(C, cands, lambda p, q: factors_through_epi(C, q, p))

    return _memo(C, ("sup", x), compute)


def subobjects(C: FiniteCategory, x: int | str) -> list[SupobjectClass]:
    """Isomorphism classes of monos into ``x``; ``m >= m'`` iff ``m'`` factors through ``m``."""
    x = C.obj(x)

    def compute():
        cands = sorted(int(m) for m in C.into(x) if is_mono(C, int(m)))
        return _classes(C, cands, lambda p, q: factors_through_mono(C, q, p))

    return _memo(C, ("sub", x), compute)


def identity_class(classes: list[SupobjectClass], C: FiniteCategory, x: int) -> SupobjectClass:
    e = C.identity[x]
    for c in classes:
        if e in c.members:
            return c
    raise AssertionError("identity missing from its own class list")


def proper_supobjects(C: FiniteCategory, x: int | str) -> list[SupobjectClass]:
    x = C.obj(x)
    classes = supobjects(C, x)
    top = identity_class(classes, C, x)
    return [c for c in classes if c.id != top.id]


def maximal_supobjects(C: FiniteCategory, x: int | str) -> list[SupobjectClass]:
    """Maximal elements among the proper supobject classes of ``x``."""
    proper = proper_supobjects(C, x)
    return [c for c in proper if not any(d.id != c.id and c.id in d.order_above for d in proper)]


def supobject_class_of(C: FiniteCategory, q: int) -> SupobjectClass:
    for c in supobjects(C, C.dom(q)):
        if q in c.members:
            return c
    raise ValueError(f"{C.label(q)} is not an epimorphism")


def subobject_class_of(C: FiniteCategory, m: int) -> SupobjectClass:
    for c in subobjects(C, C.cod(m)):
        if m in c.members:
            return c
    raise ValueError(f"{C.label(m)} is not a monomorphism")


def _least(classes: list[SupobjectClass]) -> SupobjectClass | None:
    for c in classes:
        if all(c.id in d.order_above for d in classes):
            return c
    return None


def image(C: FiniteCategory, f: int) -> SupobjectClass | None:
    """Least subobject of ``cod f`` through which ``f`` factors, if there is one."""

    def compute():
        cands = [c for c in subobjects(C, C.cod(f)) if factors_through_mono(C, f, c.representative)]
        return _least(cands)

    return _memo(C, ("image", f), compute)


def coimage(C: FiniteCategory, f: int) -> SupobjectClass | None:
    """Least supobject ``e`` of ``dom f`` with ``f = g . e`` (``e <= e'`` for every other such ``e'``)."""

    def compute():
        cands = [c for c in supobjects(C, C.dom(f)) if factors_through_epi(C, f, c.representative)]
        return _least(cands)

    return _memo(C, ("coimage", f), compute)


# -- pushouts --------------------------------------------------------------------------


@dataclass(frozen=True)
class Pushout:
    """Colimit of a span ``legs[i]: X -> Q_i``.

    ``cocone[i]: Q_i -> apex`` and ``diagonal = cocone[i] . legs[i]`` (the
    composite ``X -> apex``; ``id_X`` for the empty span).
    """

    legs: tuple[int, ...]
    apex: int
    cocone: tuple[int, ...]
    diagonal: int


def _span_source(C: FiniteCategory, legs: Sequence[int], source: int | None) -> int:
    if not legs:
        if source is None:
            raise ValueError("empty span needs an explicit source object")
        return source
    x = C.dom(legs[0])
    if any(C.dom(f) != x for f in legs):
        raise ValueError("span legs must share a domain")
    if source is not None and source != x:
        raise ValueError("source does not match the legs' domain")
    return x


def cocones(C: FiniteCategory, legs: Sequence[int], w: int) -> list[tuple[int, ...]]:
    """All commuting cocones of the span with apex ``w``, in lexicographic order."""
    legs = tuple(int(f) for f in legs)

    def compute():
        per_leg = []
        for f in legs:
            by_value: dict[int, list[int]] = {}
            for u in C.hom(C.cod(f), w):
                by_value.setdefault(int(C.table[u, f]), []).append(int(u))
            per_leg.append(by_value)
        common = set(per_leg[0])
        for d in per_leg[1:]:
            common &= set(d)
        out = []
        for v in common:
            out.extend(product(*(d[v] for d in per_leg)))
        out.sort()
        return out

    return _memo(C, ("cocones", legs, w), compute)


def _is_universal(C: FiniteCategory, legs: tuple[int, ...], apex: int, u: tuple[int, ...]) -> bool:
    uu = np.array(u, dtype=np.int64)
    for v in range(C.n_objects):
        ts = C.hom(apex, v)
        target = cocones(C, legs, v)
        if len(ts) != len(target):
            return False
        if not len(ts):
            continue
        induced = C.table[ts[:, None], uu[None, :]]
        if len({tuple(row) for row in induced.tolist()}) != len(ts):
            return False
        # injective into a set of equal size, and every t . u is a cocone: bijective
    return True


def pushout(C: FiniteCategory, legs: Sequence[int], source: int | None = None) -> Pushout | None:
    """Wide pushout of a span by exhaustive search, or ``None`` if none exists.

    Candidates are tried by apex object id, then cocone tuples
    lexicographically; the first one with the universal property wins.
    """
    legs = tuple(int(f) for f in legs)
    x = _span_source(C, legs, source)
    if not legs:
        return Pushout((), x, (), C.identity[x])

    def compute():
        for w in range(C.n_objects):
            for u in cocones(C, legs, w):
                if _is_universal(C, legs, w, u):
                    return Pushout(legs, w, u, int(C.table[u[0], legs[0]]))
        return None

    return _memo(C, ("pushout", legs), compute)


def verify_pushout(C: FiniteCategory, po: Pushout) -> bool:
    """Independent re-check: commuting cocone plus unique mediation to every cocone.

    Walks all cocones of the span explicitly instead of comparing counts.
    """
    legs = po.legs
    if not legs:
        return po.cocone == () and po.diagonal == C.identity[po.apex]
    vals = {int(C.table[u, f]) for u, f in zip(po.cocone, legs)}
    if len(vals) != 1 or po.diagonal not in vals:
        return False
    for v in range(C.n_objects):
        ts = [int(t) for t in C.hom(po.apex, v)]
        for other in cocones(C, legs, v):
            hits = [t for t in ts if all(C.table[t, u] == o for u, o in zip(po.cocone, other))]
            if len(hits) != 1:
                return False
    return True


# -- well-foundedness -------------------------------------------------------------------


@dataclass(frozen=True)
class WellFoundedness:
    holds: bool
    chain: tuple[int, ...]  # representatives of a longest strictly decreasing chain

    @property
    def chain_length(self) -> int:
        return max(len(self.chain) - 1, 0)


def well_founded_supobjects(C: FiniteCategory, x: int | str) -> WellFoundedness:
    """Decide well-foundedness of the supobject order of ``x`` and extract a longest chain."""
    classes = supobjects(C, x)
    by_id = {c.id: c for c in classes}
    for c in classes:
        for d in c.order_above:
            if d != c.id and c.id in by_id[d].order_above:
                # two distinct classes above each other: a cycle, no minimal element
                return WellFoundedness(False, (c.representative, by_id[d].representative))

    longest: dict[int, tuple[int, ...]] = {}

    def chain_from(cid: int) -> tuple[int, ...]:
        if cid not in longest:
            best: tuple[int, ...] = ()
            for d in sorted(by_id[cid].order_above):
                if d != cid:
                    cand = chain_from(d)
                    if len(cand) > len(best):
                        best = cand
            longest[cid] = (cid,) + best
        return longest[cid]

    best: tuple[int, ...] = ()
    for c in classes:
        cand = chain_from(c.id)
        if len(cand) > len(best):
            best = cand
    return WellFoundedness(True, tuple(by_id[i].representative for i in best))

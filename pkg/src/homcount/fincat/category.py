"""Explicit finite categories: objects, morphisms and a dense composition table."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Iterable, Sequence

import numpy as np

UNDEFINED = -1


@dataclass(frozen=True)
class Morphism:
    index: int
    dom: int
    cod: int
    label: str


@dataclass(frozen=True, eq=False)
class FiniteCategory:
    """A category given by explicit tables.

    ``table[g, f]`` holds the index of ``g . f`` when ``cod(f) == dom(g)`` and
    ``UNDEFINED`` otherwise.  Objects and morphisms are dense ordinals; names
    and labels are for display only.
    """

    objects: tuple[str, ...]
    morphisms: tuple[Morphism, ...]
    identity: tuple[int, ...]
    table: np.ndarray = field(repr=False)
    _memo: dict = field(default_factory=dict, init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        self.table.setflags(write=False)

    # -- construction -------------------------------------------------------

    @classmethod
    def from_rule(
        cls,
        objects: Sequence[str],
        arrows: Sequence[tuple[str, int, int]],
        identity: Sequence[int],
        rule: Callable[[int, int], int],
    ) -> "FiniteCategory":
        """Build a category from ``(label, dom, cod)`` triples and a composition rule.

        ``rule(g, f)`` is called only for composable pairs.
        """
        morphisms = tuple(Morphism(i, d, c, lab) for i, (lab, d, c) in enumerate(arrows))
        n = len(morphisms)
        table = np.full((n, n), UNDEFINED, dtype=np.int32)
        incoming: dict[int, list[int]] = {}
        for m in morphisms:
            incoming.setdefault(m.cod, []).append(m.index)
        for g in morphisms:
            for f in incoming.get(g.dom, ()):
                table[g.index, f] = rule(g.index, f)
        return cls(tuple(objects), morphisms, tuple(identity), table)

    # -- lookups ------------------------------------------------------------

    @property
    def n_objects(self) -> int:
        return len(self.objects)

    @property
    def n_morphisms(self) -> int:
        return len(self.morphisms)

    @cached_property
    def object_index(self) -> dict[str, int]:
        return {name: i for i, name in enumerate(self.objects)}

    @cached_property
    def morphism_index(self) -> dict[str, int]:
        return {m.label: m.index for m in self.morphisms}

    def obj(self, name_or_id: str | int) -> int:
        if isinstance(name_or_id, (int, np.integer)):
            if not 0 <= name_or_id < self.n_objects:
                raise KeyError(f"unknown object id {name_or_id}")
            return int(name_or_id)
        try:
            return self.object_index[name_or_id]
        except KeyError:
            raise KeyError(f"unknown object {name_or_id!r}") from None

    def mor(self, label_or_id: str | int) -> int:
        if isinstance(label_or_id, (int, np.integer)):
            if not 0 <= label_or_id < self.n_morphisms:
                raise KeyError(f"unknown morphism id {label_or_id}")
            return int(label_or_id)
        try:
            return self.morphism_index[label_or_id]
        except KeyError:
            raise KeyError(f"unknown morphism {label_or_id!r}") from None

    def dom(self, f: int) -> int:
        return self.morphisms[f].dom

    def cod(self, f: int) -> int:
        return self.morphisms[f].cod

    def label(self, f: int) -> str:
        return self.morphisms[f].label

    def compose(self, g: int, f: int) -> int:
        """Return ``g . f``; raises ``ValueError`` for non-composable pairs."""
        if self.cod(f) != self.dom(g):
            raise ValueError(f"{self.label(g)} . {self.label(f)} is not composable")
        h = int(self.table[g, f])
        if h == UNDEFINED:
            raise ValueError(f"{self.label(g)} . {self.label(f)} missing from table")
        return h

    @cached_property
    def _homs(self) -> dict[tuple[int, int], np.ndarray]:
        buckets: dict[tuple[int, int], list[int]] = {}
        for m in self.morphisms:
            buckets.setdefault((m.dom, m.cod), []).append(m.index)
        return {k: np.array(v, dtype=np.int64) for k, v in buckets.items()}

    @cached_property
    def _into(self) -> list[np.ndarray]:
        out: list[list[int]] = [[] for _ in self.objects]
        for m in self.morphisms:
            out[m.cod].append(m.index)
        return [np.array(v, dtype=np.int64) for v in out]

    @cached_property
    def _out_of(self) -> list[np.ndarray]:
        out: list[list[int]] = [[] for _ in self.objects]
        for m in self.morphisms:
            out[m.dom].append(m.index)
        return [np.array(v, dtype=np.int64) for v in out]

    _EMPTY = np.zeros(0, dtype=np.int64)

    def hom(self, a: int, b: int) -> np.ndarray:
        return self._homs.get((a, b), self._EMPTY)

    def into(self, b: int) -> np.ndarray:
        """All morphisms with codomain ``b``."""
        return self._into[b]

    def out_of(self, a: int) -> np.ndarray:
        """All morphisms with domain ``a``."""
        return self._out_of[a]

    def is_identity(self, f: int) -> bool:
        return self.identity[self.dom(f)] == f

    @cached_property
    def op(self) -> "FiniteCategory":
        return opposite(self)

    # -- equality -----------------------------------------------------------

    def _key(self) -> tuple:
        return (self.objects, self.morphisms, self.identity, self.table.shape, self.table.tobytes())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FiniteCategory):
            return NotImplemented
        return self._key() == other._key()

    @cached_property
    def _hash(self) -> int:
        return hash(self._key())

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"FiniteCategory({self.n_objects} objects, {self.n_morphisms} morphisms)"


def opposite(C: FiniteCategory) -> FiniteCategory:
    """Opposite category: same indices, domains and codomains swapped."""
    morphisms = tuple(Morphism(m.index, m.cod, m.dom, m.label) for m in C.morphisms)
    return FiniteCategory(C.objects, morphisms, C.identity, np.ascontiguousarray(C.table.T))


# -- validation -----------------------------------------------------------------


@dataclass(frozen=True)
class Violation:
    kind: str
    indices: tuple[int, ...]
    message: str


@dataclass
class ValidationReport:
    violations: list[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok

    def kinds(self) -> set[str]:
        return {v.kind for v in self.violations}


def validate(C: FiniteCategory) -> ValidationReport:
    """Check every category axiom; violations come back as data, never raised."""
    report = ValidationReport()
    bad = report.violations
    n, k = C.n_morphisms, C.n_objects
    T = np.asarray(C.table)

    if T.shape != (n, n):
        bad.append(Violation("shape", (), f"table shape {T.shape} != ({n}, {n})"))
        return report
    for i, m in enumerate(C.morphisms):
        if m.index != i:
            bad.append(Violation("index", (i,), f"morphism at position {i} carries index {m.index}"))
        if not (0 <= m.dom < k and 0 <= m.cod < k):
            bad.append(Violation("endpoint", (i,), f"{m.label}: endpoint outside object range"))
    if bad:
        return report
    if len(C.identity) != k:
        bad.append(Violation("identity", (), "identity map is not total"))
        return report
    for a, e in enumerate(C.identity):
        if not (0 <= e < n) or C.dom(e) != a or C.cod(e) != a:
            bad.append(Violation("identity", (a,), f"identity of {C.objects[a]} is not an endomorphism of it"))
    if bad:
        return report

    dom = np.array([m.dom for m in C.morphisms], dtype=np.int64)
    cod = np.array([m.cod for m in C.morphisms], dtype=np.int64)
    composable = cod[None, :] == dom[:, None]  # [g, f]
    defined = T != UNDEFINED
    for g, f in zip(*np.nonzero(composable & ~defined)):
        bad.append(Violation("missing", (int(g), int(f)), f"no entry for {C.label(g)} . {C.label(f)}"))
    for g, f in zip(*np.nonzero(~composable & defined)):
        bad.append(Violation("spurious", (int(g), int(f)), f"entry for non-composable {C.label(g)} . {C.label(f)}"))
    in_range = defined & (T >= 0) & (T < n)
    for g, f in zip(*np.nonzero(defined & ~in_range)):
        bad.append(Violation("range", (int(g), int(f)), f"{C.label(g)} . {C.label(f)} points outside the morphism list"))
    ok = composable & in_range
    gi, fi = np.nonzero(ok)
    h = T[gi, fi]
    wrong = (dom[h] != dom[fi]) | (cod[h] != cod[gi])
    for g, f in zip(gi[wrong], fi[wrong]):
        bad.append(Violation("endpoints", (int(g), int(f)), f"{C.label(g)} . {C.label(f)} has the wrong domain/codomain"))

    ident = np.array(C.identity, dtype=np.int64)
    for f in range(n):
        left, right = ident[cod[f]], ident[dom[f]]
        if ok[left, f] and T[left, f] != f:
            bad.append(Violation("identity-law", (int(left), f), f"id . {C.label(f)} != {C.label(f)}"))
        if ok[f, right] and T[f, right] != f:
            bad.append(Violation("identity-law", (f, int(right)), f"{C.label(f)} . id != {C.label(f)}"))

    # (h . g) . f == h . (g . f), vectorised over h and f for each middle g
    usable = ok.copy()
    usable[gi[wrong], fi[wrong]] = False
    for g in range(n):
        fs = C.into(int(dom[g]))
        hs = C.out_of(int(cod[g]))
        if not len(fs) or not len(hs):
            continue
        fs = fs[usable[g, fs]]
        hs = hs[usable[hs, g]]
        if not len(fs) or not len(hs):
            continue
        gf = T[g, fs]
        hg = T[hs, g]
        left = T[hg[:, None], fs[None, :]]
        right = T[hs[:, None], gf[None, :]]
        for i, j in zip(*np.nonzero(left != right)):
            hh, ff = int(hs[i]), int(fs[j])
            bad.append(
                Violation(
                    "associativity",
                    (hh, g, ff),
                    f"({C.label(hh)} . {C.label(g)}) . {C.label(ff)} != {C.label(hh)} . ({C.label(g)} . {C.label(ff)})",
                )
            )
    return report


def is_category(C: FiniteCategory) -> bool:
    return validate(C).ok


def check_functor(
    C: FiniteCategory,
    D: FiniteCategory,
    obj_map: Sequence[int],
    mor_map: Sequence[int],
) -> bool:
    """True iff the maps form an isomorphism of categories ``C -> D``."""
    if C.n_objects != D.n_objects or C.n_morphisms != D.n_morphisms:
        return False
    if sorted(obj_map) != list(range(D.n_objects)) or sorted(mor_map) != list(range(D.n_morphisms)):
        return False
    for m in C.morphisms:
        image = D.morphisms[mor_map[m.index]]
        if image.dom != obj_map[m.dom] or image.cod != obj_map[m.cod]:
            return False
    for a, e in enumerate(C.identity):
        if D.identity[obj_map[a]] != mor_map[e]:
            return False
    for g in range(C.n_morphisms):
        for f in C.into(C.dom(g)):
            if mor_map[C.table[g, f]] != D.table[mor_map[g], mor_map[int(f)]]:
                return False
    return True


def thin_isomorphism(C: FiniteCategory, D: FiniteCategory, obj_map: Sequence[int]) -> bool:
    """Isomorphism test for categories whose hom-sets have at most one element."""
    mor_map = [0] * C.n_morphisms
    for m in C.morphisms:
        target = D.hom(obj_map[m.dom], obj_map[m.cod])
        if len(target) != 1 or len(C.hom(m.dom, m.cod)) != 1:
            return False
        mor_map[m.index] = int(target[0])
    return check_functor(C, D, obj_map, mor_map)


def full_subcategory(C: FiniteCategory, keep: Iterable[int]) -> FiniteCategory:
    """Full subcategory on the given objects, reindexed densely."""
    keep = sorted(set(keep))
    new_obj = {a: i for i, a in enumerate(keep)}
    kept = [m for m in C.morphisms if m.dom in new_obj and m.cod in new_obj]
    new_mor = {m.index: i for i, m in enumerate(kept)}
    arrows = [(m.label, new_obj[m.dom], new_obj[m.cod]) for m in kept]
    identity = [new_mor[C.identity[a]] for a in keep]
    old = [m.index for m in kept]
    return FiniteCategory.from_rule(
        [C.objects[a] for a in keep],
        arrows,
        identity,
        lambda g, f: new_mor[int(C.table[old[g], old[f]])],
    )

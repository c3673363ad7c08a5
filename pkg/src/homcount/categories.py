"""Finite truncations of the example categories: the a/b category, integer posets, finite groups."""

from __future__ import annotations

from dataclasses import dataclass, field

from .fincat import FiniteCategory
from .fincat.structure import hom_count
from .groups import FiniteGroup, catalog, homomorphisms

SINK = "Pinf"


def build_ab_category(k: int, boundary: bool = True) -> FiniteCategory:
    """Objects ``P0..Pk``; two arrows ``a, b: Pi -> Pj`` for ``i > j``; identities only on the diagonal.

    Composites keep the letter of the first-applied arrow (``a.a = a``,
    ``b.a = a``, ``a.b = b``, ``b.b = b``).

    With ``boundary=True`` a sink object ``Pinf`` is appended that receives
    ``a, b`` from every ``Pi`` and carries one extra automorphism ``s`` acting
    trivially (``s . x = x``).  It stands in for the infinite tail below
    ``P0``: without it every arrow into ``P0`` is vacuously epi, which the
    untruncated category never has.  The full subcategory on ``P0..Pk`` is
    unchanged.
    """
    if k < 0:
        raise ValueError("depth must be >= 0")
    levels = list(range(k + 1))
    objects = [f"P{i}" for i in levels]
    if boundary:
        objects.append(SINK)
    sink = k + 1

    arrows: list[tuple[str, int, int]] = []
    letter: list[str | None] = []  # None for identities and s
    identity = []
    for i in levels:
        identity.append(len(arrows))
        arrows.append((f"id_P{i}", i, i))
        letter.append(None)
    if boundary:
        identity.append(len(arrows))
        arrows.append((f"id_{SINK}", sink, sink))
        letter.append(None)
        s_index = len(arrows)
        arrows.append(("s", sink, sink))
        letter.append(None)
    lookup: dict[tuple[str, int, int], int] = {}
    for i in levels:
        targets = [j for j in levels if j < i] + ([sink] if boundary else [])
        for j in targets:
            for x in "ab":
                name = f"{x}{i}_{'inf' if j == sink else j}"
                lookup[(x, i, j)] = len(arrows)
                arrows.append((name, i, j))
                letter.append(x)

    def rule(g: int, f: int) -> int:
        if letter[g] is None and letter[f] is None:
            if boundary and g == f == s_index:
                return identity[sink]
            return f if g in identity else g
        if letter[f] is None:  # f an identity
            return g
        if letter[g] is None:  # g an identity or s, both fix arrows into the sink
            return f
        _, d, _ = arrows[f]
        _, _, c = arrows[g]
        return lookup[(letter[f], d, c)]

    return FiniteCategory.from_rule(objects, arrows, identity, rule)


POSET_KINDS = ("Z", "N", "negN")


def build_poset_category(kind: str, k: int) -> FiniteCategory:
    """Totally ordered integers as a thin category: one arrow ``i -> j`` iff ``i >= j``.

    ``Z`` uses ``-k..k``, ``N`` uses ``0..k`` and ``negN`` uses ``-k..0``.
    """
    if k < 0:
        raise ValueError("depth must be >= 0")
    ranges = {"Z": range(-k, k + 1), "N": range(0, k + 1), "negN": range(-k, 1)}
    if kind not in ranges:
        raise ValueError(f"poset kind must be one of {POSET_KINDS}")
    values = list(ranges[kind])
    pos = {v: i for i, v in enumerate(values)}
    arrows = []
    index = {}
    for i in values:
        for j in values:
            if i >= j:
                index[(i, j)] = len(arrows)
                label = f"id_{i}" if i == j else f"{i}>{j}"
                arrows.append((label, pos[i], pos[j]))
    identity = [index[(v, v)] for v in values]

    def rule(g: int, f: int) -> int:
        _, i, _ = arrows[f]
        _, _, j = arrows[g]
        return index[(values[i], values[j])]

    return FiniteCategory.from_rule([str(v) for v in values], arrows, identity, rule)


def build_group_category(max_order: int = 6, names: list[str] | None = None) -> FiniteCategory:
    """All homomorphisms between catalog groups of order ``<= max_order``.

    ``names`` restricts to a sub-catalog, e.g. ``["1", "Z2", "Z3"]``.
    """
    groups = catalog(max_order)
    if names is not None:
        by_name = {g.name: g for g in groups}
        missing = [n for n in names if n not in by_name]
        if missing:
            raise ValueError(f"not in catalog of order <= {max_order}: {missing}")
        groups = [by_name[n] for n in names]
    return group_category(groups)


def group_category(groups: list[FiniteGroup]) -> FiniteCategory:
    arrows: list[tuple[str, int, int]] = []
    maps: list[tuple[int, ...]] = []
    where: dict[tuple[int, int, tuple[int, ...]], int] = {}
    identity = [0] * len(groups)
    for a, G in enumerate(groups):
        for b, H in enumerate(groups):
            for n, phi in enumerate(homomorphisms(G, H)):
                idx = len(arrows)
                where[(a, b, phi)] = idx
                if a == b and phi == tuple(range(G.order)):
                    identity[a] = idx
                arrows.append((f"{G.name}>{H.name}.{n}", a, b))
                maps.append(phi)

    def rule(g: int, f: int) -> int:
        _, a, _ = arrows[f]
        _, _, c = arrows[g]
        pg = maps[g]
        return where[(a, c, tuple(pg[x] for x in maps[f]))]

    C = FiniteCategory.from_rule([G.name for G in groups], arrows, identity, rule)
    C._memo["group_maps"] = tuple(maps)
    C._memo["groups"] = tuple(groups)
    return C


# -- cancellation ---------------------------------------------------------------------------

# direct products that exist in the order-8 catalog, looked up by name
PRODUCTS: dict[tuple[str, str], str] = {}


def _register(a: str, b: str, prod: str) -> None:
    PRODUCTS[(a, b)] = prod
    PRODUCTS[(b, a)] = prod


for _g in ("1", "Z2", "Z3", "Z4", "Z2xZ2", "Z5", "Z6", "S3", "Z7", "Z8", "Z4xZ2", "Z2xZ2xZ2", "D4", "Q8"):
    _register("1", _g, _g)
_register("Z2", "Z2", "Z2xZ2")
_register("Z2", "Z3", "Z6")
_register("Z2", "Z4", "Z4xZ2")
_register("Z2", "Z2xZ2", "Z2xZ2xZ2")


def product_name(a: str, b: str) -> str | None:
    return PRODUCTS.get((a, b))


@dataclass
class CancellationReport:
    A: str
    B: str
    C: str
    product_rule: dict[str, tuple[int, int, int]] = field(default_factory=dict)  # Z -> (|Z->AxB|, |Z->A|, |Z->B|)
    product_rule_c: dict[str, tuple[int, int, int]] = field(default_factory=dict)
    column_b: dict[str, int] = field(default_factory=dict)
    column_c: dict[str, int] = field(default_factory=dict)

    @property
    def product_rule_holds(self) -> bool:
        rows = list(self.product_rule.values()) + list(self.product_rule_c.values())
        return all(p == x * y for p, x, y in rows)

    @property
    def columns_agree(self) -> bool:
        return self.column_b == self.column_c

    @property
    def first_difference(self) -> str | None:
        for z in self.column_b:
            if self.column_b[z] != self.column_c[z]:
                return z
        return None


class MissingProductError(ValueError):
    pass


def cancellation_demo(cat: FiniteCategory, A: str, B: str, C: str) -> CancellationReport:
    """Check ``|Hom(Z, AxB)| = |Hom(Z,A)| |Hom(Z,B)|`` over the catalog and compare hom-columns of B and C."""
    ab, ac = product_name(A, B), product_name(A, C)
    for pair, prod in (((A, B), ab), ((A, C), ac)):
        if prod is None or prod not in cat.object_index:
            raise MissingProductError(f"{pair[0]} x {pair[1]} is not representable in this catalog")
    rep = CancellationReport(A, B, C)
    for z in cat.objects:
        rep.product_rule[z] = (hom_count(cat, z, ab), hom_count(cat, z, A), hom_count(cat, z, B))
        rep.product_rule_c[z] = (hom_count(cat, z, ac), hom_count(cat, z, A), hom_count(cat, z, C))
        rep.column_b[z] = hom_count(cat, z, B)
        rep.column_c[z] = hom_count(cat, z, C)
    return rep

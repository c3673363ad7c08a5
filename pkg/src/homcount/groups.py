"""Hardcoded catalog of finite groups of order at most 8 and brute-force homomorphisms."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import Callable, Hashable, Sequence


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    """A group as a multiplication table on ``0..order-1`` with identity ``0``."""

    name: str
    table: tuple[tuple[int, ...], ...]

    @property
    def order(self) -> int:
        return len(self.table)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    @cached_property
    def generators(self) -> tuple[int, ...]:
        """Greedy generating set, smallest elements first."""
        gens: list[int] = []
        span = {0}
        for g in range(self.order):
            if g not in span:
                gens.append(g)
                span = self.closure(gens)
        return tuple(gens)

    def closure(self, gens: Sequence[int]) -> set[int]:
        span = {0}
        frontier = [0]
        while frontier:
            x = frontier.pop()
            for s in gens:
                y = self.mul(x, s)
                if y not in span:
                    span.add(y)
                    frontier.append(y)
        return span

    def is_group(self) -> bool:
        n = self.order
        rng = range(n)
        if any(self.mul(0, a) != a or self.mul(a, 0) != a for a in rng):
            return False
        if any(sorted(row) != list(rng) for row in self.table):
            return False
        return all(self.mul(self.mul(a, b), c) == self.mul(a, self.mul(b, c)) for a in rng for b in rng for c in rng)


def group_from(name: str, elements: Sequence[Hashable], mul: Callable, identity: Hashable) -> FiniteGroup:
    elems = [identity] + [e for e in elements if e != identity]
    index = {e: i for i, e in enumerate(elems)}
    table = tuple(tuple(index[mul(a, b)] for b in elems) for a in elems)
    return FiniteGroup(name, table)


def abelian(name: str, *moduli: int) -> FiniteGroup:
    elems = list(product(*(range(m) for m in moduli)))
    return group_from(
        name,
        elems,
        lambda a, b: tuple((x + y) % m for x, y, m in zip(a, b, moduli)),
        tuple(0 for _ in moduli),
    )


def _perm_group(name: str, gens: list[tuple[int, ...]]) -> FiniteGroup:
    n = len(gens[0])
    ident = tuple(range(n))
    compose = lambda p, q: tuple(p[q[i]] for i in range(n))  # noqa: E731
    elems = {ident}
    frontier = [ident]
    while frontier:
        x = frontier.pop()
        for s in gens:
            y = compose(x, s)
            if y not in elems:
                elems.add(y)
                frontier.append(y)
    return group_from(name, sorted(elems), compose, ident)


def _quaternion() -> FiniteGroup:
    # units 1,i,j,k as 0..3 with sign; unit products: (sign, unit)
    mult = {
        (0, 0): (1, 0), (0, 1): (1, 1), (0, 2): (1, 2), (0, 3): (1, 3),
        (1, 0): (1, 1), (1, 1): (-1, 0), (1, 2): (1, 3), (1, 3): (-1, 2),
        (2, 0): (1, 2), (2, 1): (-1, 3), (2, 2): (-1, 0), (2, 3): (1, 1),
        (3, 0): (1, 3), (3, 1): (1, 2), (3, 2): (-1, 1), (3, 3): (-1, 0),
    }  # fmt: skip

    def mul(a, b):
        s, u = mult[(a[1], b[1])]
        return (a[0] * b[0] * s, u)

    elems = [(s, u) for s in (1, -1) for u in range(4)]
    return group_from("Q8", elems, mul, (1, 0))


def catalog(max_order: int = 8) -> list[FiniteGroup]:
    """One group per isomorphism class of order ``<= max_order`` (at most 8)."""
    if not 1 <= max_order <= 8:
        raise ValueError("max_order must lie in 1..8")
    groups = [
        abelian("1"),
        abelian("Z2", 2),
        abelian("Z3", 3),
        abelian("Z4", 4),
        abelian("Z2xZ2", 2, 2),
        abelian("Z5", 5),
        abelian("Z6", 6),
        _perm_group("S3", [(1, 0, 2), (1, 2, 0)]),
        abelian("Z7", 7),
        abelian("Z8", 8),
        abelian("Z4xZ2", 4, 2),
        abelian("Z2xZ2xZ2", 2, 2, 2),
        _perm_group("D4", [(1, 2, 3, 0), (3, 2, 1, 0)]),
        _quaternion(),
    ]
    return [g for g in groups if g.order <= max_order]


def homomorphisms(G: FiniteGroup, H: FiniteGroup) -> list[tuple[int, ...]]:
    """All homomorphisms ``G -> H`` as image tuples, by brute force over generator images."""
    gens = G.generators
    out = []
    for imgs in product(range(H.order), repeat=len(gens)):
        phi = [-1] * G.order
        phi[0] = 0
        frontier = [0]
        ok = True
        while frontier and ok:
            x = frontier.pop()
            for s, t in zip(gens, imgs):
                y, want = G.mul(x, s), H.mul(phi[x], t)
                if phi[y] < 0:
                    phi[y] = want
                    frontier.append(y)
                elif phi[y] != want:
                    ok = False
                    break
        if ok:
            out.append(tuple(phi))
    out.sort()
    return out


def is_injective(phi: Sequence[int]) -> bool:
    return len(set(phi)) == len(phi)


def is_surjective(phi: Sequence[int], H: FiniteGroup) -> bool:
    return len(set(phi)) == H.order


def automorphism_count(G: FiniteGroup) -> int:
    return sum(1 for phi in homomorphisms(G, G) if is_injective(phi))


def are_isomorphic(G: FiniteGroup, H: FiniteGroup) -> bool:
    if G.order != H.order:
        return False
    return any(is_injective(phi) for phi in homomorphisms(G, H))


def brute_force_homomorphism_count(G: FiniteGroup, H: FiniteGroup) -> int:
    """Count maps ``G -> H`` that respect every product; no generator shortcut."""
    n = G.order
    if H.order**n > 2_000_000:
        raise ValueError("too many maps for brute force")
    count = 0
    for phi in product(range(H.order), repeat=n - 1):
        phi = (0,) + phi
        if all(phi[G.mul(a, b)] == H.mul(phi[a], phi[b]) for a in range(n) for b in range(n)):
            count += 1
    return count

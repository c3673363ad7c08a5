"""Homomorphism, injective and surjective counts by backtracking, plus the three injective-count routes."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Iterator

from .graph import Graph, same_kind
from .partition import Partition, discrete, mobius, quotient, set_partitions


@dataclass(frozen=True)
class _Plan:
    order: tuple[int, ...]
    # per position: (earlier position, edge goes earlier->this) pairs
    constraints: tuple[tuple[tuple[int, bool], ...], ...]
    loops: tuple[bool, ...]


@lru_cache(maxsize=4096)
def _plan(X: Graph) -> _Plan:
    """Descending degree, preferring vertices with the most already-placed neighbours."""
    remaining = set(range(X.n))
    order: list[int] = []
    placed = 0
    while remaining:
        v = max(remaining, key=lambda w: (bin(X.neighbors(w) & placed).count("1"), X.degree(w), -w))
        order.append(v)
        placed |= 1 << v
        remaining.remove(v)
    pos = {v: i for i, v in enumerate(order)}
    cons = []
    for i, v in enumerate(order):
        c = []
        for u in order[:i]:
            if X.has_edge(u, v):
                c.append((pos[u], True))
            if X.has_edge(v, u) and (X.directed or not X.has_edge(u, v)):
                c.append((pos[u], False))
        cons.append(tuple(c))
    loops = tuple(X.has_edge(v, v) for v in order)
    return _Plan(tuple(order), tuple(cons), loops)


def _candidates(plan: _Plan, A: Graph, i: int, assign: list[int]) -> int:
    cand = (1 << A.n) - 1
    for j, forward in plan.constraints[i]:
        cand &= A.out_mask[assign[j]] if forward else A.in_mask[assign[j]]
    if plan.loops[i]:
        cand &= A.loop_mask
    return cand


def _count(X: Graph, A: Graph, injective: bool) -> int:
    if X.n == 0:
        return 1
    plan = _plan(X)
    assign = [0] * X.n
    last = X.n - 1

    def rec(i: int, used: int) -> int:
        cand = _candidates(plan, A, i, assign)
        if injective:
            cand &= ~used
        if i == last:
            return bin(cand).count("1")
        total = 0
        while cand:
            low = cand & -cand
            assign[i] = low.bit_length() - 1
            total += rec(i + 1, used | low)
            cand ^= low
        return total

    return rec(0, 0)


@lru_cache(maxsize=1 << 16)
def hom_count(X: Graph, A: Graph) -> int:
    """Number of edge-preserving vertex maps ``X -> A`` (loops must land on loops)."""
    same_kind(X, A)
    return _count(X, A, injective=False)


@lru_cache(maxsize=1 << 16)
def inj_count_direct(X: Graph, A: Graph) -> int:
    same_kind(X, A)
    return _count(X, A, injective=True)


def aut_count(A: Graph) -> int:
    return inj_count_direct(A, A)


def hom_maps(X: Graph, A: Graph, injective: bool = False) -> Iterator[tuple[int, ...]]:
    """Yield every homomorphism as a tuple indexed by the vertices of ``X``."""
    same_kind(X, A)
    if X.n == 0:
        yield ()
        return
    plan = _plan(X)
    assign = [0] * X.n

    def rec(i: int, used: int) -> Iterator[tuple[int, ...]]:
        if i == X.n:
            out = [0] * X.n
            for k, v in enumerate(plan.order):
                out[v] = assign[k]
            yield tuple(out)
            return
        cand = _candidates(plan, A, i, assign)
        if injective:
            cand &= ~used
        while cand:
            low = cand & -cand
            assign[i] = low.bit_length() - 1
            yield from rec(i + 1, used | low)
            cand ^= low

    yield from rec(0, 0)


@lru_cache(maxsize=1 << 14)
def surj_count(X: Graph, A: Graph) -> int:
    """Homomorphisms onto ``A``: every vertex and every edge of ``A`` is hit.

    These are the extremal epimorphisms of the graph category; counting only
    vertex-surjective maps would also admit maps that miss an edge of ``A``.
    """
    same_kind(X, A)
    if X.n < A.n:
        return 0
    full = (1 << A.n) - 1
    target_edges = A.edges
    count = 0
    for phi in hom_maps(X, A):
        hit = 0
        for v in phi:
            hit |= 1 << v
        if hit != full:
            continue
        if {(phi[u], phi[v]) for u, v in X.edges} == target_edges:
            count += 1
    return count


def vertex_surj_count(X: Graph, A: Graph) -> int:
    """Homomorphisms that are onto the vertex set only."""
    full = (1 << A.n) - 1
    count = 0
    for phi in hom_maps(X, A):
        hit = 0
        for v in phi:
            hit |= 1 << v
        count += hit == full
    return count


# -- injective counts from hom counts --------------------------------------------------------


def maximal_quotients(X: Graph) -> list[Partition]:
    """All single-pair merges: the maximal proper quotients of ``X``."""
    n = X.n
    out = []
    for u, v in combinations(range(n), 2):
        assign = list(range(n))
        for w in range(v + 1, n):
            assign[w] = w - 1
        assign[v] = u
        out.append(tuple(assign))
    return out


def _join_pair(p: Partition, u: int, v: int) -> Partition:
    a, b = p[u], p[v]
    if a == b:
        return p
    lo, hi = min(a, b), max(a, b)
    return tuple(lo if x == hi else (x - 1 if x > hi else x) for x in p)


def inclusion_exclusion_coefficients(n: int) -> Counter:
    """Signed multiplicity of each join partition over all subsets of single-pair merges.

    Subsets are walked explicitly (2^C(n,2) leaves); equal joins are pooled so
    each distinct quotient is counted once downstream.
    """
    pairs = list(combinations(range(n), 2))
    coeff: Counter = Counter()

    def rec(i: int, part: Partition, sign: int) -> None:
        if i == len(pairs):
            coeff[part] += sign
            return
        rec(i + 1, part, sign)
        u, v = pairs[i]
        rec(i + 1, _join_pair(part, u, v), -sign)

    rec(0, discrete(n), 1)
    return coeff


_IE_CACHE: dict[int, Counter] = {}


def inj_via_inclusion_exclusion(X: Graph, A: Graph) -> int:
    """``hom(X,A) + sum over nonempty S of (-1)^|S| hom(X / join(S), A)``, S ranging over single-pair merges."""
    same_kind(X, A)
    coeff = _IE_CACHE.get(X.n)
    if coeff is None:
        coeff = _IE_CACHE[X.n] = inclusion_exclusion_coefficients(X.n)
    return sum(c * hom_count(quotient(X, p), A) for p, c in coeff.items() if c)


def inj_via_mobius(X: Graph, A: Graph) -> int:
    """Möbius inversion over the partition lattice of ``V(X)``."""
    same_kind(X, A)
    return sum(mobius(p) * hom_count(quotient(X, p), A) for p in set_partitions(X.n))


# -- Pultr decomposition --------------------------------------------------------------------


@dataclass
class PultrGraphTerm:
    T: Graph
    key: str
    surjections: int
    injections: int
    automorphisms: int

    @property
    def contribution(self) -> int:
        return self.surjections * self.injections // self.automorphisms


@dataclass
class PultrGraphReport:
    hom: int
    terms: list[PultrGraphTerm] = field(default_factory=list)

    @property
    def total(self) -> int:
        return sum(t.contribution for t in self.terms)

    @property
    def holds(self) -> bool:
        return self.total == self.hom


class InexactDivisionError(ArithmeticError):
    pass


def pultr_identity_graphs(A: Graph, B: Graph) -> PultrGraphReport:
    """``hom(A,B) = sum_T surj(A,T) inj(T,B) / aut(T)`` with ``T`` over isomorphism types of quotients of ``A``."""
    from .canon import canonical_form

    same_kind(A, B)
    seen: dict[str, Graph] = {}
    for p in set_partitions(A.n):
        form = canonical_form(quotient(A, p))
        seen.setdefault(form.key, form.graph)
    report = PultrGraphReport(hom_count(A, B))
    for key in sorted(seen, key=lambda k: canonical_form(seen[k]).sort_key):
        T = seen[key]
        s, i, a = surj_count(A, T), inj_count_direct(T, B), aut_count(T)
        if (s * i) % a or s % a:
            raise InexactDivisionError(f"{s}*{i} not divisible by |Aut| = {a} for quotient {key}")
        report.terms.append(PultrGraphTerm(T, key, s, i, a))
    return report

"""Canonical labelling by minimal adjacency string, small-graph enumeration and hom profiles."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations

from .counting import hom_count
from .graph import Graph, same_kind


@dataclass(frozen=True)
class CanonicalForm:
    """``bits`` is the minimal adjacency string; ``graph`` is the input relabelled to attain it."""

    bits: str
    graph: Graph

    @property
    def key(self) -> str:
        # zero-padded hex keeps lexicographic key order equal to bit-string order
        width = (len(self.bits) + 3) // 4
        value = int(self.bits, 2) if self.bits else 0
        return f"{'d' if self.graph.directed else 'u'}{self.graph.n}x{value:0{width}x}"

    @property
    def sort_key(self) -> tuple[int, str]:
        return (self.graph.n, self.bits)


def _column(G: Graph, chosen: tuple[int, ...], v: int) -> tuple[int, ...]:
    # block appended when v is placed after the vertices already chosen
    col = [int(G.has_edge(v, v))]
    for u in chosen:
        col.append(int(G.has_edge(u, v)))
        if G.directed:
            col.append(int(G.has_edge(v, u)))
    return tuple(col)


def _twin_rank(G: Graph) -> list[int | None]:
    """For each vertex, the previous vertex of its twin class (or None).

    Twins are interchangeable by an automorphism, so only orderings that list
    each twin class in increasing order need to be searched.
    """
    def twins(v: int, w: int) -> bool:
        bit = (1 << v) | (1 << w)
        return (
            G.has_edge(v, v) == G.has_edge(w, w)
            and G.out_mask[v] & ~bit == G.out_mask[w] & ~bit
            and G.in_mask[v] & ~bit == G.in_mask[w] & ~bit
            and G.has_edge(v, w) == G.has_edge(w, v)
        )

    prev: list[int | None] = [None] * G.n
    classes: list[list[int]] = []
    for v in range(G.n):
        for cls in classes:
            if all(twins(u, v) for u in cls):
                prev[v] = cls[-1]
                cls.append(v)
                break
        else:
            classes.append([v])
    return prev


@lru_cache(maxsize=1 << 16)
def canonical_form(G: Graph) -> CanonicalForm:
    """Lexicographically minimal adjacency string over every vertex ordering.

    Orderings grow one vertex per level and each level appends a block of
    fixed length, so keeping only partial orderings with minimal prefix is
    exact.  Twin classes are kept in increasing order, which removes the
    factorial blow-up on empty and complete blocks.
    """
    prev = _twin_rank(G)
    partials: list[tuple[int, ...]] = [()]
    bits: list[int] = []
    for _ in range(G.n):
        best: tuple[int, ...] | None = None
        nxt: list[tuple[int, ...]] = []
        for part in partials:
            used = set(part)
            for v in range(G.n):
                if v in used or (prev[v] is not None and prev[v] not in used):
                    continue
                col = _column(G, part, v)
                if best is None or col < best:
                    best, nxt = col, [part + (v,)]
                elif col == best:
                    nxt.append(part + (v,))
        bits.extend(best)
        partials = nxt
    order = partials[0]
    perm = [0] * G.n
    for new, old in enumerate(order):
        perm[old] = new
    return CanonicalForm("".join(map(str, bits)), G.relabel(perm))


def canonical_key(G: Graph) -> str:
    return canonical_form(G).key


def _degree_sequence(G: Graph) -> list[tuple[int, int, bool]]:
    return sorted((bin(G.out_mask[v]).count("1"), bin(G.in_mask[v]).count("1"), G.has_edge(v, v)) for v in range(G.n))


def is_isomorphic(A: Graph, B: Graph) -> bool:
    if A.n != B.n or A.directed != B.directed or len(A.edges) != len(B.edges):
        return False
    if _degree_sequence(A) != _degree_sequence(B):
        return False
    return canonical_form(A).bits == canonical_form(B).bits


def brute_force_isomorphic(A: Graph, B: Graph) -> bool:
    """Try every bijection; independent oracle for tests."""
    if A.n != B.n or A.directed != B.directed or len(A.edges) != len(B.edges):
        return False
    return any(A.relabel(p).edges == B.edges for p in permutations(range(A.n)))


# -- enumeration and profiles ----------------------------------------------------------------


@lru_cache(maxsize=64)
def graphs_on(n: int, directed: bool = False, loops: bool = False) -> tuple[Graph, ...]:
    """One canonical representative per isomorphism class on exactly ``n`` vertices, sorted by key."""
    if directed:
        slots = [(u, v) for u in range(n) for v in range(n) if u != v]
    else:
        slots = list(combinations(range(n), 2))
    if loops:
        slots += [(v, v) for v in range(n)]
    seen: dict[str, CanonicalForm] = {}
    for mask in range(1 << len(slots)):
        es = [slots[i] for i in range(len(slots)) if mask >> i & 1]
        form = canonical_form(Graph.from_edges(n, es, directed))
        seen.setdefault(form.bits, form)
    return tuple(seen[b].graph for b in sorted(seen))


def enumerate_graphs(k: int, directed: bool = False, loops: bool = False, min_size: int = 1) -> list[Graph]:
    """All isomorphism classes with ``min_size..k`` vertices, by vertex count then key."""
    out: list[Graph] = []
    for n in range(min_size, k + 1):
        out.extend(graphs_on(n, directed, loops))
    return out


def hom_profile(A: Graph, k: int) -> dict[str, int]:
    """Key of each test graph with at most ``k`` vertices mapped to its hom count into ``A``."""
    return {canonical_key(X): hom_count(X, A) for X in enumerate_graphs(k, A.directed, A.has_loops)}


@dataclass(frozen=True)
class Distinction:
    witness: Graph | None
    count_a: int | None = None
    count_b: int | None = None

    @property
    def certified_equal(self) -> bool:
        return self.witness is None


def distinguish(A: Graph, B: Graph, k: int) -> Distinction:
    """First test graph (in enumeration order) with different hom counts, or certified equality at level ``k``.

    Test graphs carry loops only when one of ``A``, ``B`` does.
    """
    same_kind(A, B)
    for X in enumerate_graphs(k, A.directed, A.has_loops or B.has_loops):
        a, b = hom_count(X, A), hom_count(X, B)
        if a != b:
            return Distinction(X, a, b)
    return Distinction(None)

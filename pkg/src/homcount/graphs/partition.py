"""Vertex partitions as restricted-growth strings, their join, Möbius weights and quotients."""

from __future__ import annotations

from math import factorial
from typing import Iterator, Sequence

from .graph import Graph

Partition = tuple[int, ...]


def canonical(blocks_of: Sequence[int]) -> Partition:
    """Relabel block ids in order of first appearance (restricted-growth form)."""
    relabel: dict[int, int] = {}
    return tuple(relabel.setdefault(b, len(relabel)) for b in blocks_of)


def is_partition(p: Sequence[int]) -> bool:
    return tuple(p) == canonical(p)


def discrete(n: int) -> Partition:
    return tuple(range(n))


def block_count(p: Partition) -> int:
    return max(p) + 1 if p else 0


def blocks(p: Partition) -> list[list[int]]:
    out: list[list[int]] = [[] for _ in range(block_count(p))]
    for v, b in enumerate(p):
        out[b].append(v)
    return out


def from_blocks(n: int, bs: Sequence[Sequence[int]]) -> Partition:
    assign = [-1] * n
    for i, b in enumerate(bs):
        for v in b:
            assign[v] = i
    if -1 in assign:
        raise ValueError("blocks do not cover the ground set")
    return canonical(assign)


def set_partitions(n: int) -> Iterator[Partition]:
    """All restricted-growth strings of length ``n`` in lexicographic order."""
    if n == 0:
        yield ()
        return
    rgs = [0] * n

    def rec(i: int, top: int) -> Iterator[Partition]:
        if i == n:
            yield tuple(rgs)
            return
        for b in range(top + 2):
            rgs[i] = b
            yield from rec(i + 1, max(top, b))

    rgs[0] = 0
    yield from rec(1, 0)


def join(p: Partition, q: Partition) -> Partition:
    """Finest partition coarser than both: connected components of the union of block relations."""
    if len(p) != len(q):
        raise ValueError("partitions of different ground sets")
    n = len(p)
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for part in (p, q):
        first: dict[int, int] = {}
        for v, b in enumerate(part):
            if b in first:
                ra, rb = find(first[b]), find(v)
                if ra != rb:
                    parent[max(ra, rb)] = min(ra, rb)
            else:
                first[b] = v
    return canonical([find(v) for v in range(n)])


def merge_pair(n: int, u: int, v: int) -> Partition:
    assign = list(range(n))
    assign[max(u, v)] = min(u, v)
    return canonical(assign)


def mobius(p: Partition) -> int:
    """Möbius function from the discrete partition: prod over blocks of (-1)^(|B|-1) (|B|-1)!."""
    out = 1
    for b in blocks(p):
        k = len(b)
        out *= (-1) ** (k - 1) * factorial(k - 1)
    return out


def quotient(G: Graph, p: Sequence[int]) -> Graph:
    """Graph on the blocks of ``p``; merging adjacent vertices leaves a loop.

    ``p`` maps each vertex to a block id; ids must be exactly ``0..k-1``.
    """
    p = tuple(p)
    if len(p) != G.n or set(p) != set(range(block_count(p))):
        raise ValueError("not a partition of the vertex set with contiguous block ids")
    return Graph(block_count(p), frozenset((p[u], p[v]) for u, v in G.edges), G.directed)

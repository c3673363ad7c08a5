"""Finite simple graphs (loops allowed), the ``.g`` file format and quotients."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from pathlib import Path
from typing import Iterable, Sequence


@dataclass(frozen=True)
class Graph:
    """``n`` vertices ``0..n-1`` and a set of ordered edges.

    Undirected graphs store both orientations of every edge; a loop is the
    single pair ``(v, v)``.
    """

    n: int
    edges: frozenset[tuple[int, int]]
    directed: bool = False

    def __post_init__(self) -> None:
        for u, v in self.edges:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u}, {v}) outside 0..{self.n - 1}")
            if not self.directed and (v, u) not in self.edges:
                raise ValueError(f"undirected graph missing reverse of ({u}, {v})")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], directed: bool = False) -> "Graph":
        es = set()
        for u, v in edges:
            es.add((u, v))
            if not directed:
                es.add((v, u))
        return cls(n, frozenset(es), directed)

    @cached_property
    def out_mask(self) -> tuple[int, ...]:
        masks = [0] * self.n
        for u, v in self.edges:
            masks[u] |= 1 << v
        return tuple(masks)

    @cached_property
    def in_mask(self) -> tuple[int, ...]:
        masks = [0] * self.n
        for u, v in self.edges:
            masks[v] |= 1 << u
        return tuple(masks)

    @cached_property
    def loop_mask(self) -> int:
        return sum(1 << v for v in range(self.n) if (v, v) in self.edges)

    @property
    def has_loops(self) -> bool:
        return self.loop_mask != 0

    def has_edge(self, u: int, v: int) -> bool:
        return (u, v) in self.edges

    def degree(self, v: int) -> int:
        return bin(self.out_mask[v] | self.in_mask[v]).count("1")

    def neighbors(self, v: int) -> int:
        """Bitmask of vertices adjacent to ``v`` in either direction (``v`` itself if looped)."""
        return self.out_mask[v] | self.in_mask[v]

    @property
    def edge_count(self) -> int:
        """Number of edges as written in a file: undirected edges once, loops once."""
        if self.directed:
            return len(self.edges)
        return sum(1 for u, v in self.edges if u <= v)

    def simple_edges(self) -> list[tuple[int, int]]:
        if self.directed:
            return sorted(self.edges)
        return sorted((u, v) for u, v in self.edges if u <= v)

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Vertex ``v`` becomes ``perm[v]``."""
        return Graph(self.n, frozenset((perm[u], perm[v]) for u, v in self.edges), self.directed)

    def disjoint_union(self, other: "Graph") -> "Graph":
        if self.directed != other.directed:
            raise ValueError("directedness mismatch")
        shifted = {(u + self.n, v + self.n) for u, v in other.edges}
        return Graph(self.n + other.n, self.edges | shifted, self.directed)

    def __repr__(self) -> str:
        kind = "d" if self.directed else "u"
        return f"Graph({self.n}, {self.simple_edges()}, {kind})"


class DirectednessError(ValueError):
    pass


def same_kind(X: Graph, A: Graph) -> None:
    if X.directed != A.directed:
        raise DirectednessError("source and target must both be directed or both undirected")


# -- named graphs -------------------------------------------------------------------------


def complete(n: int) -> Graph:
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def path(n: int) -> Graph:
    """Path on ``n`` vertices."""
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def empty(n: int) -> Graph:
    return Graph(n, frozenset())


def loop_vertex() -> Graph:
    return Graph(1, frozenset({(0, 0)}))


# -- file format ---------------------------------------------------------------------------


class GraphFormatError(ValueError):
    def __init__(self, message: str, line: int | None = None, source: str = "<string>"):
        self.line = line
        where = f"{source}:{line}: " if line is not None else f"{source}: "
        super().__init__(where + message)


def parse_graph(text: str, source: str = "<string>") -> Graph:
    """Parse ``p graph <n> <m> <d|u>`` followed by ``m`` lines ``e <u> <v>``."""
    header = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tok = line.split()
        if tok[0] == "p":
            if header is not None:
                raise GraphFormatError("second header line", lineno, source)
            if len(tok) != 5 or tok[1] != "graph" or tok[4] not in ("d", "u"):
                raise GraphFormatError("expected 'p graph <n> <m> <d|u>'", lineno, source)
            try:
                n, m = int(tok[2]), int(tok[3])
            except ValueError:
                raise GraphFormatError("vertex and edge counts must be integers", lineno, source) from None
            if n < 0 or m < 0:
                raise GraphFormatError("counts must be nonnegative", lineno, source)
            header = (n, m, tok[4] == "d", lineno)
        elif tok[0] == "e":
            if header is None:
                raise GraphFormatError("edge before header", lineno, source)
            if len(tok) != 3:
                raise GraphFormatError("expected 'e <u> <v>'", lineno, source)
            try:
                u, v = int(tok[1]), int(tok[2])
            except ValueError:
                raise GraphFormatError("vertices must be integers", lineno, source) from None
            if not (0 <= u < header[0] and 0 <= v < header[0]):
                raise GraphFormatError(f"vertex out of range 0..{header[0] - 1}", lineno, source)
            edges.append((u, v))
        else:
            raise GraphFormatError(f"unknown line type {tok[0]!r}", lineno, source)
    if header is None:
        raise GraphFormatError("missing header", None, source)
    n, m, directed, hline = header
    if len(edges) != m:
        raise GraphFormatError(f"header announces {m} edges, found {len(edges)}", hline, source)
    return Graph.from_edges(n, edges, directed)


def dump_graph(G: Graph) -> str:
    es = G.simple_edges()
    lines = [f"p graph {G.n} {len(es)} {'d' if G.directed else 'u'}"]
    lines += [f"e {u} {v}" for u, v in es]
    return "\n".join(lines) + "\n"


def read_graph(path: str | Path) -> Graph:
    path = Path(path)
    return parse_graph(path.read_text(), source=str(path))


def write_graph(G: Graph, path: str | Path) -> None:
    Path(path).write_text(dump_graph(G))

"""Simple undirected graphs on vertices ``0..n-1``.

Graphs are immutable. Every mutating-looking helper (``add_edge``,
``add_edges``) returns a fresh graph. Neighborhoods are kept both as
frozensets (for readable code and tests) and as integer bitmasks (for the
search kernels in :mod:`preinforce.pdomination`).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

Edge = tuple[int, int]


class GraphFormatError(ValueError):
    """Raised when an edge-list document cannot be parsed."""


def edge(u: int, v: int) -> Edge:
    """Canonical ``(min, max)`` form of an undirected edge."""
    if u == v:
        raise ValueError(f"loop at vertex {u} is not allowed")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    n: int
    adjacency: tuple[frozenset[int], ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        if len(self.adjacency) != self.n:
            raise ValueError("adjacency must have one entry per vertex")
        for v, nbrs in enumerate(self.adjacency):
            if v in nbrs:
                raise ValueError(f"loop at vertex {v}")
            for u in nbrs:
                if not 0 <= u < self.n:
                    raise ValueError(f"neighbor {u} of {v} out of range")
                if v not in self.adjacency[u]:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> Graph:
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            _check_vertex(n, u)
            _check_vertex(n, v)
            if u == v:
                raise ValueError(f"loop at vertex {u} is not allowed")
            adj[u].add(v)
            adj[v].add(u)
        return cls(n, tuple(frozenset(s) for s in adj))

    # -- basic invariants -------------------------------------------------

    @property
    def vertices(self) -> range:
        return range(self.n)

    @cached_property
    def edges(self) -> tuple[Edge, ...]:
        return tuple(
            (u, v) for u in range(self.n) for v in sorted(self.adjacency[u]) if u < v
        )

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adjacency[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    @property
    def min_degree(self) -> int:
        return min((len(a) for a in self.adjacency), default=0)

    @property
    def max_degree(self) -> int:
        return max((len(a) for a in self.adjacency), default=0)

    @cached_property
    def masks(self) -> tuple[int, ...]:
        """Open neighborhoods as bitmasks (bit ``u`` set iff ``u`` is a neighbor)."""
        return tuple(sum(1 << u for u in nbrs) for nbrs in self.adjacency)

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        seen = {0}
        stack = [0]
        while stack:
            for u in self.adjacency[stack.pop()]:
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
        return len(seen) == self.n

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges)})"


def _check_vertex(n: int, v: int) -> None:
    if not 0 <= v < n:
        raise ValueError(f"vertex {v} out of range for n={n}")


def new_graph(n: int) -> Graph:
    """Edgeless graph on ``n`` vertices."""
    return Graph(n, tuple(frozenset() for _ in range(n)))


def add_edge(g: Graph, u: int, v: int) -> Graph:
    """Return ``g`` with the edge ``uv`` present (no-op if it already is)."""
    _check_vertex(g.n, u)
    _check_vertex(g.n, v)
    if u == v:
        raise ValueError(f"loop at vertex {u} is not allowed")
    if g.has_edge(u, v):
        return g
    adj = list(g.adjacency)
    adj[u] = adj[u] | {v}
    adj[v] = adj[v] | {u}
    return Graph(g.n, tuple(adj))


def add_edges(g: Graph, edges: Iterable[Sequence[int]]) -> Graph:
    """Return ``G + B``. Every edge in ``B`` must be a non-edge of ``g``."""
    adj = [set(a) for a in g.adjacency]
    for u, v in edges:
        _check_vertex(g.n, u)
        _check_vertex(g.n, v)
        if u == v:
            raise ValueError(f"loop at vertex {u} is not allowed")
        if v in adj[u]:
            raise ValueError(f"edge {edge(u, v)} is already present")
        adj[u].add(v)
        adj[v].add(u)
    return Graph(g.n, tuple(frozenset(a) for a in adj))


def complement_nonedges(g: Graph) -> list[Edge]:
    """All pairs ``(u, v)`` with ``u < v`` that are not edges of ``g``."""
    return [(u, v) for u, v in combinations(range(g.n), 2) if v not in g.adjacency[u]]


def complement(g: Graph) -> Graph:
    return Graph.from_edges(g.n, complement_nonedges(g))


# -- families ---------------------------------------------------------------


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(n), 2))


def path_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("a path needs at least one vertex")
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least three vertices")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)])


def complete_multipartite(parts: Sequence[int]) -> Graph:
    """K_{n_1,...,n_t}; vertices are numbered part by part in the given order."""
    parts = tuple(parts)
    if len(parts) < 2:
        raise ValueError("a complete multipartite graph needs at least two parts")
    if any(s < 1 for s in parts):
        raise ValueError("every part must have at least one vertex")
    owner: list[int] = []
    for i, size in enumerate(parts):
        owner.extend([i] * size)
    n = len(owner)
    return Graph.from_edges(
        n, ((u, v) for u, v in combinations(range(n), 2) if owner[u] != owner[v])
    )


# -- edge-list text format --------------------------------------------------


def parse_edge_list(text: str) -> Graph:
    """Parse the ``n m`` header + ``u v`` lines format. ``#`` lines are comments."""
    rows: list[tuple[int, list[str]]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        rows.append((lineno, line.split()))
    if not rows:
        raise GraphFormatError("missing 'n m' header")

    lineno, header = rows[0]
    n, m = _parse_pair(header, lineno)
    if n < 0 or m < 0:
        raise GraphFormatError(f"line {lineno}: negative count in header")
    body = rows[1:]
    if len(body) != m:
        raise GraphFormatError(f"header declares {m} edges, found {len(body)}")

    seen: set[Edge] = set()
    for lineno, parts in body:
        u, v = _parse_pair(parts, lineno)
        if u == v:
            raise GraphFormatError(f"line {lineno}: loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"line {lineno}: vertex index out of range for n={n}")
        e = edge(u, v)
        if e in seen:
            raise GraphFormatError(f"line {lineno}: duplicate edge {e}")
        seen.add(e)
    return Graph.from_edges(n, seen)


def _parse_pair(parts: list[str], lineno: int) -> tuple[int, int]:
    if len(parts) != 2:
        raise GraphFormatError(f"line {lineno}: expected two integers, got {' '.join(parts)!r}")
    try:
        return int(parts[0]), int(parts[1])
    except ValueError:
        raise GraphFormatError(f"line {lineno}: expected two integers") from None


def serialize_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.num_edges}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"

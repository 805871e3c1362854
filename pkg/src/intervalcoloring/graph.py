"""Immutable simple undirected graphs on vertices 1..vertex_count."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable

Edge = tuple[int, int]


@dataclass(frozen=True)
class Graph:
    """A simple undirected graph: no loops, no multi-edges.

    Vertices are the integers 1..vertex_count.  Edges are stored
    canonically as (i, j) with i < j; the constructor accepts pairs in
    either order and normalizes them.  Instances are immutable and safe
    to share across threads.
    """

    vertex_count: int
    edges: frozenset[Edge] = frozenset()

    def __post_init__(self) -> None:
        if self.vertex_count < 1:
            raise ValueError(f"vertex_count must be >= 1, got {self.vertex_count}")
        normalized = set()
        for pair in self.edges:
            x, y = pair
            if x == y:
                raise ValueError(f"loop edge ({x}, {y}) not allowed")
            if x > y:
                x, y = y, x
            if not (1 <= x and y <= self.vertex_count):
                raise ValueError(
                    f"edge ({x}, {y}) out of range for {self.vertex_count} vertices"
                )
            normalized.add((x, y))
        object.__setattr__(self, "edges", frozenset(normalized))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(1, self.vertex_count + 1)

    @cached_property
    def sorted_edges(self) -> tuple[Edge, ...]:
        return tuple(sorted(self.edges))

    @cached_property
    def _degrees(self) -> tuple[int, ...]:
        counts = [0] * (self.vertex_count + 1)
        for i, j in self.edges:
            counts[i] += 1
            counts[j] += 1
        return tuple(counts)

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        """Neighbor sets indexed by vertex id; index 0 is unused."""
        neighbors: list[set[int]] = [set() for _ in range(self.vertex_count + 1)]
        for i, j in self.edges:
            neighbors[i].add(j)
            neighbors[j].add(i)
        return tuple(frozenset(s) for s in neighbors)

    def _check_vertex(self, x: int) -> None:
        if not 1 <= x <= self.vertex_count:
            raise ValueError(f"vertex {x} out of range 1..{self.vertex_count}")

    def degree(self, x: int) -> int:
        self._check_vertex(x)
        return self._degrees[x]

    @cached_property
    def max_degree(self) -> int:
        return max(self._degrees[1:], default=0)

    def has_edge(self, x: int, y: int) -> bool:
        if x > y:
            x, y = y, x
        return (x, y) in self.edges

    def incident_edges(self, x: int) -> list[Edge]:
        self._check_vertex(x)
        return sorted(
            (min(x, y), max(x, y)) for y in self.adjacency[x]
        )


def complete_graph(m: int) -> Graph:
    """The complete graph K_m on vertices 1..m (all m(m-1)/2 pairs)."""
    if m < 1:
        raise ValueError(f"complete graph needs m >= 1, got {m}")
    return Graph(m, frozenset(combinations(range(1, m + 1), 2)))


def graph_from_edges(vertex_count: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a Graph from any iterable of (possibly unordered) vertex pairs."""
    return Graph(vertex_count, frozenset(tuple(e) for e in edges))


def is_triangle_free(g: Graph) -> bool:
    """True iff no three vertices of g are pairwise adjacent."""
    adj = g.adjacency
    for i, j in g.edges:
        if adj[i] & adj[j]:
            return False
    return True

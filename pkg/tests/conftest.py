"""Shared test helpers: reference oracles and hypothesis strategies."""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, permutations

from hypothesis import strategies as st

from intervalcoloring import EdgeColoring, Graph


def brute_force_exists(g: Graph, t: int) -> bool:
    """Pruning-free reference: does g admit an interval t-coloring?

    Depth-first enumeration of all proper edge colorings (properness is
    part of the definition, not a pruning heuristic), checking the full
    interval condition at every complete assignment with an inline
    definition check.  Deliberately shares no code with the search
    module or the verifier.
    """
    edges = sorted(g.edges)
    num_edges = len(edges)
    vc = g.vertex_count
    at: list[set[int]] = [set() for _ in range(vc + 1)]
    assign: dict[tuple[int, int], int] = {}

    def leaf_ok() -> bool:
        if set(assign.values()) != set(range(1, t + 1)):
            return False
        for x in range(1, vc + 1):
            cols = at[x]
            if cols and max(cols) - min(cols) + 1 != len(cols):
                return False
        return True

    def rec(k: int) -> bool:
        if k == num_edges:
            return leaf_ok()
        u, v = edges[k]
        for c in range(1, t + 1):
            if c in at[u] or c in at[v]:
                continue
            at[u].add(c)
            at[v].add(c)
            assign[(u, v)] = c
            if rec(k + 1):
                return True
            at[u].discard(c)
            at[v].discard(c)
            del assign[(u, v)]
        return False

    return rec(0)


@lru_cache(maxsize=None)
def canonical_graphs_upto(nv_max: int) -> tuple[Graph, ...]:
    """One representative per isomorphism class, all graphs <= nv_max vertices."""
    out: list[Graph] = []
    for nv in range(1, nv_max + 1):
        pairs = list(combinations(range(1, nv + 1), 2))
        maps = [dict(zip(range(1, nv + 1), p)) for p in permutations(range(1, nv + 1))]
        seen: set[tuple] = set()
        for bits in range(1 << len(pairs)):
            edges = [p for k, p in enumerate(pairs) if bits >> k & 1]
            canon = min(
                tuple(sorted((min(m[i], m[j]), max(m[i], m[j])) for i, j in edges))
                for m in maps
            )
            if canon not in seen:
                seen.add(canon)
                out.append(Graph(nv, frozenset(canon)))
    return tuple(out)


def all_labeled_graphs(nv: int) -> list[Graph]:
    """Every labeled graph on exactly nv vertices."""
    pairs = list(combinations(range(1, nv + 1), 2))
    return [
        Graph(nv, frozenset(p for k, p in enumerate(pairs) if bits >> k & 1))
        for bits in range(1 << len(pairs))
    ]


@st.composite
def graphs(draw, min_vertices: int = 1, max_vertices: int = 6):
    nv = draw(st.integers(min_vertices, max_vertices))
    pairs = list(combinations(range(1, nv + 1), 2))
    if pairs:
        edges = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs)))
    else:
        edges = []
    return Graph(nv, frozenset(edges))


@st.composite
def colored_graphs(draw, max_vertices: int = 6, max_span: int = 9):
    """A graph plus an arbitrary total assignment (not necessarily interval)."""
    g = draw(graphs(max_vertices=max_vertices))
    span = draw(st.integers(1, max_span))
    assignment = {e: draw(st.integers(1, span)) for e in sorted(g.edges)}
    return g, EdgeColoring(assignment, span)

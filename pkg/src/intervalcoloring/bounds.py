"""Bounds on the maximum span of an interval edge coloring.

For a graph that admits interval colorings, the *maximum span* is the
largest t for which an interval coloring with colors 1..t exists.  The
functions here evaluate the known closed-form bounds; the reports bundle
them with per-bound applicability so an aggregate view always renders.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, complete_graph, is_triangle_free


def construction_lower_bound(n: int) -> int:
    """Lower bound 3n - 2 for K_2n, witnessed by `construction.construct`."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return 3 * n - 2


def log_lower_bound(n: int) -> int:
    """Lower bound 2n - 1 + floor(log2(2n - 1)) for K_2n.

    The floor-log term uses integer bit length, never floating point,
    so powers of two are exact.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return 2 * n - 1 + ((2 * n - 1).bit_length() - 1)


def general_upper_bound(g: Graph) -> int:
    """Upper bound 2|V| - 3 for any interval-colorable graph with an edge."""
    if g.edge_count == 0:
        raise ValueError("bound requires a graph with at least one edge")
    return 2 * g.vertex_count - 3


def refined_upper_bound(g: Graph) -> int:
    """Upper bound 2|V| - 4 for any interval-colorable graph with |V| >= 3."""
    if g.vertex_count < 3:
        raise ValueError(f"bound requires |V| >= 3, got {g.vertex_count}")
    return 2 * g.vertex_count - 4


def triangle_free_upper_bound(g: Graph) -> int | None:
    """Upper bound |V| - 1 for triangle-free interval-colorable graphs.

    Returns None when g contains a triangle (bound inapplicable).
    """
    if not is_triangle_free(g):
        return None
    return g.vertex_count - 1


@dataclass(frozen=True)
class BoundEntry:
    name: str
    formula: str
    value: int | None
    applicable: bool
    reason: str = ""


@dataclass(frozen=True)
class BoundsReport:
    """All bound values for one graph, lower and upper, with applicability."""

    label: str
    lower: tuple[BoundEntry, ...]
    upper: tuple[BoundEntry, ...]

    @property
    def best_lower(self) -> int | None:
        values = [e.value for e in self.lower if e.applicable]
        return max(values) if values else None

    @property
    def best_upper(self) -> int | None:
        values = [e.value for e in self.upper if e.applicable]
        return min(values) if values else None


def _upper_entries(g: Graph) -> tuple[BoundEntry, ...]:
    if g.vertex_count >= 3:
        refined = BoundEntry("refined", "2|V|-4", refined_upper_bound(g), True)
    else:
        refined = BoundEntry("refined", "2|V|-4", None, False, "requires |V| >= 3")
    if g.edge_count > 0:
        general = BoundEntry("general", "2|V|-3", general_upper_bound(g), True)
    else:
        general = BoundEntry(
            "general", "2|V|-3", None, False, "requires at least one edge"
        )
    tf = triangle_free_upper_bound(g)
    if tf is None:
        triangle = BoundEntry(
            "triangle-free", "|V|-1", None, False, "graph contains a triangle"
        )
    else:
        triangle = BoundEntry("triangle-free", "|V|-1", tf, True)
    return (refined, general, triangle)


def bounds_for_k2n(n: int) -> BoundsReport:
    """Every bound evaluated for the complete graph K_2n."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    lower = (
        BoundEntry("construction", "3n-2", construction_lower_bound(n), True),
        BoundEntry("log2", "2n-1+floor(log2(2n-1))", log_lower_bound(n), True),
    )
    return BoundsReport(f"K_{2 * n}", lower, _upper_entries(complete_graph(2 * n)))


def bounds_for_graph(g: Graph) -> BoundsReport:
    """Upper bounds for an arbitrary graph.

    The closed-form lower bounds apply only to complete graphs of even
    order; when g is one, they are included (marked applicable).
    """
    m = g.vertex_count
    is_even_complete = m % 2 == 0 and g.edge_count == m * (m - 1) // 2
    if is_even_complete:
        n = m // 2
        lower = (
            BoundEntry("construction", "3n-2", construction_lower_bound(n), True),
            BoundEntry("log2", "2n-1+floor(log2(2n-1))", log_lower_bound(n), True),
        )
    else:
        reason = "known lower bounds apply to complete graphs of even order"
        lower = (
            BoundEntry("construction", "3n-2", None, False, reason),
            BoundEntry("log2", "2n-1+floor(log2(2n-1))", None, False, reason),
        )
    label = f"K_{m}" if is_even_complete else f"graph on {m} vertices"
    return BoundsReport(label, lower, _upper_entries(g))

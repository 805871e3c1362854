"""Edge-coloring data model and the gap-free ("interval") coloring verifier.

A coloring with span t is *interval* when it is a proper edge coloring
with colors 1..t, every color in 1..t appears on at least one edge, and
the colors incident to each vertex x form a consecutive block of exactly
degree(x) integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from types import MappingProxyType
from typing import Mapping

from .graph import Edge, Graph


class ViolationKind(Enum):
    NOT_PROPER = "not-proper"
    NOT_CONSECUTIVE = "not-consecutive"
    COLOR_UNUSED = "color-unused"
    COLOR_OUT_OF_RANGE = "color-out-of-range"
    EDGE_UNCOLORED = "edge-uncolored"


@dataclass(frozen=True)
class Violation:
    """One verifier finding, located at a vertex, an edge, or a color."""

    kind: ViolationKind
    vertex: int | None = None
    edge: Edge | None = None
    color: int | None = None

    def __str__(self) -> str:
        where = []
        if self.vertex is not None:
            where.append(f"vertex {self.vertex}")
        if self.edge is not None:
            where.append(f"edge ({self.edge[0]}, {self.edge[1]})")
        if self.color is not None:
            where.append(f"color {self.color}")
        return f"{self.kind.value} at {', '.join(where)}"


@dataclass(frozen=True)
class IntervalReport:
    verdict: bool
    violations: tuple[Violation, ...] = ()

    def __post_init__(self) -> None:
        if self.verdict != (not self.violations):
            raise ValueError("verdict must be true exactly when violations is empty")

    def __bool__(self) -> bool:
        return self.verdict


@dataclass(frozen=True)
class VertexPalette:
    """The sorted distinct colors on the edges incident to one vertex."""

    vertex: int
    colors: tuple[int, ...]


class UncoloredEdgeError(ValueError):
    def __init__(self, edge: Edge):
        self.edge = edge
        super().__init__(f"edge ({edge[0]}, {edge[1]}) has no color")


@dataclass(frozen=True, eq=False)
class EdgeColoring:
    """An edge -> color map together with its declared span.

    Keys must be canonical edges (i, j) with i < j and colors must be
    positive integers.  Colors above span_t are representable (the
    verifier reports them); the container itself is presentation-neutral
    and immutable.
    """

    assignment: Mapping[Edge, int]
    span_t: int

    def __post_init__(self) -> None:
        if self.span_t < 1:
            raise ValueError(f"span_t must be >= 1, got {self.span_t}")
        mapping = dict(self.assignment)
        if mapping:
            if not all(i < j for i, j in mapping):
                raise ValueError("assignment keys must be canonical (i, j) with i < j")
            if min(mapping.values()) < 1:
                raise ValueError("colors must be positive integers")
        object.__setattr__(self, "assignment", MappingProxyType(mapping))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, EdgeColoring):
            return NotImplemented
        return self.span_t == other.span_t and dict(self.assignment) == dict(
            other.assignment
        )

    def __len__(self) -> int:
        return len(self.assignment)

    def color(self, x: int, y: int) -> int | None:
        """Color of edge {x, y} in either vertex order, or None."""
        if x > y:
            x, y = y, x
        return self.assignment.get((x, y))

    def colors_used(self) -> set[int]:
        """The exact set of colors appearing on edges."""
        return set(self.assignment.values())


def reflect(coloring: EdgeColoring) -> EdgeColoring:
    """Map every color c to span_t + 1 - c.

    Interval colorings are closed under this reflection: each vertex
    palette [a, b] becomes [t+1-b, t+1-a].
    """
    t1 = coloring.span_t + 1
    return EdgeColoring(
        {e: t1 - c for e, c in coloring.assignment.items()}, coloring.span_t
    )


def palette(g: Graph, coloring: EdgeColoring, x: int) -> VertexPalette:
    """Sorted distinct colors on the edges incident to x.

    Raises UncoloredEdgeError if some incident edge has no color.
    """
    g._check_vertex(x)
    assignment = coloring.assignment
    colors = set()
    for y in g.adjacency[x]:
        e = (x, y) if x < y else (y, x)
        c = assignment.get(e)
        if c is None:
            raise UncoloredEdgeError(e)
        colors.add(c)
    return VertexPalette(x, tuple(sorted(colors)))


def verify_interval(g: Graph, coloring: EdgeColoring) -> IntervalReport:
    """Check whether `coloring` is an interval coloring of g with span span_t.

    All conditions are evaluated and every failure is reported:

    * edge-uncolored   -- an edge of g has no color;
    * color-out-of-range -- an assigned color lies outside 1..span_t;
    * not-proper       -- two edges at one vertex share a color;
    * not-consecutive  -- the distinct colors at a vertex have a gap
      (skipped for vertices with an uncolored incident edge, which are
      already reported);
    * color-unused     -- some color in 1..span_t is on no edge.

    Never raises; a failing coloring yields verdict False plus the list.
    """
    t = coloring.span_t
    assignment = coloring.assignment
    violations: list[Violation] = []

    incident: list[list[int]] = [[] for _ in range(g.vertex_count + 1)]
    incomplete: set[int] = set()

    if assignment.keys() == g.edges:
        colored_items = assignment.items()
    else:
        for e in sorted(g.edges - assignment.keys()):
            violations.append(Violation(ViolationKind.EDGE_UNCOLORED, edge=e))
            incomplete.update(e)
        colored_items = [(e, assignment[e]) for e in g.edges & assignment.keys()]

    out_of_range: list[tuple[Edge, int]] = []
    for (u, v), c in colored_items:
        incident[u].append(c)
        incident[v].append(c)
        if c > t or c < 1:
            out_of_range.append(((u, v), c))
    violations.extend(
        Violation(ViolationKind.COLOR_OUT_OF_RANGE, edge=e, color=c)
        for e, c in sorted(out_of_range)
    )

    for x in g.vertices():
        colors = incident[x]
        if not colors:
            continue
        distinct = set(colors)
        if len(distinct) != len(colors):
            violations.append(Violation(ViolationKind.NOT_PROPER, vertex=x))
        if x not in incomplete and max(distinct) - min(distinct) + 1 != len(distinct):
            violations.append(Violation(ViolationKind.NOT_CONSECUTIVE, vertex=x))

    used = set()
    for colors in incident[1:]:
        used.update(colors)
    for c in range(1, t + 1):
        if c not in used:
            violations.append(Violation(ViolationKind.COLOR_UNUSED, color=c))

    return IntervalReport(not violations, tuple(violations))

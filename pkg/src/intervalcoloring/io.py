"""Line-based text formats for graphs and colorings.

Graph file::

    p <vertex_count> <edge_count>
    e <i> <j>              # one line per edge, 1-based ids, i < j

Coloring file::

    c <vertex_count> <span_t>
    e <i> <j> <color>      # one line per edge

Tokens are whitespace-separated; blank lines and lines starting with
``#`` are ignored.  Emission is canonical (edges sorted, single trailing
newline) and byte-stable, so emitted files are usable as goldens.
"""

from __future__ import annotations

from .coloring import EdgeColoring
from .graph import Edge, Graph


class FormatError(ValueError):
    """A parse failure with a machine-checkable kind and a 1-based line."""

    def __init__(self, kind: str, message: str, line: int | None = None):
        self.kind = kind
        self.line = line
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(f"{prefix}{message}")


def _content_lines(text: str) -> list[tuple[int, list[str]]]:
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        out.append((lineno, stripped.split()))
    return out


def _int_token(token: str, what: str, lineno: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise FormatError(
            "bad-token", f"{what} must be an integer, got {token!r}", lineno
        ) from None


def _parse_header(
    lines: list[tuple[int, list[str]]], tag: str, second_field: str
) -> tuple[int, int, int]:
    """Return (vertex_count, second_value, header_lineno)."""
    if not lines:
        raise FormatError("missing-header", f"empty input, expected '{tag}' header")
    lineno, tokens = lines[0]
    if tokens[0] != tag:
        raise FormatError(
            "missing-header", f"expected '{tag}' header, got {tokens[0]!r}", lineno
        )
    if len(tokens) != 3:
        raise FormatError(
            "malformed-header",
            f"header needs '{tag} <vertex_count> <{second_field}>'",
            lineno,
        )
    vertex_count = _int_token(tokens[1], "vertex count", lineno)
    second = _int_token(tokens[2], second_field, lineno)
    if vertex_count < 1:
        raise FormatError("malformed-header", "vertex count must be >= 1", lineno)
    return vertex_count, second, lineno


def _parse_endpoints(
    tokens: list[str], lineno: int, vertex_count: int, arity: int
) -> tuple[int, ...]:
    if tokens[0] != "e":
        raise FormatError(
            "unknown-directive", f"expected an 'e' line, got {tokens[0]!r}", lineno
        )
    if len(tokens) != arity + 1:
        raise FormatError(
            "malformed-edge", f"'e' line needs {arity} integer fields", lineno
        )
    values = tuple(_int_token(tok, "edge field", lineno) for tok in tokens[1:])
    i, j = values[0], values[1]
    if not (1 <= i <= vertex_count and 1 <= j <= vertex_count):
        raise FormatError(
            "id-out-of-range",
            f"vertex ids ({i}, {j}) out of range 1..{vertex_count}",
            lineno,
        )
    if i >= j:
        raise FormatError(
            "noncanonical-edge", f"edge ({i}, {j}) must satisfy i < j", lineno
        )
    return values


def parse_graph(text: str) -> Graph:
    """Parse a graph file; all malformations raise FormatError."""
    lines = _content_lines(text)
    vertex_count, edge_count, header_line = _parse_header(lines, "p", "edge_count")
    if edge_count < 0:
        raise FormatError("malformed-header", "edge count must be >= 0", header_line)
    edges: set[Edge] = set()
    for lineno, tokens in lines[1:]:
        i, j = _parse_endpoints(tokens, lineno, vertex_count, 2)
        if (i, j) in edges:
            raise FormatError("duplicate-edge", f"duplicate edge ({i}, {j})", lineno)
        edges.add((i, j))
    if len(edges) != edge_count:
        raise FormatError(
            "count-mismatch",
            f"header declares {edge_count} edges but file has {len(edges)}",
            header_line,
        )
    return Graph(vertex_count, frozenset(edges))


def emit_graph(g: Graph) -> str:
    """Canonical graph-file text for g."""
    lines = [f"p {g.vertex_count} {g.edge_count}"]
    lines.extend(f"e {i} {j}" for i, j in g.sorted_edges)
    return "\n".join(lines) + "\n"


def parse_coloring_with_graph(
    text: str, graph: Graph | None = None
) -> tuple[Graph, EdgeColoring]:
    """Parse a coloring file, returning the graph it colors.

    With `graph` given, the file's edge set must match it exactly
    (unknown-edge / missing-edge errors otherwise).  Without it, the
    graph is reconstructed from the edge lines themselves.
    """
    lines = _content_lines(text)
    vertex_count, span_t, header_line = _parse_header(lines, "c", "span_t")
    if span_t < 1:
        raise FormatError("malformed-header", "span must be >= 1", header_line)
    if graph is not None and graph.vertex_count != vertex_count:
        raise FormatError(
            "graph-mismatch",
            f"file has {vertex_count} vertices, graph has {graph.vertex_count}",
            header_line,
        )
    assignment: dict[Edge, int] = {}
    for lineno, tokens in lines[1:]:
        i, j, color = _parse_endpoints(tokens, lineno, vertex_count, 3)
        if (i, j) in assignment:
            raise FormatError("duplicate-edge", f"duplicate edge ({i}, {j})", lineno)
        if not 1 <= color <= span_t:
            raise FormatError(
                "color-out-of-range",
                f"color {color} outside 1..{span_t}",
                lineno,
            )
        if graph is not None and (i, j) not in graph.edges:
            raise FormatError(
                "unknown-edge", f"edge ({i}, {j}) is not in the graph", lineno
            )
        assignment[(i, j)] = color
    if graph is not None:
        missing = graph.edges - assignment.keys()
        if missing:
            i, j = min(missing)
            raise FormatError(
                "missing-edge",
                f"graph edge ({i}, {j}) has no line in the file",
                header_line,
            )
        resolved = graph
    else:
        resolved = Graph(vertex_count, frozenset(assignment))
    return resolved, EdgeColoring(assignment, span_t)


def parse_coloring(text: str, graph: Graph | None = None) -> EdgeColoring:
    """Parse a coloring file (see parse_coloring_with_graph)."""
    return parse_coloring_with_graph(text, graph)[1]


def emit_coloring(g: Graph, coloring: EdgeColoring) -> str:
    """Canonical coloring-file text; requires every edge of g colored."""
    assignment = coloring.assignment
    lines = [f"c {g.vertex_count} {coloring.span_t}"]
    for i, j in g.sorted_edges:
        c = assignment.get((i, j))
        if c is None:
            raise ValueError(f"edge ({i}, {j}) has no color")
        lines.append(f"e {i} {j} {c}")
    return "\n".join(lines) + "\n"

"""
Edge-list graph file reader.

Format: '#' comment lines, a "vertices L" header, then one "u v" edge per line.
"""

import os

from .rooted_graph import RootedGraph


class GraphParseError(ValueError):
    """Malformed graph text; line_number is 1-based."""

    def __init__(self, message: str, line_number: int):
        super().__init__(f"line {line_number}: {message}")
        self.line_number = line_number


def parse_graph(text: str, name: str = "graph") -> RootedGraph:
    """
    Parse the edge-list graph format.

    Args:
        text: File contents
        name: Label given to the resulting graph

    Returns:
        Validated RootedGraph rooted at vertex 0

    Raises:
        GraphParseError: On a malformed line, out-of-range vertex, duplicate edge or self-loop
    """
    vertices = None
    edges = []
    seen = set()
    last_line = 0

    for line_number, raw in enumerate(text.splitlines(), start=1):
        last_line = line_number
        line = raw.strip()
        if not line or line.startswith('#'):
            continue
        fields = line.split()

        if vertices is None:
            if len(fields) != 2 or fields[0] != 'vertices':
                raise GraphParseError(f"expected header 'vertices L', got '{line}'", line_number)
            try:
                vertices = int(fields[1])
            except ValueError:
                raise GraphParseError(f"vertex count '{fields[1]}' is not an integer", line_number)
            if vertices < 1:
                raise GraphParseError(f"vertex count must be positive, got {vertices}", line_number)
            continue

        if len(fields) != 2:
            raise GraphParseError(f"expected 'u v', got '{line}'", line_number)
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError:
            raise GraphParseError(f"edge '{line}' has non-integer vertices", line_number)

        if u == v:
            raise GraphParseError(f"self-loop on vertex {u}", line_number)
        if not (0 <= u < vertices and 0 <= v < vertices):
            raise GraphParseError(f"vertex out of range in edge ({u}, {v}) for {vertices} vertices", line_number)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphParseError(f"duplicate edge ({u}, {v})", line_number)
        seen.add(key)
        edges.append(key)

    if vertices is None:
        raise GraphParseError("missing 'vertices L' header", max(last_line, 1))

    return RootedGraph(vertices, tuple(edges), name=name)


def load_graph(path: str) -> RootedGraph:
    """
    Read a graph file; the graph is named after the file.

    Raises:
        FileNotFoundError: If the file does not exist
        GraphParseError: If the contents are malformed
    """
    if not os.path.exists(path):
        raise FileNotFoundError(f"Graph file not found: {path}")

    with open(path, 'r', encoding='utf-8') as f:
        text = f.read()

    name = os.path.splitext(os.path.basename(path))[0]
    return parse_graph(text, name=name)

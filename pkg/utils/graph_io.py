"""
Reads and writes graphs as plain-text edge lists.

Two input dialects are accepted:

    # name: path:4        edge list: optional comments, an "n m" header,
    4 3                   then one "u v" pair per line
    1 2
    ...

    c a comment           DIMACS-like: "c" comments, a "p edge n m" header,
    p edge 4 3            then "e u v" lines
    e 1 2
    ...

Output is always the first dialect, with a "# name:" comment when the graph
has a name, so a written file reads back to the same named graph.
"""
import logging
import sys
from pathlib import Path
from typing import Union

from graphs.graph import Graph, GraphInputError, from_edge_list

logger = logging.getLogger(__name__)

NAME_PREFIX = "# name:"


def _ints(tokens: list[str], line_no: int, line: str) -> list[int]:
    try:
        return [int(token) for token in tokens]
    except ValueError:
        raise GraphInputError(f"Line {line_no}: expected integers, got '{line}'") from None


def _parse_dimacs(lines: list[tuple[int, str]]) -> tuple[int, int, list[tuple[int, int]]]:
    header = None
    edges = []
    for line_no, line in lines:
        tokens = line.split()
        if tokens[0] == "p":
            if header is not None:
                raise GraphInputError(f"Line {line_no}: second 'p' header")
            if len(tokens) != 4 or tokens[1] != "edge":
                raise GraphInputError(f"Line {line_no}: expected 'p edge n m', got '{line}'")
            header = tuple(_ints(tokens[2:], line_no, line))
        elif tokens[0] == "e":
            if header is None:
                raise GraphInputError(f"Line {line_no}: edge before the 'p' header")
            if len(tokens) != 3:
                raise GraphInputError(f"Line {line_no}: expected 'e u v', got '{line}'")
            u, v = _ints(tokens[1:], line_no, line)
            edges.append((u, v))
        else:
            raise GraphInputError(f"Line {line_no}: unknown DIMACS line '{line}'")
    if header is None:
        raise GraphInputError("DIMACS input has no 'p edge n m' header")
    return header[0], header[1], edges


def _parse_edge_list(lines: list[tuple[int, str]]) -> tuple[int, int, list[tuple[int, int]]]:
    (header_no, header_line), body = lines[0], lines[1:]
    header = _ints(header_line.split(), header_no, header_line)
    if len(header) != 2:
        raise GraphInputError(f"Line {header_no}: expected the header 'n m', got '{header_line}'")
    edges = []
    for line_no, line in body:
        pair = _ints(line.split(), line_no, line)
        if len(pair) != 2:
            raise GraphInputError(f"Line {line_no}: expected 'u v', got '{line}'")
        edges.append((pair[0], pair[1]))
    return header[0], header[1], edges


def parse_graph_text(text: str, zero_based: bool = False, name: str | None = None) -> Graph:
    """Parses either dialect. ``zero_based`` shifts every endpoint up by one.

    A "# name:" comment overrides ``name``.
    """
    content: list[tuple[int, str]] = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line.lower().startswith(NAME_PREFIX):
            name = line[len(NAME_PREFIX):].strip() or name
            continue
        if not line or line.startswith("#") or line == "c" or line.startswith("c "):
            continue
        content.append((line_no, line))
    if not content:
        raise GraphInputError("Graph input is empty")

    dimacs = content[0][1].split()[0] == "p"
    n, m, edges = _parse_dimacs(content) if dimacs else _parse_edge_list(content)
    if len(edges) != m:
        raise GraphInputError(f"Header announces {m} edge(s) but {len(edges)} were listed")
    if zero_based:
        edges = [(u + 1, v + 1) for u, v in edges]
    logger.debug(f"Parsed {'DIMACS' if dimacs else 'edge-list'} input: n={n}, m={m}, name={name}")
    return from_edge_list(n, edges, name=name)


def read_graph(path: Union[str, Path], zero_based: bool = False) -> Graph:
    """Reads a graph file; ``-`` reads stdin. The file stem names an unnamed graph."""
    if str(path) == "-":
        return parse_graph_text(sys.stdin.read(), zero_based=zero_based)
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise GraphInputError(f"Cannot read graph file {path}: {e.strerror or e}") from e
    return parse_graph_text(text, zero_based=zero_based, name=path.stem)


def format_edge_list(g: Graph) -> str:
    lines = [f"{NAME_PREFIX} {g.name}"] if g.name else []
    lines.append(f"{g.n} {g.edge_count}")
    lines += [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def write_graph(g: Graph, path: Union[str, Path]) -> None:
    """Writes the edge-list dialect; ``-`` writes stdout."""
    text = format_edge_list(g)
    if str(path) == "-":
        sys.stdout.write(text)
        return
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8") as f:
        f.write(text)
    logger.info(f"Wrote {g.name or 'graph'} ({g.n} vertices, {g.edge_count} edges) to {path}")

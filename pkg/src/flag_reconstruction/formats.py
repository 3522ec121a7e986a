"""Text formats: graph6, edge lists and raw simplicial complexes."""

import logging
import re
from collections.abc import Iterator

import networkx as nx

from flag_reconstruction.datamodel.complex import SimplicialComplex
from flag_reconstruction.datamodel.graph import Graph
from flag_reconstruction.datamodel.report import InputFormatOptions
from flag_reconstruction.errors import Graph6FormatError, ParseError
from flag_reconstruction.graphs import build_graph, from_networkx, to_networkx

logger = logging.getLogger(__name__)

GRAPH6_HEADER = ">>graph6<<"
GRAPH6_MAX_ORDER = 62
_OFFSET = 63
_LONG_FORM = 126


def _check_graph6(data: bytes) -> None:
    if not data:
        msg = "Empty graph6 string"
        raise Graph6FormatError(msg)
    bad = [c for c in data if not _OFFSET <= c <= _LONG_FORM]
    if bad:
        msg = f"Byte {bad[0]!r} is outside the printable graph6 range 63..126"
        raise Graph6FormatError(msg)
    if data[0] == _LONG_FORM:
        msg = f"Long-form graph6 (more than {GRAPH6_MAX_ORDER} vertices) is not supported"
        raise Graph6FormatError(msg)

    n = data[0] - _OFFSET
    bits = n * (n - 1) // 2
    expected = -(-bits // 6)
    if len(data) - 1 != expected:
        msg = f"A graph6 string for {n} vertices needs {expected} data bytes, got {len(data) - 1}"
        raise Graph6FormatError(msg)
    padding = 6 * expected - bits
    if expected and (data[-1] - _OFFSET) & ((1 << padding) - 1):
        msg = "Nonzero padding bits at the end of the graph6 string"
        raise Graph6FormatError(msg)


def parse_graph6(text: str | bytes) -> Graph:
    """Decode one short-form graph6 string; vertices are labeled "0".."n-1"."""
    try:
        data = text.encode("ascii") if isinstance(text, str) else text
    except UnicodeEncodeError as e:
        msg = "graph6 strings are plain ASCII"
        raise Graph6FormatError(msg) from e
    data = data.strip()
    data = data.removeprefix(GRAPH6_HEADER.encode())
    _check_graph6(data)
    return from_networkx(nx.from_graph6_bytes(data))


def emit_graph6(g: Graph) -> str:
    """Encode in the graph's own vertex order, without header or newline."""
    if g.order > GRAPH6_MAX_ORDER:
        msg = f"Only graphs with at most {GRAPH6_MAX_ORDER} vertices can be written as graph6"
        raise Graph6FormatError(msg)
    encoded: bytes = nx.to_graph6_bytes(to_networkx(g), header=False)
    return encoded.decode("ascii").rstrip("\n")


_COMMENT = re.compile(r"(?:^|\s)#")


def _content_lines(text: str) -> Iterator[tuple[int, str]]:
    """Nonblank lines with 1-based line numbers.

    A comment starts at a `#` opening the line or following whitespace, so
    labels such as `v#1` are kept whole.
    """
    for number, raw in enumerate(text.splitlines(), start=1):
        line = _COMMENT.split(raw, maxsplit=1)[0].strip()
        if line:
            yield number, line


def _graph6_lines(text: str) -> Iterator[tuple[int, str]]:
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line:
            yield number, line


def parse_graph6_lines(text: str) -> list[Graph]:
    """One graph per nonblank line; errors carry the line number."""
    graphs = []
    for number, line in _graph6_lines(text):
        try:
            graphs.append(parse_graph6(line))
        except Graph6FormatError as e:
            raise ParseError(number, str(e)) from e
    return graphs


def parse_edge_list(text: str) -> Graph:
    """One "u v" pair per line; a line with a single label adds an isolated vertex.

    Vertices are ordered by first appearance and repeated edges collapse.
    `#` starts a comment at the beginning of a line or after whitespace.
    """
    vertices: dict[str, None] = {}
    edges: list[tuple[str, str]] = []
    for number, line in _content_lines(text):
        tokens = line.split()
        if len(tokens) > 2:
            raise ParseError(number, f"expected 'u v', got {len(tokens)} tokens")
        if len(tokens) == 2 and tokens[0] == tokens[1]:
            raise ParseError(number, f"self-loop at vertex {tokens[0]!r}")
        vertices.update(dict.fromkeys(tokens))
        if len(tokens) == 2:
            edges.append((tokens[0], tokens[1]))
    logger.debug("Parsed edge list: %d vertices, %d edge lines", len(vertices), len(edges))
    return build_graph(vertices, edges)


def parse_complex(text: str) -> SimplicialComplex:
    """One maximal simplex per line, as whitespace-separated labels; closed downward."""
    simplices = []
    for number, line in _content_lines(text):
        tokens = line.split()
        if len(set(tokens)) != len(tokens):
            raise ParseError(number, "a vertex is repeated within the simplex")
        simplices.append(tokens)
    return SimplicialComplex.from_simplices(simplices)


def parse_graph(text: str, input_format: InputFormatOptions) -> Graph:
    """Read exactly one graph, in either input format."""
    if input_format == "edges":
        return parse_edge_list(text)
    graphs = parse_graph6_lines(text)
    if len(graphs) != 1:
        msg = f"expected exactly one graph6 line, got {len(graphs)}"
        raise ParseError(1, msg)
    return graphs[0]

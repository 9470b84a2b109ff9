"""graph6 and edge-list graph files."""

from pathlib import Path
from typing import List, Optional, Tuple, Union

import networkx as nx

from ..graph import Graph
from ..utils.errors import GraphFormatError

GRAPH6_HEADER = ">>graph6<<"
FORMATS = ("graph6", "edgelist")
GRAPH6_SUFFIXES = (".g6", ".graph6")
EDGE_LIST_SUFFIXES = (".edges", ".edgelist", ".txt")


def _graph6_order(data: bytes) -> Tuple[int, int]:
    """Order and header width of a graph6 body."""
    if not data:
        raise GraphFormatError("empty graph6 string", position=0)
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        width, start = 8, 2
    else:
        width, start = 4, 1
    if len(data) < width:
        raise GraphFormatError("truncated graph6 order field", position=len(data))
    n = 0
    for byte in data[start:width]:
        n = n << 6 | byte - 63
    return n, width


def parse_graph6(text: str) -> Graph:
    """
    Decode one graph6 string.

    Args:
        text: graph6 text, optionally prefixed by ``>>graph6<<``

    Returns:
        Graph

    Raises:
        GraphFormatError: bad characters or a body of the wrong length; the
            byte position points at the first offending byte
    """
    s = text.strip()
    offset = 0
    if s.startswith(GRAPH6_HEADER):
        offset = len(GRAPH6_HEADER)
        s = s[offset:]
    try:
        data = s.encode("ascii")
    except UnicodeEncodeError as e:
        raise GraphFormatError("non-ASCII character", position=offset + e.start) from None
    for i, byte in enumerate(data):
        if not 63 <= byte <= 126:
            raise GraphFormatError(f"byte {byte} outside 63..126", position=offset + i)
    n, width = _graph6_order(data)
    expected = width + (n * (n - 1) // 2 + 5) // 6
    if len(data) < expected:
        raise GraphFormatError(
            f"truncated: {len(data)} bytes for n={n}, expected {expected}",
            position=offset + len(data),
        )
    if len(data) > expected:
        raise GraphFormatError(f"trailing data after {expected} bytes", position=offset + expected)
    return Graph.from_networkx(nx.from_graph6_bytes(data))


def emit_graph6(g: Graph) -> str:
    """graph6 string of ``g`` without header or newline."""
    return nx.to_graph6_bytes(g.to_networkx(), header=False).decode("ascii").strip()


def _ints(line: str, lineno: int, count: int) -> List[int]:
    fields = line.split()
    if len(fields) != count:
        raise GraphFormatError(f"expected {count} integers, got {len(fields)}", line=lineno)
    try:
        return [int(f) for f in fields]
    except ValueError:
        raise GraphFormatError(f"not an integer in {line.strip()!r}", line=lineno) from None


def parse_edge_list(text: str) -> Graph:
    """
    Decode an edge list: a header line "n m", then m lines "u v".

    Vertices are 0-indexed; everything after '#' on a line is ignored.

    Raises:
        GraphFormatError: malformed line, out-of-range vertex, loop, or an
            edge count that disagrees with the header
    """
    rows: List[Tuple[int, str]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append((lineno, line))
    if not rows:
        raise GraphFormatError("missing header line 'n m'")
    lineno, header = rows[0]
    n, m = _ints(header, lineno, 2)
    if n < 0 or m < 0:
        raise GraphFormatError("n and m must be non-negative", line=lineno)
    if len(rows) - 1 != m:
        last = rows[-1][0]
        raise GraphFormatError(f"header announces {m} edges, found {len(rows) - 1}", line=last)
    adj = [0] * n
    for lineno, line in rows[1:]:
        u, v = _ints(line, lineno, 2)
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"edge {u}-{v} outside 0..{n - 1}", line=lineno)
        if u == v:
            raise GraphFormatError(f"self-loop at {u}", line=lineno)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph.trusted(n, adj)


def emit_edge_list(g: Graph) -> str:
    edges = g.edges()
    lines = [f"{g.n} {len(edges)}"] + [f"{u} {v}" for u, v in edges]
    return "\n".join(lines) + "\n"


def detect_format(text: str, name: Optional[str] = None) -> str:
    """Pick a format from the file suffix, else from the content."""
    if name is not None:
        suffix = Path(name).suffix.lower()
        if suffix in GRAPH6_SUFFIXES:
            return "graph6"
        if suffix in EDGE_LIST_SUFFIXES:
            return "edgelist"
    stripped = (ln.split("#", 1)[0].strip() for ln in text.splitlines())
    first = next((ln for ln in stripped if ln), "")
    if first.startswith(GRAPH6_HEADER) or len(first.split()) == 1:
        return "graph6"
    return "edgelist"


def parse_graph(text: str, fmt: Optional[str] = None) -> Graph:
    """Decode a graph in the given format, or the detected one."""
    fmt = fmt or detect_format(text)
    if fmt == "graph6":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if len(lines) != 1:
            raise GraphFormatError(f"expected one graph6 line, found {len(lines)}")
        return parse_graph6(lines[0])
    if fmt == "edgelist":
        return parse_edge_list(text)
    raise GraphFormatError(f"unknown format {fmt!r}; known: {list(FORMATS)}")


def emit_graph(g: Graph, fmt: str = "graph6") -> str:
    if fmt == "graph6":
        return emit_graph6(g) + "\n"
    if fmt == "edgelist":
        return emit_edge_list(g)
    raise GraphFormatError(f"unknown format {fmt!r}; known: {list(FORMATS)}")


def read_graph(path: Union[str, Path], fmt: Optional[str] = None) -> Graph:
    """Read one graph from a file."""
    path = Path(path)
    text = path.read_text(encoding="utf-8")
    return parse_graph(text, fmt or detect_format(text, path.name))


def write_graph(g: Graph, path: Union[str, Path], fmt: Optional[str] = None) -> None:
    path = Path(path)
    if fmt is None:
        fmt = "edgelist" if path.suffix.lower() in EDGE_LIST_SUFFIXES else "graph6"
    path.write_text(emit_graph(g, fmt), encoding="ascii")

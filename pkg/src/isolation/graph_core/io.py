"""Edge-list and graph6 readers/writers, plus networkx adapters.

Edge-list format: first non-blank line is n, then one "u v" pair per line, 0-indexed.
Blank lines and text after '#' are ignored.
"""

import logging
from pathlib import Path

import networkx as nx

from ..errors import GraphParseError, GraphSizeError
from .graph import Graph

logger = logging.getLogger(__name__)

GRAPH6_MAX_ORDER = 62
GRAPH6_HEADER = ">>graph6<<"


def _tokens(line: str) -> list[tuple[int, str]]:
    """(1-based column, token) pairs of a line with comments stripped."""
    body = line.split("#", 1)[0]
    out: list[tuple[int, str]] = []
    col = 0
    for tok in body.split():
        col = body.index(tok, col)
        out.append((col + 1, tok))
        col += len(tok)
    return out


def _int_token(tok: str, line: int, offset: int) -> int:
    if not tok.isdigit():
        raise GraphParseError(f"malformed token {tok!r}", line=line, offset=offset)
    return int(tok)


def parse_edge_list(text: str) -> Graph:
    n: int | None = None
    adj: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        toks = _tokens(raw)
        if not toks:
            continue
        if n is None:
            if len(toks) != 1:
                raise GraphParseError("expected the vertex count alone", line=lineno, offset=toks[0][0])
            n = _int_token(toks[0][1], lineno, toks[0][0])
            adj = [0] * n
            continue
        if len(toks) != 2:
            col = toks[2][0] if len(toks) > 2 else toks[0][0]
            raise GraphParseError("expected an edge 'u v'", line=lineno, offset=col)
        (cu, tu), (cv, tv) = toks
        u = _int_token(tu, lineno, cu)
        v = _int_token(tv, lineno, cv)
        for col, x in ((cu, u), (cv, v)):
            if x >= n:
                raise GraphParseError(f"vertex {x} out of range 0..{n - 1}", line=lineno, offset=col)
        if u == v:
            raise GraphParseError(f"loop at vertex {u}", line=lineno, offset=cu)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    if n is None:
        raise GraphParseError("empty input: missing vertex count", line=1, offset=1)
    return Graph.from_adjacency(adj, validate=False)


def emit_edge_list(g: Graph) -> str:
    lines = [str(g.n)]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def parse_graph6(text: str, line: int = 1) -> Graph:
    s = text.strip()
    base = 1
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):]
        base += len(GRAPH6_HEADER)
    if not s:
        raise GraphParseError("empty graph6 string", line=line, offset=base)
    for i, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise GraphParseError(f"invalid graph6 byte {ch!r}", line=line, offset=base + i)
    n = ord(s[0]) - 63
    if n > GRAPH6_MAX_ORDER:
        raise GraphSizeError(f"graph6 graphs above {GRAPH6_MAX_ORDER} vertices are not supported")
    pairs = n * (n - 1) // 2
    need = (pairs + 5) // 6
    body = s[1:]
    if len(body) != need:
        raise GraphParseError(
            f"expected {need} data bytes for n={n}, got {len(body)}",
            line=line,
            offset=base + 1 + min(len(body), need),
        )
    bits = 0
    for ch in body:
        bits = (bits << 6) | (ord(ch) - 63)
    width = 6 * need
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits >> (width - 1 - k) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    if width - pairs and bits & ((1 << (width - pairs)) - 1):
        raise GraphParseError("nonzero graph6 padding bits", line=line, offset=base + len(s) - 1)
    return Graph.from_adjacency(adj, validate=False)


def emit_graph6(g: Graph) -> str:
    if g.n > GRAPH6_MAX_ORDER:
        raise GraphSizeError(f"graph6 output is limited to {GRAPH6_MAX_ORDER} vertices")
    out = [chr(g.n + 63)]
    acc = nbits = 0
    for j in range(1, g.n):
        for i in range(j):
            acc = (acc << 1) | (g.adj[j] >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def parse_graph6_lines(text: str) -> list[Graph]:
    return [
        parse_graph6(raw, line=lineno)
        for lineno, raw in enumerate(text.splitlines(), start=1)
        if raw.strip()
    ]


def read_graph(path: str | Path) -> Graph:
    """Read a graph file: `.g6` files hold graph6, anything else is an edge list."""
    path = Path(path)
    text = path.read_text(encoding="utf-8")
    logger.debug("reading graph from %s", path)
    if path.suffix == ".g6":
        return parse_graph6(text.splitlines()[0] if text.strip() else "")
    return parse_edge_list(text)


def graph_id(g: Graph) -> str:
    return emit_graph6(g) if g.n <= GRAPH6_MAX_ORDER else f"n={g.n},m={g.edge_count()}"


def to_networkx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def from_networkx(h: nx.Graph) -> Graph:
    """Nodes are relabelled 0..n-1 in sorted order."""
    nodes = sorted(h.nodes())
    index = {v: i for i, v in enumerate(nodes)}
    return Graph.from_edges(len(nodes), ((index[u], index[v]) for u, v in h.edges()))

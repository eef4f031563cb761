"""graph6 (header-free) and plain adjacency-list text for graphs."""

from __future__ import annotations

from .graph import Graph, GraphError


class FormatError(ValueError):
    def __init__(self, msg, line=None, col=None):
        where = []
        if line is not None:
            where.append(f"line {line}")
        if col is not None:
            where.append(f"column {col}")
        super().__init__(", ".join(where) + ": " + msg if where else msg)
        self.line = line
        self.col = col


def to_graph6(g: Graph) -> str:
    n = g.n
    if n > 62:
        raise GraphError("graph6 short form supports n <= 62")
    out = [chr(63 + n)]
    acc = nbits = 0
    for j in range(1, n):
        for i in range(j):
            acc = acc << 1 | (g.adj[i] >> j & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(63 + acc))
                acc = nbits = 0
    if nbits:
        out.append(chr(63 + (acc << (6 - nbits))))
    return "".join(out)


def from_graph6(text: str, line: int | None = None) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[10:]
    if not s:
        raise FormatError("empty graph6 string", line, 1)
    for col, ch in enumerate(s, 1):
        if not 63 <= ord(ch) <= 126:
            raise FormatError(f"invalid graph6 byte {ch!r}", line, col)
    n = ord(s[0]) - 63
    if n > 62:
        raise FormatError("only the short graph6 size prefix is supported", line, 1)
    need = (n * (n - 1) // 2 + 5) // 6
    if len(s) - 1 != need:
        raise FormatError(f"expected {need} data bytes for n={n}, got {len(s) - 1}",
                          line, len(s) + 1)
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = ord(s[1 + k // 6]) - 63
            if byte >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    return Graph(n, tuple(adj))


def to_edge_list(g: Graph) -> str:
    edges = g.edges()
    lines = [f"{g.n} {len(edges)}"] + [f"{i} {j}" for i, j in edges]
    return "\n".join(lines) + "\n"


def from_edge_list(text: str) -> Graph:
    rows = [(k + 1, ln.split()) for k, ln in enumerate(text.splitlines())
            if ln.strip() and not ln.lstrip().startswith("#")]
    if not rows:
        raise FormatError("empty edge list", 1, 1)
    lineno, head = rows[0]
    try:
        n, m = int(head[0]), int(head[1])
    except (ValueError, IndexError):
        raise FormatError("header must be 'n m'", lineno, 1) from None
    edges = []
    for lineno, parts in rows[1:]:
        try:
            i, j = int(parts[0]), int(parts[1])
        except (ValueError, IndexError):
            raise FormatError("edge line must be 'i j'", lineno, 1) from None
        edges.append((i, j))
    if len(edges) != m:
        raise FormatError(f"header says {m} edges, found {len(edges)}", rows[0][0], 1)
    try:
        return Graph.from_edges(n, edges)
    except GraphError as e:
        raise FormatError(str(e)) from None

"""Bitset graphs: local complementation, independence number, generators.

A graph on ``n <= 32`` vertices is stored as a tuple of ``n`` row masks;
bit ``j`` of ``adj[i]`` is set iff ``{i, j}`` is an edge.  Hot loops in the
orbit code work on the bare tuples; :class:`Graph` wraps them with
validation for the public API.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

MAX_VERTICES = 32


class GraphError(ValueError):
    pass


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if not 0 <= self.n <= MAX_VERTICES:
            raise GraphError(f"vertex count {self.n} outside 0..{MAX_VERTICES}")
        if len(self.adj) != self.n:
            raise GraphError("adjacency length does not match n")
        full = (1 << self.n) - 1
        for i, row in enumerate(self.adj):
            if row & ~full:
                raise GraphError(f"row {i} has bits beyond n")
            if row >> i & 1:
                raise GraphError(f"loop at vertex {i}")
            m = row
            while m:
                low = m & -m
                j = low.bit_length() - 1
                if not self.adj[j] >> i & 1:
                    raise GraphError(f"asymmetric edge {i}-{j}")
                m ^= low

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj = [0] * n
        for i, j in edges:
            if not (0 <= i < n and 0 <= j < n) or i == j:
                raise GraphError(f"bad edge ({i}, {j}) for n={n}")
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        return cls(n, tuple(adj))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, (0,) * n)

    @classmethod
    def complete(cls, n: int) -> "Graph":
        full = (1 << n) - 1
        return cls(n, tuple(full ^ (1 << i) for i in range(n)))

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(self.n) for j in range(i + 1, self.n)
                if self.adj[i] >> j & 1]

    def num_edges(self) -> int:
        return sum(r.bit_count() for r in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> list[int]:
        return bits(self.adj[v])

    def has_edge(self, i: int, j: int) -> bool:
        return bool(self.adj[i] >> j & 1)

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex ``i`` renamed to ``perm[i]``."""
        new = [0] * self.n
        for i in range(self.n):
            row = 0
            for j in bits(self.adj[i]):
                row |= 1 << perm[j]
            new[perm[i]] = row
        return Graph(self.n, tuple(new))

    def __str__(self):
        return f"Graph(n={self.n}, edges={self.edges()})"


def bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def _check_vertex(g: Graph, v: int):
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} out of range for n={g.n}")


# -- local complementation ---------------------------------------------------

def lc_adj(adj: tuple[int, ...], v: int) -> tuple[int, ...]:
    nb = adj[v]
    if nb & (nb - 1) == 0:
        return adj
    new = list(adj)
    m = nb
    while m:
        low = m & -m
        u = low.bit_length() - 1
        new[u] ^= nb ^ low
        m ^= low
    return tuple(new)


def lc(g: Graph, v: int) -> Graph:
    """Complement the subgraph induced by the neighbourhood of ``v``."""
    _check_vertex(g, v)
    return Graph(g.n, lc_adj(g.adj, v))


# -- structural predicates ---------------------------------------------------

def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, tuple(full ^ r ^ (1 << i) for i, r in enumerate(g.adj)))


def min_degree(g: Graph) -> int:
    return min((r.bit_count() for r in g.adj), default=0)


def is_regular(g: Graph) -> bool:
    return len({r.bit_count() for r in g.adj}) <= 1


def components_adj(adj: Sequence[int]) -> list[int]:
    """Connected components as vertex masks, ordered by lowest vertex."""
    n = len(adj)
    left = (1 << n) - 1
    comps = []
    while left:
        seen = left & -left
        frontier = seen
        while frontier:
            low = frontier & -frontier
            frontier ^= low
            new = adj[low.bit_length() - 1] & ~seen
            seen |= new
            frontier |= new
        comps.append(seen)
        left &= ~seen
    return comps


def is_connected_adj(adj: Sequence[int]) -> bool:
    n = len(adj)
    if n <= 1:
        return True
    seen = frontier = 1
    while frontier:
        low = frontier & -frontier
        frontier ^= low
        new = adj[low.bit_length() - 1] & ~seen
        seen |= new
        frontier |= new
    return seen == (1 << n) - 1


def is_connected(g: Graph) -> bool:
    return is_connected_adj(g.adj)


def is_bipartite(g: Graph) -> bool:
    side = [-1] * g.n
    for start in range(g.n):
        if side[start] >= 0:
            continue
        side[start] = 0
        stack = [start]
        while stack:
            u = stack.pop()
            for w in bits(g.adj[u]):
                if side[w] < 0:
                    side[w] = 1 - side[u]
                    stack.append(w)
                elif side[w] == side[u]:
                    return False
    return True


def induced_subgraph_adj(adj: Sequence[int], keep: int) -> tuple[int, ...]:
    """Restrict to the vertices in mask ``keep``, compacting labels in order."""
    verts = bits(keep)
    pos = {v: i for i, v in enumerate(verts)}
    out = []
    for v in verts:
        row = 0
        for w in bits(adj[v] & keep):
            row |= 1 << pos[w]
        out.append(row)
    return tuple(out)


def induced_subgraph(g: Graph, keep: Iterable[int]) -> Graph:
    mask = 0
    for v in keep:
        _check_vertex(g, v)
        mask |= 1 << v
    return Graph(mask.bit_count(), induced_subgraph_adj(g.adj, mask))


def delete_vertex_adj(adj: Sequence[int], v: int) -> tuple[int, ...]:
    low = (1 << v) - 1
    out = []
    for i, r in enumerate(adj):
        if i != v:
            out.append((r & low) | (r >> (v + 1) << v))
    return tuple(out)


def delete_vertex(g: Graph, v: int) -> Graph:
    _check_vertex(g, v)
    return Graph(g.n - 1, delete_vertex_adj(g.adj, v))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    shift = g.n
    return Graph(g.n + h.n, g.adj + tuple(r << shift for r in h.adj))


# -- independence number -----------------------------------------------------

def _max_clique(adj: Sequence[int], cand: int, size: int, best: list[int]):
    # Greedy colouring of cand gives the bound; branch on vertices in reverse
    # colour order (Tomita-style).
    order = []
    colours = []
    uncoloured = cand
    colour = 0
    while uncoloured:
        colour += 1
        avail = uncoloured
        while avail:
            low = avail & -avail
            v = low.bit_length() - 1
            order.append(v)
            colours.append(colour)
            uncoloured ^= low
            avail &= ~adj[v] & ~low
    for k in range(len(order) - 1, -1, -1):
        if size + colours[k] <= best[0]:
            return
        v = order[k]
        sub = cand & adj[v]
        if sub:
            _max_clique(adj, sub, size + 1, best)
        elif size + 1 > best[0]:
            best[0] = size + 1
        cand &= ~(1 << v)


def independence_number_adj(adj: Sequence[int]) -> int:
    n = len(adj)
    if n == 0:
        return 0
    full = (1 << n) - 1
    comp = [full ^ r ^ (1 << i) for i, r in enumerate(adj)]
    best = [0]
    _max_clique(comp, full, 0, best)
    return best[0]


def independence_number(g: Graph) -> int:
    """Exact alpha(G): branch-and-bound max clique on the complement, with a
    greedy clique cover of G bounding each branch."""
    return independence_number_adj(g.adj)


def maximum_independent_set(g: Graph) -> list[int]:
    target = independence_number(g)
    # Greedy extension with feasibility re-check keeps this simple and exact.
    chosen = 0
    alive = (1 << g.n) - 1
    for v in range(g.n):
        if not alive >> v & 1:
            continue
        rest = alive & ~g.adj[v] & ~(1 << v)
        if 1 + chosen.bit_count() + independence_number_adj(
                induced_subgraph_adj(g.adj, rest)) == target:
            chosen |= 1 << v
            alive = rest
    return bits(chosen)


def is_independent(g: Graph, verts: Iterable[int]) -> bool:
    mask = 0
    for v in verts:
        _check_vertex(g, v)
        mask |= 1 << v
    return all(not (g.adj[v] & mask) for v in bits(mask))


# -- generators --------------------------------------------------------------

def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def circulant(n: int, connections: Iterable[int]) -> Graph:
    adj = [0] * n
    for c in connections:
        if not 1 <= c <= n // 2:
            raise GraphError(f"offset {c} outside 1..{n // 2}")
        for i in range(n):
            j = (i + c) % n
            adj[i] |= 1 << j
            adj[j] |= 1 << i
    return Graph(n, tuple(adj))


def nested_clique(sizes: Sequence[int]) -> Graph:
    """``sizes = [k, m, ...]`` builds a k-clique of m-cliques of ...

    The last entry is the innermost clique.  Each outer level takes
    ``sizes[0]`` copies of the inner graph (blocks of ``b`` vertices) and
    joins every pair of blocks ``p < q`` by the perfect matching
    ``(p, (q - 1 + r) % b) -- (q, (p + r) % b)``, ``r = 0..b-1``, so the
    result is regular of degree ``sum(s - 1)``.
    """
    sizes = list(sizes)
    if not sizes:
        raise GraphError("need at least one clique size")
    if any(s < 2 for s in sizes):
        raise GraphError("clique sizes must be >= 2")
    total = 1
    for s in sizes:
        total *= s
    if total > MAX_VERTICES:
        raise GraphError(f"{total} vertices exceeds {MAX_VERTICES}")
    g = Graph.complete(sizes[-1])
    for k in reversed(sizes[:-1]):
        b = g.n
        edges = []
        for p in range(k):
            edges += [(p * b + i, p * b + j) for i, j in g.edges()]
        for p in range(k):
            for q in range(p + 1, k):
                for r in range(b):
                    edges.append((p * b + (q - 1 + r) % b, q * b + (p + r) % b))
        g = Graph.from_edges(k * b, edges)
    return g


def wheel(n: int) -> Graph:
    """Hub 0 joined to the cycle 1..n-1."""
    rim = [(i, i % (n - 1) + 1) for i in range(1, n)]
    return Graph.from_edges(n, rim + [(0, i) for i in range(1, n)])

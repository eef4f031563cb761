"""Canonical labelling by colour refinement plus individualisation search.

The certificate of a graph is the minimum, over all leaves of the search
tree, of the integer ``sum(row_i << (i * n))`` where ``row_i`` is the
relabelled adjacency row of canonical vertex ``i``.  Automorphisms found as
ties between leaves (and twin transpositions known up front) prune
equivalent branches.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph


@dataclass(frozen=True)
class CanonicalGraph:
    graph: Graph
    cert: bytes

    @property
    def n(self):
        return self.graph.n


def _refine(adj, cells, n):
    # cells: list of vertex lists.  Iterated 1-dimensional colour refinement;
    # new cells are ordered by their neighbour-count signature so the result
    # depends only on the input ordered partition, not on labels.
    while len(cells) < n:
        masks = []
        for c in cells:
            m = 0
            for v in c:
                m |= 1 << v
            masks.append(m)
        out = []
        split = False
        for c in cells:
            if len(c) == 1:
                out.append(c)
                continue
            groups = {}
            for v in c:
                a = adj[v]
                sig = tuple([(a & m).bit_count() for m in masks])
                groups.setdefault(sig, []).append(v)
            if len(groups) == 1:
                out.append(c)
            else:
                split = True
                for sig in sorted(groups):
                    out.append(groups[sig])
        cells = out
        if not split:
            break
    return cells


def _twin_generators(adj, n):
    gens = []
    for key_fn in (lambda v: adj[v], lambda v: adj[v] | 1 << v):
        classes = {}
        for v in range(n):
            classes.setdefault(key_fn(v), []).append(v)
        for cls in classes.values():
            for a, b in zip(cls, cls[1:]):
                perm = list(range(n))
                perm[a], perm[b] = b, a
                gens.append(tuple(perm))
    return gens


def _orbit_reps(cell, gens):
    parent = {v: v for v in cell}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in gens:
        for v in cell:
            w = g[v]
            if w in parent:
                rv, rw = find(v), find(w)
                if rv != rw:
                    if rv < rw:
                        parent[rw] = rv
                    else:
                        parent[rv] = rw
    return parent, find


def canonical_key(adj) -> tuple[int, tuple[int, ...]]:
    """Return ``(cert_int, canonical_adj)`` for an adjacency tuple.

    ``cert_int`` determines the graph completely for a fixed ``n``, so it
    can key dictionaries of same-order graphs directly.
    """
    n = len(adj)
    if n <= 1:
        return 0, tuple(adj)
    cells = _refine(adj, [list(range(n))], n)
    if len(cells) == n:
        perm = [c[0] for c in cells]
        return _leaf(adj, perm, n)

    best = [None, None, None]  # cert, rows, perm
    gens = _twin_generators(adj, n)

    def search(cells, prefix):
        if len(cells) == n:
            perm = [c[0] for c in cells]
            cert, rows = _leaf(adj, perm, n)
            if best[0] is None or cert < best[0]:
                best[0], best[1], best[2] = cert, rows, perm
            elif cert == best[0]:
                gamma = [0] * n
                for a, b in zip(best[2], perm):
                    gamma[a] = b
                gens.append(tuple(gamma))
            return
        idx = 0
        while len(cells[idx]) == 1:
            idx += 1
        cell = cells[idx]
        done = []
        for v in cell:
            if done:
                fixing = [g for g in gens if all(g[p] == p for p in prefix)]
                if fixing:
                    _, find = _orbit_reps(cell, fixing)
                    rv = find(v)
                    if any(find(d) == rv for d in done):
                        continue
            rest = [w for w in cell if w != v]
            child = cells[:idx] + [[v], rest] + cells[idx + 1:]
            search(_refine(adj, child, n), prefix + [v])
            done.append(v)

    search(cells, [])
    return best[0], best[1]


def _leaf(adj, perm, n):
    inv = [0] * n
    for i, v in enumerate(perm):
        inv[v] = i
    rows = []
    cert = 0
    shift = 0
    for v in perm:
        a = adj[v]
        r = 0
        while a:
            low = a & -a
            r |= 1 << inv[low.bit_length() - 1]
            a ^= low
        rows.append(r)
        cert |= r << shift
        shift += n
    return cert, tuple(rows)


def cert_bytes(n: int, cert: int) -> bytes:
    return bytes([n]) + cert.to_bytes((n * n + 7) // 8, "big")


def canonical_form(g: Graph) -> CanonicalGraph:
    cert, rows = canonical_key(g.adj)
    return CanonicalGraph(Graph(g.n, rows), cert_bytes(g.n, cert))


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.num_edges() != h.num_edges():
        return False
    return canonical_key(g.adj)[0] == canonical_key(h.adj)[0]

"""log2 PAR_IHN of a quadratic from the interlace-degree recursion.

    e(G) = max(e(G - u), e(G^u - u), e(G^(u v u) - u))   for an edge uv
    e(G) = 1 + e(G - u)                                   for isolated u
    e(empty) = 0
"""

from __future__ import annotations

import random
import threading
from typing import Callable

from .canon import canonical_key
from .graph import Graph, delete_vertex_adj, lc_adj

PivotPolicy = Callable[[tuple[int, ...]], tuple[int, int]]


def lowest_pivot(adj):
    """u = 0; v = lowest neighbour of u (or -1 if u is isolated)."""
    nb = adj[0]
    return 0, ((nb & -nb).bit_length() - 1) if nb else -1


def random_pivot(rng: random.Random) -> PivotPolicy:
    def choose(adj):
        u = rng.randrange(len(adj))
        nb = adj[u]
        if not nb:
            return u, -1
        vs = [j for j in range(len(adj)) if nb >> j & 1]
        return u, rng.choice(vs)
    return choose


class InterlaceDegreeMemo:
    """Certificate-keyed cache of recursion values, shared across queries."""

    def __init__(self):
        self._data: dict[tuple[int, int], int] = {}
        self._lock = threading.Lock()

    def get(self, key):
        return self._data.get(key)

    def put(self, key, value):
        with self._lock:
            return self._data.setdefault(key, value)

    def __len__(self):
        return len(self._data)


_MEMO = InterlaceDegreeMemo()


def _rec(adj, pivot, memo):
    n = len(adj)
    if n == 0:
        return 0
    if n == 1:
        return 1
    key = None
    if memo is not None:
        key = (n, canonical_key(adj)[0])
        hit = memo.get(key)
        if hit is not None:
            return hit
    u, v = pivot(adj)
    if v < 0:
        val = 1 + _rec(delete_vertex_adj(adj, u), pivot, memo)
    else:
        gu = lc_adj(adj, u)
        guvu = lc_adj(lc_adj(gu, v), u)
        val = max(_rec(delete_vertex_adj(adj, u), pivot, memo),
                  _rec(delete_vertex_adj(gu, u), pivot, memo),
                  _rec(delete_vertex_adj(guvu, u), pivot, memo))
    if memo is not None:
        memo.put(key, val)
    return val


def log2_par_recursive(g: Graph, pivot: PivotPolicy | None = None,
                       memo: InterlaceDegreeMemo | None = _MEMO) -> int:
    """Exponent e with PAR_IHN = 2^e for the quadratic function of ``g``.

    With a custom pivot policy pass ``memo=None`` so cached values from the
    default policy do not mask pivot dependence.
    """
    return _rec(tuple(g.adj), pivot or lowest_pivot, memo)

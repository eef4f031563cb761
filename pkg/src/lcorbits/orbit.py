"""LC orbits modulo isomorphism and classification of self-dual GF(4) codes.

Connected orbits on ``n`` vertices are found by extending one representative
of every connected orbit on ``n - 1`` vertices by a new vertex joined to each
nonempty vertex subset.  This reaches every orbit: a connected graph has a
non-cut vertex ``v``, and LC operations at the other vertices act on
``G - v`` exactly as they do on the smaller graph, so ``G`` is LC-equivalent
to some extension of the representative of ``[G - v]``.
"""

from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations_with_replacement
from math import comb
from typing import Callable, Iterable, Sequence

from .canon import CanonicalGraph, canonical_key, cert_bytes
from .codes import graph_profile
from .graph import (Graph, components_adj, independence_number_adj,
                    induced_subgraph_adj, is_connected_adj, lc_adj)

log = logging.getLogger(__name__)

# Default ceiling for enumerate_orbits without long_run; n = 10 takes hours.
MAX_N_DEFAULT = 9
MAX_N_LONG = 12


class BudgetError(RuntimeError):
    """Raised when a request needs the long-run flag."""


@dataclass(frozen=True)
class OrbitRecord:
    n: int
    rep: CanonicalGraph
    orbit_size: int
    distance: int
    lam: int
    weight_dist: tuple[int, ...]
    connected: bool

    @property
    def log2_par(self) -> int:
        return self.lam

    @property
    def par_ihn(self) -> int:
        return 1 << self.lam


@dataclass
class ClassificationTable:
    n: int
    i_n: int
    t_n: int
    by_distance: dict[int, int] = field(default_factory=dict)
    lambda_range: dict[int, tuple[int, int]] = field(default_factory=dict)
    par_hist: dict[int, int] = field(default_factory=dict)


# -- single orbits -----------------------------------------------------------

def orbit_members(adj: Sequence[int]) -> dict[int, tuple[int, ...]]:
    """LC closure of a graph: certificate -> canonical adjacency."""
    key, rows = canonical_key(tuple(adj))
    members = {key: rows}
    stack = [rows]
    n = len(adj)
    while stack:
        a = stack.pop()
        for v in range(n):
            nb = a[v]
            if nb & (nb - 1) == 0:
                continue
            k, r = canonical_key(lc_adj(a, v))
            if k not in members:
                members[k] = r
                stack.append(r)
    return members


def lc_orbit(g: Graph) -> list[CanonicalGraph]:
    """All non-isomorphic members of the LC orbit, sorted by certificate."""
    members = orbit_members(g.adj)
    return [CanonicalGraph(Graph(g.n, members[k]), cert_bytes(g.n, k))
            for k in sorted(members)]


def orbit_certs(g: Graph) -> set[bytes]:
    return {cert_bytes(g.n, k) for k in orbit_members(g.adj)}


def lambda_of_members(members: Iterable[tuple[int, ...]]) -> int:
    return max(independence_number_adj(a) for a in members)


def lam(g: Graph) -> int:
    """Largest independence number over the LC orbit of ``g``."""
    if g.n == 0:
        return 0
    return lambda_of_members(orbit_members(g.adj).values())


def _record(n, members, connected=True) -> OrbitRecord:
    key = min(members)
    rows = members[key]
    g = Graph(n, rows)
    prof = graph_profile(g)
    return OrbitRecord(
        n=n,
        rep=CanonicalGraph(g, cert_bytes(n, key)),
        orbit_size=len(members),
        distance=prof.distance,
        lam=lambda_of_members(members.values()),
        weight_dist=prof.weight_dist,
        connected=connected,
    )


def orbit_record(g: Graph) -> OrbitRecord:
    if g.n == 0:
        raise ValueError("empty graph has no orbit record")
    members = orbit_members(g.adj)
    if is_connected_adj(g.adj):
        return _record(g.n, members, True)
    # Disconnected: combine the component orbits.
    parts = [orbit_record(Graph(m.bit_count(), induced_subgraph_adj(g.adj, m)))
             for m in components_adj(g.adj)]
    rec = combine_records(parts)
    assert rec.orbit_size == len(members)
    return rec


# -- classification ----------------------------------------------------------

def _check_budget(n, long_run):
    if n > MAX_N_LONG:
        raise BudgetError(f"n={n} exceeds the supported maximum {MAX_N_LONG}")
    if n > MAX_N_DEFAULT and not long_run:
        raise BudgetError(
            f"n={n} needs --long-run (hours of compute); default limit is "
            f"{MAX_N_DEFAULT}")


def extend_level(parent_reps: Sequence[tuple[int, ...]], n: int,
                 progress: Callable[[int, int, int], None] | None = None
                 ) -> list[dict[int, tuple[int, ...]]]:
    """Connected orbits on ``n`` vertices from representatives on ``n - 1``.

    Each orbit is returned as its member map, sorted by least certificate.
    """
    seen: set[int] = set()
    orbits = []
    new_bit = 1 << (n - 1)
    for idx, rows in enumerate(parent_reps):
        for sub in range(1, new_bit):
            adj = list(rows) + [sub]
            m = sub
            while m:
                low = m & -m
                adj[low.bit_length() - 1] |= new_bit
                m ^= low
            key, _ = canonical_key(tuple(adj))
            if key in seen:
                continue
            members = orbit_members(tuple(adj))
            seen.update(members)
            orbits.append(members)
        if progress:
            progress(n, idx + 1, len(parent_reps))
    orbits.sort(key=min)
    return orbits


def classify_connected(
    n_max: int,
    long_run: bool = False,
    progress: Callable[[int, int, int], None] | None = None,
) -> dict[int, list[dict[int, tuple[int, ...]]]]:
    """Member maps of every connected LC orbit for ``n = 1..n_max``.

    ``progress(n, done_parents, total_parents)`` is called after each parent
    representative has been extended.
    """
    _check_budget(n_max, long_run)
    out: dict[int, list[dict[int, tuple[int, ...]]]] = {}
    if n_max >= 1:
        out[1] = [{0: (0,)}]
    for n in range(2, n_max + 1):
        reps = [m[min(m)] for m in out[n - 1]]
        out[n] = extend_level(reps, n, progress)
        log.info("n=%d: %d connected orbits", n, len(out[n]))
    return out


def records_for_level(n: int, orbits: Sequence[dict[int, tuple[int, ...]]],
                      threads: int = 1) -> list[OrbitRecord]:
    """Orbit records for one level; order follows ``orbits``."""
    if threads <= 1 or len(orbits) < 2 * threads:
        return [_record(n, m) for m in orbits]
    from concurrent.futures import ProcessPoolExecutor
    with ProcessPoolExecutor(threads) as pool:
        return list(pool.map(_record, [n] * len(orbits), orbits,
                             chunksize=max(1, len(orbits) // (4 * threads))))


def iter_levels(n_max: int, long_run: bool = False, progress=None,
                resume: dict[int, list[OrbitRecord]] | None = None,
                threads: int = 1):
    """Yield ``(n, connected records)`` level by level.

    Levels present in ``resume`` are passed through unchanged; the first
    missing level is extended from the stored representatives of the one
    below, so an interrupted run restarts at level granularity.
    """
    _check_budget(n_max, long_run)
    resume = resume or {}
    prev_reps = None
    for n in range(1, n_max + 1):
        have = [r for r in resume.get(n, []) if r.connected]
        if have:
            recs = sorted(have, key=lambda r: r.rep.cert)
        else:
            if n == 1:
                orbits = [{0: (0,)}]
            else:
                orbits = extend_level(prev_reps, n, progress)
            recs = records_for_level(n, orbits, threads)
            log.info("n=%d: %d connected orbits", n, len(recs))
        prev_reps = [r.rep.graph.adj for r in recs]
        yield n, recs


def enumerate_orbits(n: int, connected_only: bool = True,
                     long_run: bool = False, progress=None) -> list[OrbitRecord]:
    """One record per LC orbit on ``n`` vertices, sorted by certificate."""
    return enumerate_all(n, connected_only, long_run, progress)[n]


def enumerate_all(n_max: int, connected_only: bool = True,
                  long_run: bool = False, progress=None, threads: int = 1
                  ) -> dict[int, list[OrbitRecord]]:
    conn = dict(iter_levels(n_max, long_run, progress, threads=threads))
    if connected_only:
        return conn
    return {n: sorted(conn[n] + decomposable_records(n, conn),
                      key=lambda r: r.rep.cert)
            for n in conn}


def combine_records(parts: Sequence[OrbitRecord]) -> OrbitRecord:
    """Orbit record of a disjoint union of connected orbits.

    LC acts on each component independently, so members up to isomorphism
    are multisets of component members: a component orbit of size ``s``
    used ``k`` times contributes ``C(s + k - 1, k)`` choices.
    """
    parts = sorted(parts, key=lambda r: (r.n, r.rep.cert))
    adj: tuple[int, ...] = ()
    for r in parts:
        adj = adj + tuple(x << len(adj) for x in r.rep.graph.adj)
    n = len(adj)
    key, rows = canonical_key(adj)
    size = 1
    for rec, k in Counter(parts).items():
        size *= comb(rec.orbit_size + k - 1, k)
    wd = [1]
    for r in parts:
        nxt = [0] * (len(wd) + r.n)
        for i, x in enumerate(wd):
            for j, y in enumerate(r.weight_dist):
                nxt[i + j] += x * y
        wd = nxt
    g = Graph(n, rows)
    return OrbitRecord(
        n=n,
        rep=CanonicalGraph(g, cert_bytes(n, key)),
        orbit_size=size,
        distance=min(r.distance for r in parts),
        lam=sum(r.lam for r in parts),
        weight_dist=tuple(wd),
        connected=len(parts) == 1,
    )


def _partitions(n, max_part=None):
    if max_part is None:
        max_part = n
    if n == 0:
        yield []
        return
    for p in range(min(n, max_part), 0, -1):
        for rest in _partitions(n - p, p):
            yield [p] + rest


def decomposable_records(n: int, conn: dict[int, list[OrbitRecord]]
                         ) -> list[OrbitRecord]:
    out = []
    for parts in _partitions(n):
        if len(parts) == 1:
            continue
        counts = Counter(parts)
        choices = [list(combinations_with_replacement(conn[size], k))
                   for size, k in sorted(counts.items())]
        for combo in _product(choices):
            out.append(combine_records([r for grp in combo for r in grp]))
    return out


def _product(lists):
    if not lists:
        yield ()
        return
    for head in lists[0]:
        for tail in _product(lists[1:]):
            yield (head,) + tail


def euler_transform(i: Sequence[int]) -> list[int]:
    """Multiset counts t_n from connected counts i_n (both indexed from 1)."""
    a = [0] + list(i)
    n_max = len(i)
    c = [0] * (n_max + 1)
    for k in range(1, n_max + 1):
        c[k] = sum(d * a[d] for d in range(1, k + 1) if k % d == 0)
    b = [1] + [0] * n_max
    for k in range(1, n_max + 1):
        b[k] = (c[k] + sum(c[j] * b[k - j] for j in range(1, k))) // k
    return b[1:]


def capital_lambda(n: int, records: Sequence[OrbitRecord] | None = None,
                   long_run: bool = False) -> int:
    if records is None:
        records = enumerate_orbits(n, long_run=long_run)
    return min(r.lam for r in records if r.connected and r.n == n)


def tables(records: dict[int, list[OrbitRecord]]) -> list[ClassificationTable]:
    """Per-n counts, distance histogram, lambda range per distance, PAR
    histogram.  ``records[n]`` must hold the connected orbits of each n."""
    n_max = max(records)
    i_seq = [sum(1 for r in records.get(n, []) if r.connected)
             for n in range(1, n_max + 1)]
    t_seq = euler_transform(i_seq)
    out = []
    for n in range(1, n_max + 1):
        conn = [r for r in records.get(n, []) if r.connected]
        tab = ClassificationTable(n, i_seq[n - 1], t_seq[n - 1])
        for r in conn:
            tab.by_distance[r.distance] = tab.by_distance.get(r.distance, 0) + 1
            lo, hi = tab.lambda_range.get(r.distance, (r.lam, r.lam))
            tab.lambda_range[r.distance] = (min(lo, r.lam), max(hi, r.lam))
            tab.par_hist[r.par_ihn] = tab.par_hist.get(r.par_ihn, 0) + 1
        tab.by_distance = dict(sorted(tab.by_distance.items()))
        tab.lambda_range = dict(sorted(tab.lambda_range.items()))
        tab.par_hist = dict(sorted(tab.par_hist.items()))
        out.append(tab)
    return out


# Extremal codes named in the literature; not derived here.
EXTREMAL = {(6, 4), (12, 6), (20, 8)}

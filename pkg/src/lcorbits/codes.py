"""Self-dual additive codes over GF(4) in split binary form.

An element ``x = a + w*b`` of GF(4) = {0, 1, w, w^2} is held as the bit pair
``(a, b)``; a length-n vector is a pair of n-bit masks.  The trace inner
product then becomes the symplectic form ``a(u).b(v) + b(u).a(v)`` mod 2.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graph import Graph

MAX_PROFILE_N = 24

_CHARS = {(0, 0): "0", (1, 0): "1", (0, 1): "w", (1, 1): "W"}
_PARSE = {"0": (0, 0), "1": (1, 0), "w": (0, 1), "W": (1, 1)}


class CodeError(ValueError):
    pass


class MatrixParseError(CodeError):
    def __init__(self, msg, line, col):
        super().__init__(f"line {line}, column {col}: {msg}")
        self.line = line
        self.col = col


@dataclass(frozen=True)
class Gf4Vector:
    a: int
    b: int
    n: int

    def __post_init__(self):
        full = (1 << self.n) - 1
        if self.a & ~full or self.b & ~full:
            raise CodeError("bits set beyond vector length")

    def __getitem__(self, i):
        return _CHARS[(self.a >> i & 1, self.b >> i & 1)]

    def weight(self) -> int:
        return (self.a | self.b).bit_count()

    def __add__(self, other):
        if self.n != other.n:
            raise CodeError("length mismatch")
        return Gf4Vector(self.a ^ other.a, self.b ^ other.b, self.n)

    def __str__(self):
        return "".join(self[i] for i in range(self.n))

    @classmethod
    def parse(cls, text: str) -> "Gf4Vector":
        a = b = 0
        for i, ch in enumerate(text):
            if ch not in _PARSE:
                raise CodeError(f"bad GF(4) symbol {ch!r}")
            x, y = _PARSE[ch]
            a |= x << i
            b |= y << i
        return cls(a, b, len(text))


def trace_inner_product(u: Gf4Vector, v: Gf4Vector) -> int:
    """sum_i tr(u_i * conj(v_i)), computed as the symplectic form."""
    if u.n != v.n:
        raise CodeError(f"length mismatch: {u.n} vs {v.n}")
    return ((u.a & v.b).bit_count() + (u.b & v.a).bit_count()) & 1


@dataclass(frozen=True)
class CodeProfile:
    distance: int
    weight_dist: tuple[int, ...]


@dataclass(frozen=True)
class AdditiveCode:
    n: int
    gens: tuple[Gf4Vector, ...]

    def __post_init__(self):
        if len(self.gens) != self.n:
            raise CodeError(f"need {self.n} generators, got {len(self.gens)}")
        if any(g.n != self.n for g in self.gens):
            raise CodeError("generator length mismatch")

    def is_self_orthogonal(self) -> bool:
        return all(trace_inner_product(u, v) == 0
                   for i, u in enumerate(self.gens) for v in self.gens[i:])

    def binary_rank(self) -> int:
        return _gf2_rank([g.a | g.b << self.n for g in self.gens])

    def is_self_dual(self) -> bool:
        return self.is_self_orthogonal() and self.binary_rank() == self.n

    def to_text(self) -> str:
        return "\n".join(str(g) for g in self.gens)

    @classmethod
    def from_rows(cls, rows) -> "AdditiveCode":
        gens = tuple(Gf4Vector.parse(r) for r in rows)
        return cls(len(gens), gens)


def _gf2_rank(rows):
    rows = list(rows)
    rank = 0
    for i in range(len(rows)):
        r = rows[i]
        if not r:
            continue
        low = r & -r
        rank += 1
        for j in range(i + 1, len(rows)):
            if rows[j] & low:
                rows[j] ^= r
    return rank


def parse_matrix(text: str) -> AdditiveCode:
    """Parse n lines of n symbols from {0, 1, w, W}; W stands for w^2."""
    lines = [ln.strip() for ln in text.splitlines()]
    numbered = [(k + 1, ln) for k, ln in enumerate(lines)
                if ln and not ln.startswith("#")]
    if not numbered:
        raise MatrixParseError("empty matrix", 1, 1)
    n = len(numbered)
    gens = []
    for lineno, ln in numbered:
        ln = ln.replace(" ", "")
        for col, ch in enumerate(ln, 1):
            if ch not in _PARSE:
                raise MatrixParseError(f"bad symbol {ch!r}", lineno, col)
        if len(ln) != n:
            raise MatrixParseError(f"expected {n} symbols, got {len(ln)}",
                                   lineno, len(ln) + 1)
        gens.append(Gf4Vector.parse(ln))
    return AdditiveCode(n, tuple(gens))


def code_from_graph(g: Graph) -> AdditiveCode:
    """Generator matrix Gamma + w*I."""
    return AdditiveCode(g.n, tuple(Gf4Vector(g.adj[i], 1 << i, g.n)
                                   for i in range(g.n)))


def to_graph_form(c: AdditiveCode) -> tuple[Graph, AdditiveCode]:
    """Reduce a self-dual code to an equivalent graph-form code.

    Works on the binary picture ``[A | B]``.  Row-reduce so the rows with
    zero B-part have A-parts in reduced echelon form; swapping a <-> b on
    those pivot coordinates makes B invertible.  Then ``B^-1 [A | B]`` is
    ``[Gamma | I]``; diagonal ones of Gamma are removed by the shear
    ``a -> a + b`` on that coordinate.  Both coordinate maps preserve the
    trace form, and row operations preserve the code.
    """
    if not c.is_self_dual():
        raise CodeError("input code is not self-dual")
    n = c.n
    full = (1 << n) - 1
    rows = [g.a | g.b << n for g in c.gens]

    # Rows that end up with B == 0 have independent A-parts; their echelon
    # pivots are the coordinates to swap.
    b_piv, rest = _eliminate(rows, range(n, 2 * n))
    a_piv, left = _eliminate(rest, range(n))
    assert not left, "self-dual code must have a full-rank [A|B]"
    swap = 0
    for col, _ in a_piv:
        swap |= 1 << col
    rows = [r for _, r in b_piv] + [r for _, r in a_piv]
    rows = [_swap_coords(r, swap, n) for r in rows]

    # Gauss-Jordan on B; the pivot for coordinate i lands in row i.
    piv, left = _eliminate(rows, range(n, 2 * n))
    assert not left
    by_col = dict(piv)
    rows = [by_col[n + i] for i in range(n)]
    rows = [(r & full, r >> n) for r in rows]
    adj = tuple(a & ~(1 << i) for i, (a, _) in enumerate(rows))
    g = Graph(n, adj)
    return g, code_from_graph(g)


def _eliminate(rows, cols):
    """Reduced echelon form over the given bit columns.

    Returns ``(pivots, leftovers)``: ``pivots`` is a list of ``(col, row)``
    in column order, ``leftovers`` the nonzero rows with no pivot in
    ``cols``.
    """
    rows = [r for r in rows if r]
    pivots = []
    for col in cols:
        bit = 1 << col
        k = next((k for k, r in enumerate(rows) if r & bit), None)
        if k is None:
            continue
        p = rows.pop(k)
        rows = [r ^ p if r & bit else r for r in rows]
        pivots = [(c, r ^ p if r & bit else r) for c, r in pivots]
        pivots.append((col, p))
    return pivots, rows


def _swap_coords(r, mask, n):
    a, b = r & ((1 << n) - 1), r >> n
    a2 = (a & ~mask) | (b & mask)
    b2 = (b & ~mask) | (a & mask)
    return a2 | b2 << n


def codewords(c: AdditiveCode) -> tuple[np.ndarray, np.ndarray]:
    """All 2^n codewords as (a, b) mask arrays, built by doubling."""
    if c.n > MAX_PROFILE_N:
        raise CodeError(f"n={c.n} too large to enumerate (max {MAX_PROFILE_N})")
    a = np.zeros(1, dtype=np.int64)
    b = np.zeros(1, dtype=np.int64)
    for g in c.gens:
        a = np.concatenate([a, a ^ g.a])
        b = np.concatenate([b, b ^ g.b])
    return a, b


def profile(c: AdditiveCode) -> CodeProfile:
    a, b = codewords(c)
    w = np.bitwise_count(a | b)
    dist = np.bincount(w, minlength=c.n + 1)
    nz = np.flatnonzero(dist[1:])
    d = int(nz[0]) + 1 if nz.size else 0
    return CodeProfile(d, tuple(int(x) for x in dist))


def graph_profile(g: Graph) -> CodeProfile:
    return profile(code_from_graph(g))


def degree_distance_check(g: Graph) -> bool:
    """Every vertex of degree delta gives a codeword of weight delta + 1."""
    if g.n == 0:
        return True
    return min(r.bit_count() for r in g.adj) >= graph_profile(g).distance - 1

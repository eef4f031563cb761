"""Boolean functions in algebraic normal form.

Monomials are variable bitmasks (0 is the constant 1).  Truth tables index
``x`` with ``x_0`` as the least significant bit.

Text format: comma-separated monomials, each a period-separated list of
variable indices (``"0.1,0.2,1.2"``).  On input, a run of digits without
periods is read one variable per digit when ``n <= 10`` (``"01,02,12"``).
``"c"`` is the constant 1 and ``"0"`` alone is the zero function; the lone
monomial ``x_0`` is written ``"0."``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .graph import Graph, bits


class AnfParseError(ValueError):
    def __init__(self, msg, col=None):
        super().__init__(msg if col is None else f"column {col}: {msg}")
        self.col = col


def mobius(tt: np.ndarray) -> np.ndarray:
    """Binary Moebius transform (its own inverse); truth table <-> ANF."""
    a = np.array(tt, dtype=np.uint8, copy=True)
    n = a.size.bit_length() - 1
    for k in range(n):
        v = a.reshape(-1, 2, 1 << k)
        v[:, 1, :] ^= v[:, 0, :]
    return a


@dataclass(frozen=True)
class BooleanFunction:
    n: int
    anf: frozenset[int]

    def __post_init__(self):
        full = (1 << self.n) - 1
        for m in self.anf:
            if m & ~full:
                raise ValueError(f"monomial {bits(m)} uses a variable >= n={self.n}")

    @classmethod
    def from_monomials(cls, n: int, monos: Iterable[Iterable[int]]) -> "BooleanFunction":
        acc = set()
        for mono in monos:
            m = 0
            for i in mono:
                m |= 1 << i
            acc ^= {m}
        return cls(n, frozenset(acc))

    @classmethod
    def from_truth(cls, tt) -> "BooleanFunction":
        tt = np.asarray(tt, dtype=np.uint8)
        n = tt.size.bit_length() - 1
        if tt.size != 1 << n:
            raise ValueError("truth table length is not a power of two")
        coeffs = mobius(tt & 1)
        return cls(n, frozenset(int(m) for m in np.flatnonzero(coeffs)))

    @classmethod
    def from_graph(cls, g: Graph) -> "BooleanFunction":
        return cls(g.n, frozenset((1 << i) | (1 << j) for i, j in g.edges()))

    @classmethod
    def parse(cls, text: str, n: int | None = None) -> "BooleanFunction":
        return parse_anf(text, n)

    def truth(self) -> np.ndarray:
        coeffs = np.zeros(1 << self.n, dtype=np.uint8)
        for m in self.anf:
            coeffs[m] = 1
        return mobius(coeffs)

    def degree(self) -> int:
        return max((m.bit_count() for m in self.anf), default=0)

    def is_quadratic(self) -> bool:
        return self.degree() <= 2

    def homogeneous_quadratic(self) -> "BooleanFunction":
        return BooleanFunction(self.n, frozenset(m for m in self.anf
                                                 if m.bit_count() == 2))

    def graph(self) -> Graph:
        """Graph of the quadratic monomials; higher-degree terms must be absent."""
        if self.degree() > 2:
            raise ValueError("function has degree > 2; no graph form")
        edges = [bits(m) for m in self.anf if m.bit_count() == 2]
        return Graph.from_edges(self.n, [tuple(e) for e in edges])

    def __add__(self, other: "BooleanFunction") -> "BooleanFunction":
        n = max(self.n, other.n)
        return BooleanFunction(n, self.anf ^ other.anf)

    def __mul__(self, other: "BooleanFunction") -> "BooleanFunction":
        n = max(self.n, other.n)
        acc = set()
        for a in self.anf:
            for b in other.anf:
                acc ^= {a | b}
        return BooleanFunction(n, frozenset(acc))

    def depends_only_on(self, mask: int) -> bool:
        return all(not (m & ~mask) for m in self.anf)

    def with_n(self, n: int) -> "BooleanFunction":
        return BooleanFunction(n, self.anf)

    def to_text(self, shorthand: bool = False) -> str:
        return format_anf(self, shorthand)

    def __str__(self):
        return format_anf(self, shorthand=self.n <= 10)


def monomial_order(m: int):
    return (-m.bit_count(), bits(m))


def format_anf(f: BooleanFunction, shorthand: bool = False) -> str:
    if not f.anf:
        return "0"
    terms = []
    for m in sorted(f.anf, key=monomial_order):
        if m == 0:
            terms.append("c")
        else:
            sep = "" if shorthand else "."
            terms.append(sep.join(str(i) for i in bits(m)))
    if terms == ["0"]:
        return "0."
    return ",".join(terms)


def parse_anf(text: str, n: int | None = None) -> BooleanFunction:
    text = text.strip()
    if text == "0" or text == "":
        return BooleanFunction(n or 0, frozenset())
    monos = []
    pos = 0
    for token in text.split(","):
        col = pos + 1
        pos += len(token) + 1
        tok = token.strip()
        if not tok:
            raise AnfParseError("empty monomial", col)
        if tok == "c":
            monos.append([])
            continue
        if "." in tok:
            parts = [p for p in tok.split(".") if p]
            if not parts or not all(p.isdigit() for p in parts):
                raise AnfParseError(f"bad monomial {tok!r}", col)
            monos.append([int(p) for p in parts])
        elif tok.isdigit():
            if len(tok) > 1 and n is not None and n > 10:
                raise AnfParseError(
                    f"digit shorthand {tok!r} is ambiguous for n={n}; use periods", col)
            monos.append([int(ch) for ch in tok])
        else:
            raise AnfParseError(f"bad monomial {tok!r}", col)
    used = max((i for m in monos for i in m), default=-1) + 1
    if n is None:
        n = used
    elif used > n:
        raise AnfParseError(f"variable {used - 1} out of range for n={n}")
    return BooleanFunction.from_monomials(n, monos)

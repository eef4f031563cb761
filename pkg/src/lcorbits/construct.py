"""Block constructions of non-quadratic Boolean functions with low PAR.

Variables are split into consecutive blocks ``y_0, ..., y_{L-1}`` of sizes
``T``.  A "generalised adjacency matrix" assigns to each ordered pair of
blocks either nothing or a vector of ``m`` Boolean functions of the source
block; paired entries ``(i, j)`` and ``(j, i)`` must agree on ``m`` and
contribute their dot product.  Offsets ``g_j`` are added per block:

    p(x) = sum_{i<j} <G_ij(y_i), G_ji(y_j)> + sum_j g_j(y_j)

Component functions are written with global variable indices, as in
``"02,1"`` for ``x_0 x_2 + x_1`` on block ``(x_0, x_1, x_2)``.
"""

from __future__ import annotations

import json
import random
import re
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .boolean import BooleanFunction, parse_anf
from .graph import Graph


class ConstructionError(ValueError):
    pass


@dataclass(frozen=True)
class Partition:
    sizes: tuple[int, ...]

    def __post_init__(self):
        if not self.sizes or any(t < 1 for t in self.sizes):
            raise ConstructionError(f"block sizes must be positive: {self.sizes}")

    @property
    def n(self) -> int:
        return sum(self.sizes)

    @property
    def L(self) -> int:
        return len(self.sizes)

    @property
    def offsets(self) -> tuple[int, ...]:
        out, acc = [], 0
        for t in self.sizes:
            out.append(acc)
            acc += t
        return tuple(out)

    def mask(self, j: int) -> int:
        return ((1 << self.sizes[j]) - 1) << self.offsets[j]

    def variables(self, j: int) -> list[int]:
        o = self.offsets[j]
        return list(range(o, o + self.sizes[j]))


@dataclass(frozen=True)
class BlockMap:
    source: int
    components: tuple[BooleanFunction, ...]
    permutation: bool = False

    @property
    def m(self) -> int:
        return len(self.components)

    def table(self, part: Partition) -> np.ndarray:
        """Output integer (component k -> bit k) for each input of the block."""
        vars_ = part.variables(self.source)
        t = len(vars_)
        out = np.zeros(1 << t, dtype=np.int64)
        for k, comp in enumerate(self.components):
            for y in range(1 << t):
                x = 0
                for b, v in enumerate(vars_):
                    if y >> b & 1:
                        x |= 1 << v
                val = sum(1 for mono in comp.anf if mono & x == mono) & 1
                out[y] |= val << k
        return out

    def is_bijective(self, part: Partition) -> bool:
        t = part.sizes[self.source]
        if self.m != t:
            return False
        return len(set(self.table(part).tolist())) == 1 << t


@dataclass
class ConstructionSpec:
    partition: Partition
    entries: dict[tuple[int, int], BlockMap] = field(default_factory=dict)
    offsets_g: dict[int, BooleanFunction] = field(default_factory=dict)

    @property
    def n(self):
        return self.partition.n

    def validate(self):
        part = self.partition
        L = part.L
        for (i, j), bm in self.entries.items():
            if not (0 <= i < L and 0 <= j < L) or i == j:
                raise ConstructionError(f"bad entry position ({i}, {j})")
            if bm.source != i:
                raise ConstructionError(f"entry ({i}, {j}) has source block {bm.source}")
            for comp in bm.components:
                if not comp.depends_only_on(part.mask(i)):
                    raise ConstructionError(
                        f"entry ({i}, {j}) uses a variable outside block {i}")
            other = self.entries.get((j, i))
            if other is None:
                raise ConstructionError(f"entry ({i}, {j}) has no partner ({j}, {i})")
            if other.m != bm.m:
                raise ConstructionError(
                    f"dimension mismatch: ({i}, {j}) has {bm.m} components, "
                    f"({j}, {i}) has {other.m}")
            if bm.permutation and not bm.is_bijective(part):
                raise ConstructionError(f"entry ({i}, {j}) is not a permutation")
        for j, g in self.offsets_g.items():
            if not 0 <= j < L:
                raise ConstructionError(f"offset for missing block {j}")
            if not g.depends_only_on(part.mask(j)):
                raise ConstructionError(f"g_{j} uses a variable outside block {j}")

    def is_chain(self) -> bool:
        return all(abs(i - j) == 1 for i, j in self.entries)

    def template_graph(self) -> Graph:
        return Graph.from_edges(self.partition.L,
                                [(i, j) for i, j in self.entries if i < j])


def build(spec: ConstructionSpec) -> BooleanFunction:
    spec.validate()
    n = spec.n
    acc: set[int] = set()
    for (i, j), a in sorted(spec.entries.items()):
        if i > j:
            continue
        b = spec.entries[(j, i)]
        for fa, fb in zip(a.components, b.components):
            acc ^= set((fa * fb).anf)
    for g in spec.offsets_g.values():
        acc ^= set(g.anf)
    return BooleanFunction(n, frozenset(acc))


def chain_spec(sizes: Sequence[int], thetas, gammas, g=None) -> ConstructionSpec:
    """Path-shaped spec: theta_j on block j pairs with gamma_j on block j+1."""
    part = Partition(tuple(sizes))
    if len(thetas) != part.L - 1 or len(gammas) != part.L - 1:
        raise ConstructionError("need L-1 theta and gamma maps")
    entries = {}
    for j, (th, ga) in enumerate(zip(thetas, gammas)):
        entries[(j, j + 1)] = _as_blockmap(th, j, part)
        entries[(j + 1, j)] = _as_blockmap(ga, j + 1, part)
    offs = {j: _as_fn(x, part.n) for j, x in (g or {}).items()}
    return ConstructionSpec(part, entries, offs)


def build_path(spec: ConstructionSpec) -> BooleanFunction:
    if not spec.is_chain():
        raise ConstructionError("entries must only join consecutive blocks")
    return build(spec)


def _as_fn(x, n):
    if isinstance(x, BooleanFunction):
        return x.with_n(n)
    return parse_anf(x, n)


def _as_blockmap(x, src, part):
    if isinstance(x, BlockMap):
        return x
    if isinstance(x, (str, BooleanFunction)):
        x = [x]
    return BlockMap(src, tuple(_as_fn(c, part.n) for c in x))


def template_spec(template: Graph, sizes: Sequence[int], rows: Sequence[Sequence],
                  g=None) -> ConstructionSpec:
    """Spec from a matrix display: ``rows[i][j]`` is the entry (i, j);
    ``None``, ``0`` or ``"0"`` mean no entry."""
    part = Partition(tuple(sizes))
    if template.n != part.L:
        raise ConstructionError("template size differs from number of blocks")
    entries = {}
    for i, row in enumerate(rows):
        for j, cell in enumerate(row):
            if cell in (None, 0, "0") or i == j:
                continue
            entries[(i, j)] = _as_blockmap(_split_cell(cell), i, part)
    for i, j in template.edges():
        if (i, j) not in entries or (j, i) not in entries:
            raise ConstructionError(f"template edge {i}-{j} has no matrix entry")
    offs = {int(j): _as_fn(x, part.n) for j, x in (g or {}).items()}
    return ConstructionSpec(part, entries, offs)


_PAREN = re.compile(r"\(([^)]*)\)")


def _split_cell(cell):
    """``"(12,0)(01,2)"`` -> components; a bare ANF is one component."""
    if isinstance(cell, str) and cell.strip().startswith("("):
        return _PAREN.findall(cell)
    return cell


# -- spec files ---------------------------------------------------------------

def load_spec(text: str) -> ConstructionSpec:
    """JSON spec: ``{"T": [...], "gamma": [[cell, ...], ...],
    "g": {"0": "01,02,12"}, "permutations": [[i, j], ...]}``.

    Each ``gamma`` cell is "0", one ANF string, or parenthesised components
    ``"(12,0,1,2)(01,2)(02,1,2)"``.  ``"entries": {"i,j": [...]}`` may be
    used instead of ``gamma``.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise ConstructionError(f"line {e.lineno}, column {e.colno}: {e.msg}") from e
    if "T" not in doc:
        raise ConstructionError("spec needs a 'T' list of block sizes")
    part = Partition(tuple(int(t) for t in doc["T"]))
    perms = {tuple(p) for p in doc.get("permutations", [])}
    entries = {}
    if "gamma" in doc:
        for i, row in enumerate(doc["gamma"]):
            if len(row) != part.L:
                raise ConstructionError(f"gamma row {i} has {len(row)} cells, need {part.L}")
            for j, cell in enumerate(row):
                if i == j or cell in (0, "0", None, ""):
                    continue
                entries[(i, j)] = _as_blockmap(_split_cell(cell), i, part)
    for key, comps in doc.get("entries", {}).items():
        i, j = (int(x) for x in key.split(","))
        entries[(i, j)] = _as_blockmap(_split_cell(comps), i, part)
    for key in perms:
        if key in entries:
            bm = entries[key]
            entries[key] = BlockMap(bm.source, bm.components, permutation=True)
    offs = {int(j): _as_fn(x, part.n) for j, x in doc.get("g", {}).items()}
    spec = ConstructionSpec(part, entries, offs)
    spec.validate()
    return spec


# -- random chain specs ---------------------------------------------------------

def random_permutation_components(rng: random.Random, part: Partition, j: int
                                  ) -> tuple[BooleanFunction, ...]:
    """Components of a uniformly random bijection of block j onto itself."""
    t = part.sizes[j]
    perm = list(range(1 << t))
    rng.shuffle(perm)
    return tuple(_lift([y >> k & 1 for y in perm], part, j) for k in range(t))


def random_chain_spec(rng: random.Random, sizes: Sequence[int],
                      offsets: bool = True) -> ConstructionSpec:
    """Chain with random bijections on both sides of every link.

    Both maps of a link are permutations of the same space, so adjacent
    blocks must have equal size.
    """
    part = Partition(tuple(sizes))
    for a, b in zip(part.sizes, part.sizes[1:]):
        if a != b:
            raise ConstructionError("random chain specs need equal adjacent sizes")
    entries = {}
    for j in range(part.L - 1):
        entries[(j, j + 1)] = BlockMap(j, random_permutation_components(rng, part, j), True)
        entries[(j + 1, j)] = BlockMap(j + 1, random_permutation_components(rng, part, j + 1),
                                       True)
    offs = {}
    if offsets:
        for j in range(part.L):
            tt_local = [rng.randrange(2) for _ in range(1 << part.sizes[j])]
            offs[j] = _lift(tt_local, part, j)
    return ConstructionSpec(part, entries, offs)


def _lift(local_tt, part, j):
    idx = np.arange(1 << part.n)
    local = np.zeros_like(idx)
    for b, v in enumerate(part.variables(j)):
        local |= ((idx >> v) & 1) << b
    return BooleanFunction.from_truth(np.asarray(local_tt, dtype=np.uint8)[local])


# -- the printed examples -------------------------------------------------------

HEXACODE_TEMPLATE = "01,02,03,04,05,12,23,34,45,15"

_HEX_ROWS_TAIL = [
    ["3", "0", "3", "0", "0", "3"],
    ["4", "4", "0", "4", "0", "0"],
    ["5", "0", "5", "0", "5", "0"],
    ["6", "0", "0", "6", "0", "6"],
    ["7", "7", "0", "0", "7", "0"],
]

EXAMPLES = {
    "hexacode-a": {
        "T": [3, 1, 1, 1, 1, 1],
        "gamma": [["0", "02,1", "02,1", "02,1", "02,1", "02,1"]] + _HEX_ROWS_TAIL,
        "g": {"0": "01,02,12"},
        "expected_anf": "023,024,025,026,027,01,02,12,13,14,15,16,17,34,37,45,56,67",
        "expected_par": 9.0,
    },
    "hexacode-b": {
        "T": [3, 1, 1, 1, 1, 1],
        "gamma": [["0", "02,1", "12,0,1,2", "01,02,12,1,2", "01,02,12", "02,12,1,2"]]
        + _HEX_ROWS_TAIL,
        "g": {"0": "01,12"},
        "expected_anf": "015,016,023,025,026,027,124,125,126,127,01,04,12,13,14,15,"
                        "17,24,25,27,34,37,45,56,67",
        "expected_par": 9.0,
    },
    "triangle-3x3": {
        "T": [3, 3, 3],
        "gamma": [
            ["0", "(12,0,1,2)(01,2)(02,1,2)", "(12,0,1,2)(01,2)(02,1,2)"],
            ["(34,5)(35,4,5)(45,3,4,5)", "0", "(45,3,4,5)(34,5)(35,4,5)"],
            ["(68,7,8)(78,6,7,8)(67,8)", "(78,6,7,8)(67,8)(68,7,8)", "0"],
        ],
        "g": {"0": "01,02,12", "1": "34,35,45", "2": "67,68,78"},
        "expected_anf": "0135,0178,0245,0267,1234,1268,3467,3568,4578,"
                        "014,015,016,017,018,023,024,025,028,034,068,125,"
                        "127,128,134,145,167,168,234,235,245,267,268,278,"
                        "348,357,358,378,456,457,458,468,478,567,568,578,"
                        "05,07,08,13,14,17,23,25,26,28,36,37,38,46,"
                        "56,58,01,02,12,34,35,45,67,68,78",
        "expected_par": 10.25,
    },
}


def example_spec(name: str) -> ConstructionSpec:
    doc = {k: v for k, v in EXAMPLES[name].items() if not k.startswith("expected")}
    return load_spec(json.dumps(doc))


def reproduce_examples(method: str = "exact") -> list[dict]:
    """Rebuild the printed examples and measure PAR_IHN."""
    from .spectra import par

    report = []
    for name, doc in EXAMPLES.items():
        spec = example_spec(name)
        p = build(spec)
        expected = parse_anf(doc["expected_anf"], spec.n)
        report.append({
            "name": name,
            "n": spec.n,
            "anf": p,
            "anf_matches": p == expected,
            "missing": sorted(expected.anf - p.anf),
            "extra": sorted(p.anf - expected.anf),
            "degree": p.degree(),
            "par_ihn": par(p, "ihn", method),
            "expected_par": doc["expected_par"],
        })
    return report


def par_hn_bound(spec: ConstructionSpec) -> int:
    return 1 << max(spec.partition.sizes)


def verify_par_hn_bound(spec: ConstructionSpec, long_run: bool = False) -> bool:
    """Measured PAR_HN of a chain spec against 2^(largest block size)."""
    from .spectra import par

    if not spec.is_chain():
        raise ConstructionError("bound applies to chain specs only")
    return par(build(spec), "hn", long_run=long_run) <= par_hn_bound(spec)

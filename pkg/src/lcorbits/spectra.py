"""Spectra of Boolean functions under tensor products of I, H and N.

Kernel ``kernels[k]`` acts on variable ``x_k`` (bit ``k`` of the index).

Two backends.  The exact one drops every 1/sqrt(2) factor: starting from
the +-1 vector, H and N butterflies keep entries in Z[i], so an exact
spectrum is a pair of int64 arrays plus the number ``h`` of non-identity
kernels, and ``|S_k|^2 = |z_k|^2 / 2^(n + h)``.  The float backend works on
normalised complex128 vectors.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import sqrt
from typing import Sequence

import numpy as np

from .boolean import BooleanFunction
from .graph import Graph, is_independent

KERNELS = ("I", "H", "N")
TRANSFORM_SETS = {"ihn": ("I", "H", "N"), "ih": ("I", "H"), "hn": ("H", "N")}

MAX_BIPOLAR_N = 20
# Default limits on n for a full scan; larger n needs long_run.
SCAN_LIMITS = {"ihn": 9, "ih": 12, "hn": 12}
MAX_LONG_N = 16

_BATCH_ELEMS = 1 << 20
_SQRT_HALF = sqrt(0.5)


class SpectrumError(ValueError):
    pass


class BudgetError(RuntimeError):
    pass


@dataclass(frozen=True)
class TransformAssignment:
    kernels: tuple[str, ...]

    def __post_init__(self):
        for k in self.kernels:
            if k not in KERNELS:
                raise SpectrumError(f"unknown kernel {k!r}")

    @classmethod
    def of(cls, spec) -> "TransformAssignment":
        return cls(tuple(spec))

    @property
    def n(self):
        return len(self.kernels)

    def __str__(self):
        return "".join(self.kernels)


@dataclass(frozen=True)
class Spectrum:
    values: np.ndarray
    assignment: TransformAssignment

    def power(self) -> np.ndarray:
        return np.abs(self.values) ** 2

    def is_flat(self, rtol: float = 1e-6) -> bool:
        mag = np.abs(self.values)
        mean = mag.mean()
        return bool(np.all(np.abs(mag - mean) < rtol * mean))


@dataclass(frozen=True)
class FlatSpectrum:
    """Flat spectrum written as v^(4 f'(x) + h(x)) with v = exp(i pi / 4)."""
    f_prime: BooleanFunction
    h: dict[int, int]            # Z_8 ANF: monomial mask -> coefficient
    exponents: np.ndarray        # Z_8 exponent of v at each index
    assignment: TransformAssignment

    base = np.exp(1j * np.pi / 4)

    @property
    def h_degree(self) -> int:
        return max((m.bit_count() for m, c in self.h.items() if c), default=0)


def bipolar(f: BooleanFunction) -> np.ndarray:
    if f.n > MAX_BIPOLAR_N:
        raise BudgetError(f"n={f.n} exceeds bipolar limit {MAX_BIPOLAR_N}")
    return (1.0 - 2.0 * f.truth()) * 2.0 ** (-f.n / 2)


def _signs(f: BooleanFunction) -> np.ndarray:
    return 1 - 2 * f.truth().astype(np.int64)


def _butterfly_exact(re, im, k, kind):
    """Unnormalised kernel on bit k of the last axis; returns new arrays."""
    shape = re.shape
    size = shape[-1]
    view = shape[:-1] + (size >> (k + 1), 2, 1 << k)
    r = re.reshape(view)
    i = im.reshape(view)
    ar, br = r[..., 0, :], r[..., 1, :]
    ai, bi = i[..., 0, :], i[..., 1, :]
    if kind == "H":
        out_r = np.stack([ar + br, ar - br], axis=-2)
        out_i = np.stack([ai + bi, ai - bi], axis=-2)
    else:  # N: rows (1, i) and (1, -i)
        out_r = np.stack([ar - bi, ar + bi], axis=-2)
        out_i = np.stack([ai + br, ai - br], axis=-2)
    return out_r.reshape(shape), out_i.reshape(shape)


_N = np.array([[1, 1j], [1, -1j]]) * _SQRT_HALF
_H = np.array([[1, 1], [1, -1]]) * _SQRT_HALF


def _butterfly_float(x, k, kind):
    shape = x.shape
    size = shape[-1]
    v = x.reshape(shape[:-1] + (size >> (k + 1), 2, 1 << k))
    m = _H if kind == "H" else _N
    a, b = v[..., 0, :], v[..., 1, :]
    out = np.stack([m[0, 0] * a + m[0, 1] * b, m[1, 0] * a + m[1, 1] * b], axis=-2)
    return out.reshape(shape)


def apply_transform(s, a: TransformAssignment | Sequence[str]) -> Spectrum:
    """S = U s for U = U_0 (x) ... with U_k acting on variable x_k."""
    if not isinstance(a, TransformAssignment):
        a = TransformAssignment.of(a)
    x = np.asarray(s, dtype=np.complex128)
    if x.size != 1 << a.n:
        raise SpectrumError(f"vector length {x.size} != 2^{a.n}")
    for k, kind in enumerate(a.kernels):
        if kind != "I":
            x = _butterfly_float(x, k, kind)
    return Spectrum(x, a)


def exact_spectrum(f: BooleanFunction, a: TransformAssignment | Sequence[str]):
    """Return ``(re, im, h)`` with ``S = (re + i*im) / sqrt(2)^(n + h)``."""
    if not isinstance(a, TransformAssignment):
        a = TransformAssignment.of(a)
    if a.n != f.n:
        raise SpectrumError(f"assignment length {a.n} != n={f.n}")
    re = _signs(f)
    im = np.zeros_like(re)
    h = 0
    for k, kind in enumerate(a.kernels):
        if kind != "I":
            re, im = _butterfly_exact(re, im, k, kind)
            h += 1
    return re, im, h


# -- PAR scans ---------------------------------------------------------------

def _scan_exact(re, im, h, k, n, kinds):
    """Max over assignments of |z|^2 * 2^(n-h), per leading sample row.

    re, im: (samples, batch, 2^n) int64; h: (batch,) non-identity counts.
    """
    if k == n:
        power = re * re + im * im
        scaled = power << (n - h)[None, :, None]
        return scaled.max(axis=(1, 2))
    samples, batch, size = re.shape
    if samples * batch * len(kinds) * size <= _BATCH_ELEMS:
        outs_r, outs_i, hs = [], [], []
        for kind in kinds:
            if kind == "I":
                outs_r.append(re)
                outs_i.append(im)
                hs.append(h)
            else:
                r2, i2 = _butterfly_exact(re, im, k, kind)
                outs_r.append(r2)
                outs_i.append(i2)
                hs.append(h + 1)
        return _scan_exact(np.concatenate(outs_r, axis=1),
                           np.concatenate(outs_i, axis=1),
                           np.concatenate(hs), k + 1, n, kinds)
    best = None
    for kind in kinds:
        if kind == "I":
            m = _scan_exact(re, im, h, k + 1, n, kinds)
        else:
            r2, i2 = _butterfly_exact(re, im, k, kind)
            m = _scan_exact(r2, i2, h + 1, k + 1, n, kinds)
        best = m if best is None else np.maximum(best, m)
    return best


def _scan_float(x, k, n, kinds):
    if k == n:
        return (np.abs(x) ** 2).max(axis=(1, 2))
    samples, batch, size = x.shape
    if samples * batch * len(kinds) * size <= _BATCH_ELEMS:
        outs = [x if kind == "I" else _butterfly_float(x, k, kind) for kind in kinds]
        return _scan_float(np.concatenate(outs, axis=1), k + 1, n, kinds)
    best = None
    for kind in kinds:
        y = x if kind == "I" else _butterfly_float(x, k, kind)
        m = _scan_float(y, k + 1, n, kinds)
        best = m if best is None else np.maximum(best, m)
    return best


def _check_scan_budget(n, transform_set, long_run):
    if transform_set not in TRANSFORM_SETS:
        raise SpectrumError(f"unknown transform set {transform_set!r}")
    if n > MAX_LONG_N:
        raise BudgetError(f"n={n} exceeds the scan maximum {MAX_LONG_N}")
    if n > SCAN_LIMITS[transform_set] and not long_run:
        raise BudgetError(
            f"PAR_{transform_set.upper()} at n={n} needs --long-run "
            f"(default limit n={SCAN_LIMITS[transform_set]})")


def par_exact(f: BooleanFunction, transform_set: str = "ihn",
              long_run: bool = False) -> Fraction:
    """PAR as an exact rational."""
    return par_exact_many(_signs(f)[None, :], transform_set, long_run)[0]


def par_exact_many(signs: np.ndarray, transform_set: str = "ihn",
                   long_run: bool = False) -> list[Fraction]:
    """Exact PAR for each row of a (count, 2^n) array of +-1 entries."""
    signs = np.asarray(signs, dtype=np.int64)
    n = signs.shape[1].bit_length() - 1
    _check_scan_budget(n, transform_set, long_run)
    kinds = TRANSFORM_SETS[transform_set]
    out = []
    per = max(1, _BATCH_ELEMS // (signs.shape[1] * len(kinds) ** min(n, 3)))
    for start in range(0, signs.shape[0], per):
        chunk = signs[start:start + per]
        re = chunk[:, None, :]
        im = np.zeros_like(re)
        m = _scan_exact(re, im, np.zeros(1, dtype=np.int64), 0, n, kinds)
        out.extend(Fraction(int(v), 1 << n) for v in m)
    return out


def par_float(f: BooleanFunction, transform_set: str = "ihn",
              long_run: bool = False) -> float:
    _check_scan_budget(f.n, transform_set, long_run)
    x = bipolar(f).astype(np.complex128)[None, None, :]
    m = _scan_float(x, 0, f.n, TRANSFORM_SETS[transform_set])
    return float(m[0]) * (1 << f.n)


def par(f: BooleanFunction, transform_set: str = "ihn", method: str = "exact",
        long_run: bool = False) -> float:
    """2^n max |S_k|^2 over every assignment in the set and every k."""
    if method == "exact":
        return float(par_exact(f, transform_set, long_run))
    if method == "float":
        return par_float(f, transform_set, long_run)
    raise SpectrumError(f"unknown method {method!r}")


def gamma(f: BooleanFunction, par_value: float | None = None) -> float:
    """Generalised nonlinearity 2^(n/2-1) (2^(n/2) - sqrt(PAR_IHN))."""
    if par_value is None:
        par_value = par(f, "ihn")
    return 2.0 ** (f.n / 2 - 1) * (2.0 ** (f.n / 2) - sqrt(par_value))


def peak_at_independent_set(g: Graph, verts) -> Fraction:
    """2^n max |S_k|^2 for H on ``verts`` and I elsewhere."""
    verts = sorted(set(verts))
    if not is_independent(g, verts):
        raise SpectrumError(f"{verts} is not an independent set")
    kinds = ["I"] * g.n
    for v in verts:
        kinds[v] = "H"
    re, im, h = exact_spectrum(BooleanFunction.from_graph(g), kinds)
    return Fraction(int((re * re + im * im).max()), 1 << h)


def sample_par(n: int, count: int, seed: int, transform_set: str = "ihn",
               long_run: bool = False) -> tuple[float, float]:
    """(min, max) PAR over uniformly random truth tables; Philox-seeded."""
    _check_scan_budget(n, transform_set, long_run)
    rng = np.random.Generator(np.random.Philox(seed))
    tts = rng.integers(0, 2, size=(count, 1 << n), dtype=np.int64)
    values = par_exact_many(1 - 2 * tts, transform_set, long_run)
    return float(min(values)), float(max(values))


# -- flat spectra and the {I,H,N}^n orbit -----------------------------------

# (sign of re, sign of im) -> exponent of v = exp(i pi/4)
_PHASE = {(1, 0): 0, (1, 1): 1, (0, 1): 2, (-1, 1): 3,
          (-1, 0): 4, (-1, -1): 5, (0, -1): 6, (1, -1): 7}


def z8_anf(values: np.ndarray) -> np.ndarray:
    """Coefficients c_m with values(x) = sum_m c_m prod_{i in m} x_i mod 8."""
    a = np.array(values, dtype=np.int64) % 8
    n = a.size.bit_length() - 1
    for k in range(n):
        v = a.reshape(-1, 2, 1 << k)
        v[:, 1, :] -= v[:, 0, :]
    return a % 8


def flat_spectrum(f: BooleanFunction, a) -> FlatSpectrum | None:
    """Decompose U s as v^(4 f' + h) when it is flat; None otherwise.

    f' collects the degree >= 2 Z_8 coefficients equal to 4; the remaining
    nonzero coefficients form h.
    """
    if not isinstance(a, TransformAssignment):
        a = TransformAssignment.of(a)
    re, im, _ = exact_spectrum(f, a)
    power = re * re + im * im
    if not np.all(power == power[0]):
        return None
    if not np.all((re == 0) | (im == 0) | (np.abs(re) == np.abs(im))):
        return None
    e = np.array([_PHASE[(int(np.sign(r)), int(np.sign(i)))] for r, i in zip(re, im)],
                 dtype=np.int64)
    coeffs = z8_anf(e)
    f_prime = set()
    h = {}
    for m in np.flatnonzero(coeffs):
        m = int(m)
        c = int(coeffs[m])
        if c == 4 and m.bit_count() >= 2:
            f_prime.add(m)
        else:
            h[m] = c
    return FlatSpectrum(BooleanFunction(f.n, frozenset(f_prime)), h, e, a)


def flat_spectra_orbit(f: BooleanFunction) -> set[BooleanFunction]:
    """Distinct f' over all flat spectra in the {I,H,N}^n multispectrum
    whose h has degree <= 1."""
    if f.degree() > 2:
        raise SpectrumError("flat_spectra_orbit is defined for quadratics only")
    if f.n > SCAN_LIMITS["ihn"]:
        raise BudgetError(f"n={f.n} too large for a 3^n flat-spectrum scan")
    q = f.homogeneous_quadratic()
    out = set()
    for kinds in product(KERNELS, repeat=f.n):
        fs = flat_spectrum(q, kinds)
        if fs is not None and fs.h_degree <= 1:
            out.add(fs.f_prime)
    return out

import itertools
import random
from fractions import Fraction

import numpy as np
import pytest

from conftest import random_graph
from lcorbits.boolean import BooleanFunction, parse_anf
from lcorbits.canon import canonical_form
from lcorbits.graph import maximum_independent_set, path, wheel
from lcorbits.orbit import lc_orbit
from lcorbits.spectra import (BudgetError, SpectrumError, TransformAssignment,
                              apply_transform, bipolar, exact_spectrum, flat_spectra_orbit,
                              flat_spectrum, gamma, par, par_exact, par_float,
                              peak_at_independent_set, sample_par, z8_anf)

_DENSE = {
    "I": np.eye(2),
    "H": np.array([[1, 1], [1, -1]]) / np.sqrt(2),
    "N": np.array([[1, 1j], [1, -1j]]) / np.sqrt(2),
}


def dense(kinds):
    # kinds[k] acts on bit k, the least significant first.
    u = np.eye(1)
    for k in kinds:
        u = np.kron(_DENSE[k], u)
    return u


def dense_par(f, sets="IHN"):
    s = bipolar(f)
    return max(np.max(np.abs(dense(k) @ s) ** 2) for k in itertools.product(sets, repeat=f.n)) \
        * 2 ** f.n


def random_function(rng, n):
    return BooleanFunction.from_truth(np.array([rng.randrange(2) for _ in range(1 << n)],
                                               dtype=np.uint8))


def test_transform_matches_dense_kronecker():
    rng = random.Random(0)
    for n in range(1, 5):
        f = random_function(rng, n)
        for kinds in itertools.product("IHN", repeat=n):
            got = apply_transform(bipolar(f), kinds).values
            assert np.allclose(got, dense(kinds) @ bipolar(f))
            re, im, h = exact_spectrum(f, kinds)
            assert np.allclose((re + 1j * im) / np.sqrt(2.0 ** (n + h)), got)


def test_par_matches_dense_oracle():
    rng = random.Random(1)
    for n in range(1, 5):
        for _ in range(3):
            f = random_function(rng, n)
            ref = dense_par(f)
            assert abs(float(par_exact(f)) - ref) < 1e-9
            assert abs(par_float(f) - ref) < 1e-9 * ref
            assert abs(par(f, "hn") - dense_par(f, "HN")) < 1e-9
            assert abs(par(f, "ih") - dense_par(f, "IH")) < 1e-9


def test_parseval():
    f = parse_anf("012,13,2")
    for kinds in [("H", "N", "I", "N"), ("N", "N", "N", "N")]:
        assert np.isclose(apply_transform(bipolar(f), kinds).power().sum(), 1.0)


def test_quadratic_par_is_power_of_lambda():
    assert par_exact(BooleanFunction.from_graph(wheel(6))) == 4
    assert par_exact(BooleanFunction.from_graph(path(4))) == 4
    # Affine terms do not change PAR_IHN.
    assert par_exact(parse_anf("01,12,23,34,45,05,0,3,c")) == par_exact(parse_anf("01,12,23,34,45,05"))


def test_peak_at_independent_set():
    rng = random.Random(2)
    for _ in range(10):
        g = random_graph(rng, 7)
        a = maximum_independent_set(g)
        assert peak_at_independent_set(g, a) == 1 << len(a)
    with pytest.raises(SpectrumError):
        peak_at_independent_set(path(3), [0, 1])


def test_flat_spectrum_nii():
    f = parse_anf("01,02")
    assert list(np.rint(bipolar(f) * np.sqrt(8))) == [1, 1, 1, -1, 1, -1, 1, 1]
    fs = flat_spectrum(f, "NII")
    assert list(fs.exponents) == [1, 7, 7, 1, 7, 1, 1, 7]
    assert fs.f_prime == parse_anf("01,02,12")
    assert fs.h == {0: 1, 1: 6, 2: 6, 4: 6}
    assert fs.h_degree == 1
    assert flat_spectrum(parse_anf("012"), "HHH") is None


def test_flat_spectra_orbit_is_lc_orbit():
    for g in [path(3), path(4), wheel(5), random_graph(random.Random(3), 5)]:
        fs = flat_spectra_orbit(BooleanFunction.from_graph(g))
        assert {canonical_form(f.graph()).cert for f in fs} == {m.cert for m in lc_orbit(g)}


def test_z8_anf_roundtrip():
    rng = np.random.default_rng(0)
    vals = rng.integers(0, 8, 16)
    c = z8_anf(vals)
    idx = np.arange(16)
    back = np.array([sum(int(c[m]) for m in range(16) if m & x == m) for x in idx]) % 8
    assert list(back) == list(vals)


def test_gamma_and_assignment():
    f = BooleanFunction.from_graph(wheel(6))
    assert gamma(f) == pytest.approx(2.0 ** 2 * (8 - 2))
    assert str(TransformAssignment.of("IHN")) == "IHN"
    with pytest.raises(SpectrumError):
        TransformAssignment.of("X")


def test_sample_is_seeded():
    a = sample_par(4, 200, seed=9)
    assert a == sample_par(4, 200, seed=9)
    assert 1 <= a[0] <= a[1] <= 16
    assert isinstance(par_exact(parse_anf("01")), Fraction)


def test_budget():
    with pytest.raises(BudgetError):
        par_exact(BooleanFunction(10, frozenset()))
    with pytest.raises(BudgetError):
        sample_par(10, 1, 0)

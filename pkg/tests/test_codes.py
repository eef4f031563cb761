import itertools
import random

import pytest

from conftest import HEXACODE_MATRIX, HEXACODE_MATRIX_REPAIRED, HEXACODE_GRAPH_FORM, random_graph
from lcorbits.canon import canonical_form
from lcorbits.codes import (AdditiveCode, CodeError, Gf4Vector, MatrixParseError,
                            code_from_graph, degree_distance_check, graph_profile,
                            parse_matrix, profile, to_graph_form, trace_inner_product)
from lcorbits.graph import Graph, circulant, wheel
from lcorbits.orbit import orbit_certs

# GF(4) by explicit tables, independent of the split binary encoding.
_E = ["0", "1", "w", "W"]
_MUL = {("1", x): x for x in _E} | {(x, "1"): x for x in _E}
_MUL |= {("0", x): "0" for x in _E} | {(x, "0"): "0" for x in _E}
_MUL |= {("w", "w"): "W", ("w", "W"): "1", ("W", "w"): "1", ("W", "W"): "w"}
_CONJ = {"0": "0", "1": "1", "w": "W", "W": "w"}
_TRACE = {"0": 0, "1": 0, "w": 1, "W": 1}


def table_trace(u: str, v: str) -> int:
    return sum(_TRACE[_MUL[(x, _CONJ[y])]] for x, y in zip(u, v)) % 2


def brute_profile(c: AdditiveCode):
    dist = [0] * (c.n + 1)
    for coeffs in itertools.product((0, 1), repeat=c.n):
        w = Gf4Vector(0, 0, c.n)
        for k, g in zip(coeffs, c.gens):
            if k:
                w = w + g
        dist[w.weight()] += 1
    return min(i for i in range(1, c.n + 1) if dist[i]), tuple(dist)


def scramble(c: AdditiveCode, rng: random.Random) -> AdditiveCode:
    """An equivalent code: per-coordinate GL(2,2) maps, a coordinate
    permutation, and random invertible row operations."""
    n = c.n
    maps = [rng.choice([(1, 0, 0, 1), (0, 1, 1, 0), (1, 1, 0, 1), (1, 0, 1, 1),
                        (0, 1, 1, 1), (1, 1, 1, 0)]) for _ in range(n)]
    perm = list(range(n))
    rng.shuffle(perm)
    rows = []
    for g in c.gens:
        a = b = 0
        for i in range(n):
            x, y = g.a >> i & 1, g.b >> i & 1
            p, q, r, s = maps[i]
            a |= ((p * x + q * y) & 1) << perm[i]
            b |= ((r * x + s * y) & 1) << perm[i]
        rows.append(Gf4Vector(a, b, n))
    for _ in range(4 * n):
        i, j = rng.sample(range(n), 2)
        rows[i] = rows[i] + rows[j]
    return AdditiveCode(n, tuple(rows))


def test_trace_inner_product_matches_field_tables():
    rng = random.Random(0)
    for _ in range(500):
        u = "".join(rng.choice(_E) for _ in range(7))
        v = "".join(rng.choice(_E) for _ in range(7))
        assert trace_inner_product(Gf4Vector.parse(u), Gf4Vector.parse(v)) == table_trace(u, v)


def test_hexacode_matrix_has_one_bad_row():
    c = parse_matrix(HEXACODE_MATRIX)
    rows = [str(g) for g in c.gens]
    bad = {(i, j) for i in range(6) for j in range(i, 6) if table_trace(rows[i], rows[j])}
    assert bad == {(2, 5), (3, 5)}
    with pytest.raises(CodeError):
        to_graph_form(c)


def test_hexacode_matrix_pipeline():
    c = parse_matrix(HEXACODE_MATRIX_REPAIRED)
    assert c.is_self_dual()
    g, gc = to_graph_form(c)
    printed = parse_matrix(HEXACODE_GRAPH_FORM)
    gamma = Graph(6, tuple(v.a for v in printed.gens))
    assert gc.is_self_dual()
    assert profile(gc) == profile(c)
    assert orbit_certs(g) & orbit_certs(gamma)
    assert profile(c).distance == 4
    # Printed quadratic form of the graph-form matrix.
    assert sorted(gamma.edges()) == [(0, 3), (0, 4), (0, 5), (1, 2), (1, 3), (1, 5),
                                     (2, 3), (2, 4), (3, 4), (3, 5)]


def test_profile_matches_brute_force():
    rng = random.Random(3)
    for n in range(2, 9):
        for _ in range(5):
            c = scramble(code_from_graph(random_graph(rng, n)), rng)
            d, dist = brute_profile(c)
            p = profile(c)
            assert (p.distance, p.weight_dist) == (d, dist)


def test_graph_form_of_scrambled_codes():
    rng = random.Random(8)
    for n in range(2, 10):
        for _ in range(6):
            g0 = random_graph(rng, n)
            c = scramble(code_from_graph(g0), rng)
            assert c.is_self_dual()
            g, gc = to_graph_form(c)
            assert gc.is_self_dual()
            assert profile(gc) == profile(c)
            assert canonical_form(g0).cert in orbit_certs(g)


def test_hexacode_and_dodecacode_distances():
    assert graph_profile(wheel(6)).distance == 4
    # circulant(6, {1, 3}) is K_{3,3}, outside the hexacode orbit; the
    # prism circulant(6, {2, 3}) is inside it.
    hexa = orbit_certs(wheel(6))
    assert graph_profile(circulant(6, {1, 3})).distance == 2
    assert not orbit_certs(circulant(6, {1, 3})) & hexa
    assert canonical_form(circulant(6, {2, 3})).cert in hexa
    assert graph_profile(wheel(6)).weight_dist == (1, 0, 0, 0, 45, 0, 18)
    assert degree_distance_check(wheel(6))


def test_not_self_dual_rejected():
    c = AdditiveCode.from_rows(["10", "10"])
    assert not c.is_self_dual()
    with pytest.raises(CodeError):
        to_graph_form(c)
    c = AdditiveCode.from_rows(["1w", "w0"])
    assert not c.is_self_orthogonal()


def test_matrix_parse_errors():
    with pytest.raises(MatrixParseError) as e:
        parse_matrix("w 0\n0 x\n")
    assert (e.value.line, e.value.col) == (2, 2)
    with pytest.raises(MatrixParseError):
        parse_matrix("w 0 0\n0 w\n")
    with pytest.raises(MatrixParseError):
        parse_matrix("# nothing\n")

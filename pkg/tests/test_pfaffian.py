import random
from fractions import Fraction

import pytest

from cycontract.pfaffian import (
    SkewMatrix,
    build_bordered,
    expansion_identity_check,
    expansion_identity_report,
    maximal_sub_pfaffians,
    pfaffian,
    pfaffian_expand_along,
    skew_from_text,
)
from cycontract.poly import MultiPoly, PolyRing, poly_parse, random_homogeneous, weighted_degree
from oracles import laplace_det

GF = PolyRing(6, 32003)
QQ2 = PolyRing(2)


def _rand_linear(ring, seed):
    return random_homogeneous(1, ring, seed)


def _rand_skew_scalar(ring, n, rng):
    upper = {}
    for i in range(n):
        for j in range(i + 1, n):
            if ring.prime is None:
                c = Fraction(rng.randrange(-9, 10), rng.randrange(1, 5))
            else:
                c = rng.randrange(ring.prime)
            upper[(i, j)] = MultiPoly.constant(ring, c)
    return SkewMatrix(ring, n, upper)


def test_pfaffian_2x2():
    s = SkewMatrix(QQ2, 2, {(0, 1): poly_parse("x0", QQ2)})
    assert pfaffian(s) == poly_parse("x0", QQ2)


def test_pfaffian_4x4_classical_formula():
    ring = PolyRing(6)
    entries = {(i, j): MultiPoly.variable(ring, k)
               for k, (i, j) in enumerate([(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])}
    s = SkewMatrix(ring, 4, entries)
    expected = (entries[(0, 1)] * entries[(2, 3)]
                - entries[(0, 2)] * entries[(1, 3)]
                + entries[(0, 3)] * entries[(1, 2)])
    assert pfaffian(s) == expected


def test_pfaffian_odd_size_rejected():
    s = SkewMatrix(QQ2, 3, {(0, 1): poly_parse("x0", QQ2)})
    with pytest.raises(ValueError):
        pfaffian(s)
    with pytest.raises(ValueError):
        maximal_sub_pfaffians(SkewMatrix(QQ2, 2, {}))


def test_pfaffian_squared_is_determinant():
    rng = random.Random("pfdet")
    for ring in (PolyRing(2), PolyRing(2, 32003)):
        for n in (2, 4, 6):
            for _ in range(10):
                s = _rand_skew_scalar(ring, n, rng)
                rows = [[s.entry(i, j) for j in range(n)] for i in range(n)]
                pf = pfaffian(s)
                assert pf * pf == laplace_det(rows, ring)


def test_pfaffian_squared_polynomial_entries():
    ring = PolyRing(2, 32003)
    rng = random.Random(5)
    for _ in range(5):
        upper = {(i, j): random_homogeneous(1, ring, rng.randrange(10**6))
                 for i in range(4) for j in range(i + 1, 4)}
        s = SkewMatrix(ring, 4, upper)
        rows = [[s.entry(i, j) for j in range(4)] for i in range(4)]
        assert pfaffian(s) * pfaffian(s) == laplace_det(rows, ring)


def test_expand_along_any_row():
    rng = random.Random("rows")
    for n in (4, 6):
        s = _rand_skew_scalar(PolyRing(1, 101), n, rng)
        pf = pfaffian(s)
        for k in range(n):
            assert pfaffian_expand_along(s, k) == pf


def test_row_column_scaling():
    rng = random.Random("scale")
    s = _rand_skew_scalar(PolyRing(1), 4, rng)
    pf = pfaffian(s)
    for i in range(4):
        assert pfaffian(s.scale_index(i, 3)) == pf.scale(3)


def test_sub_pfaffians_3x3():
    ring = PolyRing(3)
    a, b, c = (MultiPoly.variable(ring, k) for k in range(3))
    s = SkewMatrix(ring, 3, {(0, 1): a, (0, 2): b, (1, 2): c})
    assert maximal_sub_pfaffians(s) == [c, b, a]


def test_generic_linear_5x5_gives_quadrics():
    m = SkewMatrix(GF, 5, {(i, j): _rand_linear(GF, 17 + 5 * i + j)
                           for i in range(5) for j in range(i + 1, 5)})
    ps = maximal_sub_pfaffians(m)
    assert len(ps) == 5
    assert all(weighted_degree(p) == 2 for p in ps)


def _bordered_instance(seed):
    base = seed * 271
    m = SkewMatrix(GF, 5, {(i, j): _rand_linear(GF, base + 5 * i + j)
                           for i in range(5) for j in range(i + 1, 5)})
    lf = [_rand_linear(GF, base + 100 + k) for k in range(5)]
    tf = [_rand_linear(GF, base + 200 + k) for k in range(5)]
    return m, lf, tf


def test_bordered_shape_and_cubics():
    m, lf, tf = _bordered_instance(1)
    n = build_bordered(m, lf, tf)
    assert n.size == 7
    assert n.entry(0, 1).is_zero()  # default free corner
    big = maximal_sub_pfaffians(n)
    assert all(weighted_degree(p) == 3 for p in big)


def test_expansion_identity_seeded():
    for seed in (1, 2, 3):
        m, lf, tf = _bordered_instance(seed)
        n = build_bordered(m, lf, tf)
        report = expansion_identity_report(n, lf, tf)
        assert report.holds
        assert report.signs == (1, -1, 1, -1, 1)


def test_expansion_identity_symbolic_over_q():
    ring = PolyRing(1)
    rng = random.Random("sym")

    def lin(c0, c1):
        return poly_parse(f"{c0} + {c1}*x0", ring) if c1 >= 0 else poly_parse(
            f"{c0} - {abs(c1)}*x0", ring)

    m = SkewMatrix(ring, 5, {(i, j): lin(rng.randrange(-4, 5), rng.randrange(-4, 5))
                             for i in range(5) for j in range(i + 1, 5)})
    lf = [lin(rng.randrange(-4, 5), rng.randrange(-4, 5)) for _ in range(5)]
    tf = [lin(rng.randrange(-4, 5), rng.randrange(-4, 5)) for _ in range(5)]
    n = build_bordered(m, lf, tf, corner=lin(1, 2))
    assert expansion_identity_check(n, lf, tf)


def test_expansion_falsified_by_tampering():
    m, lf, tf = _bordered_instance(4)
    n = build_bordered(m, lf, tf)
    upper = {(i, j): n.entry(i, j) for i in range(7) for j in range(i + 1, 7)
             if not n.entry(i, j).is_zero()}
    upper[(1, 4)] = upper[(1, 4)] + MultiPoly.variable(GF, 0)
    tampered = SkewMatrix(GF, 7, upper)
    assert not expansion_identity_check(tampered, lf, tf)


def test_degenerate_borders():
    m, lf, _ = _bordered_instance(5)
    n = build_bordered(m, lf, lf)  # l = t makes the two expansions agree
    big = maximal_sub_pfaffians(n)
    assert big[0] == big[1]
    zero = SkewMatrix(GF, 5, {})
    n0 = build_bordered(zero, lf, lf)
    big0 = maximal_sub_pfaffians(n0)
    assert big0[0].is_zero() and big0[1].is_zero()


def test_build_bordered_validation():
    m, lf, tf = _bordered_instance(6)
    with pytest.raises(ValueError):
        build_bordered(m, lf[:4], tf)
    quad = random_homogeneous(2, GF, 9)
    with pytest.raises(ValueError):
        build_bordered(m, [quad] + lf[1:], tf)


def test_skew_from_text():
    ring = PolyRing(2, 101)
    s = skew_from_text("0 1 : x0 + 2*x1\n# comment\n1 2 : x1\n0 2 : 7\n", ring, 3)
    assert s.entry(0, 1) == poly_parse("x0 + 2*x1", ring)
    assert s.entry(2, 1) == -poly_parse("x1", ring)
    ps = maximal_sub_pfaffians(s)
    assert ps[0] == poly_parse("x1", ring)

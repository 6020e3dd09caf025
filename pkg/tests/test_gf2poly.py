from types import SimpleNamespace

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from slce.fields import build_field
from slce.gf2poly import (
    ONE,
    X,
    Gf2Poly,
    all_ones_poly,
    berlekamp_massey,
    coset_minimal_polys,
    cyclotomic_cosets,
    factor,
    factor_squarefree,
    factored_str,
    gcd,
    lfsr_regenerate,
    linear_complexity,
    minimal_polys_of_order,
    poly_from_seq,
    recombine,
    smallest_irreducible,
    x_pow_plus_one,
)
from slce.sequences import generate

polys = st.integers(min_value=1, max_value=(1 << 48) - 1).map(Gf2Poly)


def test_poly_basics():
    f = Gf2Poly.from_coeffs([1, 1, 0, 1])
    assert f.degree == 3
    assert str(f) == "x^3+x+1"
    assert Gf2Poly(0).degree == -1
    assert str(Gf2Poly(0)) == "0"
    assert str(ONE) == "1"
    assert (f + f).is_zero()
    q, r = divmod(f, X)
    assert q * X + r == f


def test_poly_from_seq():
    assert poly_from_seq(generate(build_field(5, 1))) == Gf2Poly(0b11)  # 1 + x
    assert str(poly_from_seq(generate(build_field(5, 1)))) == "x+1"
    assert poly_from_seq(generate(build_field(3, 1))) == ONE

    class FakeSeq:
        v = 4

        def as_int(self):
            return 0

    assert poly_from_seq(FakeSeq()).is_zero()


def test_gcd_fixtures():
    # x^4 + 1 = (x+1)^4 in characteristic 2
    assert gcd(Gf2Poly(0b10001), Gf2Poly(0b11)) == Gf2Poly(0b11)
    f = Gf2Poly(0b1011001)
    assert gcd(f, Gf2Poly(0)) == f
    assert gcd(Gf2Poly(0), f) == f
    with pytest.raises(ValueError):
        gcd(Gf2Poly(0), Gf2Poly(0))


def test_gcd_reference_q25():
    seq = generate(build_field(5, 2))
    g = gcd(poly_from_seq(seq), x_pow_plus_one(24))
    assert factored_str(factor(g)) == "(x+1)^4"


@given(a=polys, b=polys, c=polys)
@settings(max_examples=150, deadline=None)
def test_gcd_properties(a, b, c):
    g = gcd(a, b)
    assert g.divides(a) and g.divides(b)
    assert gcd(a, b) == gcd(b, a)
    assert gcd(gcd(a, b), c) == gcd(a, gcd(b, c))


def test_factor_fixtures():
    assert factor(Gf2Poly(0b111)) == [(Gf2Poly(0b111), 1)]  # irreducible quadratic
    # x^7 + 1: oracle below divides out all cubics exhaustively
    f = Gf2Poly((1 << 7) | 1)
    got = factor(f)
    cubics = [Gf2Poly(bits) for bits in range(0b1000, 0b10000) if Gf2Poly(bits).divides(f)]
    assert [g for g, _ in got] == sorted([Gf2Poly(0b11)] + cubics, key=lambda g: (g.degree, g.bits))
    assert all(e == 1 for _, e in got)

    p4 = Gf2Poly(0b11)
    p4 = p4 * p4 * p4 * p4
    assert factor(p4) == [(Gf2Poly(0b11), 4)]
    with pytest.raises(ValueError):
        factor(ONE)
    with pytest.raises(ValueError):
        factor(Gf2Poly(0))


@given(bits=st.integers(min_value=2, max_value=(1 << 44) - 1))
@settings(max_examples=150, deadline=None)
def test_factor_recombines_and_is_irreducible(bits):
    f = Gf2Poly(bits)
    fac = factor(f)
    assert recombine(fac) == f
    for g, e in fac:
        assert g.is_irreducible()
        assert e >= 1
    assert fac == sorted(fac, key=lambda item: (item[0].degree, item[0].bits))


def test_factor_squarefree_structured_case():
    # two reciprocal degree-18 irreducibles that defeat naive trace splitting
    f = Gf2Poly(0x145114514F)
    parts = factor_squarefree(f)
    assert len(parts) == 2
    assert all(g.degree == 18 and g.is_irreducible() for g in parts)
    assert parts[0] * parts[1] == f


def test_cyclotomic_cosets():
    assert cyclotomic_cosets(5) == [[0], [1, 2, 4, 3]]
    assert cyclotomic_cosets(7) == [[0], [1, 2, 4], [3, 6, 5]]
    assert cyclotomic_cosets(3) == [[0], [1, 2]]
    with pytest.raises(ValueError):
        cyclotomic_cosets(6)


def test_minimal_polys_fixtures():
    assert minimal_polys_of_order(5) == [Gf2Poly(0b11111)]
    assert [str(g) for g in minimal_polys_of_order(5)] == ["x^4+x^3+x^2+x+1"]
    assert [str(g) for g in minimal_polys_of_order(7)] == ["x^3+x+1", "x^3+x^2+1"]
    assert [str(g) for g in minimal_polys_of_order(3)] == ["x^2+x+1"]
    with pytest.raises(ValueError):
        minimal_polys_of_order(10)


@pytest.mark.parametrize("k", [3, 5, 7, 9, 11, 15, 21, 23, 31, 33, 35])
def test_coset_minimal_poly_product(k):
    prod = ONE
    for orbit, g in coset_minimal_polys(k):
        assert g.is_irreducible()
        assert g.degree == len(orbit)
        prod = prod * g
    assert prod == all_ones_poly(k)


@pytest.mark.parametrize("q,k", [(25, 3), (361, 5), (729, 7), (81, 5)])
def test_all_ones_divides_x_pow_plus_one(q, k):
    assert (q - 1) % k == 0
    assert all_ones_poly(k).divides(x_pow_plus_one(q - 1))


def test_linear_complexity_fixtures():
    assert linear_complexity(generate(build_field(5, 1))) == 3
    assert linear_complexity(generate(build_field(5, 2))) == 20
    assert linear_complexity(generate(build_field(3, 4))) == 70

    class ZeroSeq:
        v = 4

        def as_int(self):
            return 0

    with pytest.warns(UserWarning):
        assert linear_complexity(ZeroSeq()) == 0


def test_berlekamp_massey_fixtures():
    seq = generate(build_field(5, 1))
    big_l, conn = berlekamp_massey(seq)
    assert big_l == 3
    assert conn.coeff(0) == 1

    ones = SimpleNamespace(v=2, bits=np.array([1, 1], dtype=np.uint8))
    big_l, conn = berlekamp_massey(ones)
    assert big_l == 1

    seq25 = generate(build_field(5, 2))
    assert berlekamp_massey(seq25)[0] == 20

    with pytest.raises(ValueError):
        berlekamp_massey(seq, n_terms=5)


@pytest.mark.parametrize("p,m", [(5, 1), (7, 1), (3, 2), (13, 1), (3, 4), (5, 2), (11, 2)])
def test_bm_agrees_with_gcd_formula_and_regenerates(p, m):
    seq = generate(build_field(p, m))
    want = linear_complexity(seq)
    big_l, conn = berlekamp_massey(seq)
    assert big_l == want
    bits = [int(b) for b in seq.bits] * 2
    regen = lfsr_regenerate(conn, big_l, bits[:big_l], len(bits))
    assert regen == bits


def test_factored_str_format():
    f = Gf2Poly(0b11)
    items = [(f, 4), (Gf2Poly(0b111), 1)]
    assert factored_str(items) == "(x+1)^4 (x^2+x+1)"
    assert factored_str([]) == "1"


def test_smallest_irreducible():
    assert smallest_irreducible(1) == X
    assert str(smallest_irreducible(2)) == "x^2+x+1"
    assert str(smallest_irreducible(3)) == "x^3+x+1"
    got = smallest_irreducible(11)
    assert got.degree == 11 and got.is_irreducible()

import pytest
from hypothesis import given, strategies as st

from hyperquad import GF, RationalFunctionField, UPoly
from hyperquad.factor import FactorShape, ddf, edf, factor, is_irreducible, shape, squarefree

from oracles import brute_shape, monic_irreducibles

TABLE_P = [9, 7, 1, 0, 0, 1]                    # x^5 + x^2 + 7x + 9
TABLE_H = [2, 7] + [0] * 9 + [7, 1]             # x^12 + 7x^11 + 7x + 2


# ---- examples

def test_squarefree_examples(F11):
    assert not squarefree(UPoly([1, 2, 1], F11))
    assert squarefree(UPoly(TABLE_P, F11))
    F5 = GF(5)
    assert squarefree(UPoly([0, -1, 0, 0, 0, 1], F5))
    # p-th power has zero derivative
    assert not squarefree(UPoly([1, 0, 0, 0, 0, 1], F5))


def test_ddf_examples():
    F5 = GF(5)
    assert ddf(UPoly([1, 0, 1], F5)) == [(1, UPoly([1, 0, 1], F5))]
    assert ddf(UPoly([2, 0, 1], F5)) == [(2, UPoly([2, 0, 1], F5))]
    F11 = GF(11)
    parts = dict(ddf(UPoly(TABLE_H, F11)))
    assert {d: g.degree for d, g in parts.items()} == {1: 2, 2: 10}


def test_ddf_rejects_bad_input(F11):
    with pytest.raises(ValueError):
        ddf(UPoly([1, 2, 1], F11))
    with pytest.raises(ValueError):
        ddf(UPoly([1, 2, 3], F11))
    with pytest.raises(TypeError):
        ddf(UPoly([1, 0, 1], RationalFunctionField(11)))


def test_shape_examples(F11):
    s = shape(UPoly(TABLE_P, F11))
    assert s.counts == {2: 2, 1: 1} and str(s) == '2^2*1'
    h = shape(UPoly(TABLE_H, F11))
    assert h.counts == {2: 5, 1: 2} and str(h) == '2^5*1^2'
    assert h.factor_count == 7 == (11 + 3) // 2
    assert str(shape(UPoly([3, 1], F11))) == '1'
    with pytest.raises(ValueError):
        shape(UPoly([1, 2, 1], F11))


def test_shape_string_round_trip():
    for text in ['2^2*1', '2^5*1^2', '1', '3*2^4*1^7']:
        assert str(FactorShape.parse(text)) == text
    assert FactorShape.parse('2^5*1^2').degree == 12


def test_edf_examples():
    F5 = GF(5)
    for seed in range(5):
        assert edf(UPoly([1, 0, 1], F5), 1, seed) == [UPoly([2, 1], F5), UPoly([3, 1], F5)]
    g = UPoly([2, 0, 1], F5)
    assert edf(g, 2) == [g]


def test_is_irreducible(F11):
    assert not is_irreducible(UPoly(TABLE_P, F11))
    assert is_irreducible(UPoly([1, 0, 1], F11))     # -1 is not a square mod 11
    assert is_irreducible(UPoly([5, 1], F11))
    assert not is_irreducible(UPoly([1, 2, 1], F11))


def _prod(fs, F):
    out = UPoly.one(F)
    for f in fs:
        out = out * f
    return out


@given(st.sampled_from([2, 3, 5, 7, 11, 13]), st.lists(st.integers(0, 12), min_size=1, max_size=6))
def test_ddf_reconstruction_and_brute_force(p, cs):
    F = GF(p)
    f = UPoly([c % p for c in cs] + [1], F)
    if not squarefree(f):
        return
    parts = ddf(f)
    assert _prod([g for _, g in parts], F) == f
    s = shape(f)
    assert s.degree == f.degree
    assert s.counts == brute_shape([c % p for c in cs] + [1], p)


@given(st.sampled_from([2, 3, 5, 7]), st.lists(st.integers(0, 6), min_size=1, max_size=7),
       st.integers(0, 1000))
def test_factor_partition(p, cs, seed):
    F = GF(p)
    f = UPoly([c % p for c in cs] + [1], F)
    if not squarefree(f):
        return
    fs = factor(f, seed)
    assert _prod(fs, F) == f
    assert all(is_irreducible(g) for g in fs)
    assert fs == factor(f, seed + 1)


def test_monic_irreducible_counts():
    # sanity of the oracle: Gauss's count (1/d) sum mu(d/k) p^k
    assert len(monic_irreducibles(2, 4)) == 3
    assert len(monic_irreducibles(3, 3)) == 8
    assert len(monic_irreducibles(5, 2)) == 10

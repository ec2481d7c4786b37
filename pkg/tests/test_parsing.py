import random

import pytest
from hypothesis import given, strategies as st

from hyperquad import GF, RationalFunctionField, SymbolicField, UPoly
from hyperquad.parsing import ParseError, parse_poly, parse_scalar


def test_parse_fp_example():
    P = parse_poly('x^5+x^2+7*x+9', 'fp', p=11)
    assert [int(c) for c in P.coeffs] == [9, 7, 1, 0, 0, 1]


def test_parse_reduces_mod_p():
    assert parse_poly('13*x - 1', 'fp', p=11) == UPoly([10, 2], GF(11))


def test_parse_sym_example(S, sym):
    assert parse_poly('x^2+a*x+b', 'sym') == UPoly([sym['b'], sym['a'], 1], S)
    assert parse_poly('(a/b + 1/2)*x', 'sym') == UPoly([0, sym['a'] / sym['b'] + S(1) / 2], S)


def test_parse_ratfunc_example(K11):
    P = parse_poly('x^2+(T)*x+(1)', 'ratfunc', p=11)
    assert P == UPoly([1, K11.T, 1], K11)
    assert parse_poly('((T^2+1)/(T-1))*x', 'ratfunc', p=11).coeff(1) == \
        (K11.T ** 2 + 1) / (K11.T - 1)


def test_whitespace_and_signs():
    assert parse_poly(' - x ^ 2 +  3 ', 'fp', p=7) == UPoly([3, 0, 6], GF(7))
    assert parse_poly('x*x*2', 'fp', p=7) == UPoly([0, 0, 2], GF(7))


@pytest.mark.parametrize('text,pos', [('x^2+*x', 4), ('x^2 + y', 6), ('x/2', 1), ('x^2 $ 1', 4)])
def test_syntax_errors_have_positions(text, pos):
    with pytest.raises(ParseError) as info:
        parse_poly(text, 'fp', p=11)
    assert info.value.pos == pos


def test_other_errors():
    with pytest.raises(ParseError, match='modulus'):
        parse_poly('x+1', 'fp')
    with pytest.raises(ParseError, match='unknown symbol'):
        parse_poly('x+q', 'sym')
    with pytest.raises(ParseError):
        parse_poly('(x)*x', 'fp', p=5)
    with pytest.raises(ParseError, match='division by zero'):
        parse_poly('(1/0)*x', 'fp', p=5)
    with pytest.raises(ParseError):
        parse_poly('x^', 'fp', p=5)
    with pytest.raises(ParseError):
        parse_poly('x+1', 'fp', p=12)
    with pytest.raises(ParseError, match='mode'):
        parse_poly('x+1', 'bogus', p=5)


def test_parse_scalar(S, sym):
    assert parse_scalar('-a^2/12', 'sym') == -sym['a'] ** 2 / 12
    with pytest.raises(ParseError):
        parse_scalar('x', 'sym')


def test_custom_variables():
    P = parse_poly('x^2+s*x+tp', 'sym', variables=['s', 't'])
    assert P.field.variables == ('s', 't', 'sp', 'tp')


@given(st.sampled_from([2, 5, 11, 101]), st.lists(st.integers(0, 100), max_size=8))
def test_round_trip_fp(p, cs):
    P = UPoly([c % p for c in cs], GF(p))
    text = str(P)
    Q = parse_poly(text, 'fp', p=p)
    assert Q == P and str(Q) == text


@given(st.integers(0, 2 ** 32))
def test_round_trip_ratfunc(seed):
    rng = random.Random(seed)
    K = RationalFunctionField(rng.choice([5, 7, 11]))
    P = UPoly([K.random(rng) for _ in range(rng.randint(0, 4))], K)
    text = str(P)
    Q = parse_poly(text, 'ratfunc', p=K.p)
    assert Q == P and str(Q) == text


@given(st.integers(0, 2 ** 32))
def test_round_trip_sym(seed):
    rng = random.Random(seed)
    S = SymbolicField()
    P = UPoly([S.random(rng, fraction=rng.random() < 0.5) for _ in range(rng.randint(0, 3))], S)
    text = str(P)
    Q = parse_poly(text, 'sym')
    assert Q == P and str(Q) == text

"""Exponent enumeration, indexing, multinomials, monomial evaluation."""

from __future__ import annotations

import math

import pytest

from verolab import (
    IndexOutOfRange,
    enumerate_exponents,
    eval_monomial,
    exponent_index,
    index_exponent,
    multinomial,
    num_monomials,
    parse_field,
    rationals,
)
from verolab.field import int_in_field


def test_enumerate_n2_d2():
    assert list(enumerate_exponents(2, 2)) == [(2, 0), (1, 1), (0, 2)]
    assert num_monomials(2, 2) == 3


def test_enumerate_n3_d2():
    exps = enumerate_exponents(3, 2)
    assert len(exps) == 6
    assert exps[0] == (2, 0, 0) and exps[-1] == (0, 0, 2)


def test_enumerate_degree_zero():
    assert list(enumerate_exponents(4, 0)) == [(0, 0, 0, 0)]


@pytest.mark.parametrize("n", range(1, 7))
@pytest.mark.parametrize("d", range(0, 7))
def test_counts(n, d):
    assert len(enumerate_exponents(n, d)) == math.comb(d + n - 1, d)


def test_descending_lex_order():
    exps = enumerate_exponents(3, 3)
    assert all(exps[i] > exps[i + 1] for i in range(len(exps) - 1))


def test_index_round_trip():
    assert exponent_index((1, 1)) == 1
    assert index_exponent(3, 2, 0) == (2, 0, 0)
    for i, alpha in enumerate(enumerate_exponents(3, 3)):
        assert exponent_index(alpha) == i
        assert index_exponent(3, 3, i) == alpha
    with pytest.raises(IndexOutOfRange):
        index_exponent(3, 3, 99)
    with pytest.raises(IndexOutOfRange):
        exponent_index((1, 1, -2))


def test_multinomial_examples():
    f2, f5, q = parse_field("F2"), parse_field("F5"), rationals()
    n, img = multinomial(2, (1, 1), f2)
    assert n == 2 and img.v == 0
    n, img = multinomial(3, (2, 1), q)
    assert n == 3 and str(img) == "3/1"
    n, img = multinomial(4, (2, 2), f5)
    assert n == 6 and img.value == (1,)


@pytest.mark.parametrize("n", range(1, 6))
@pytest.mark.parametrize("d", range(0, 6))
def test_multinomial_sum_identity(n, d):
    q = rationals()
    total = sum(multinomial(d, alpha, q)[0] for alpha in enumerate_exponents(n, d))
    assert total == n ** d


def test_eval_monomial_examples():
    q = rationals()
    t = (int_in_field(q, 2), int_in_field(q, 3))
    assert str(eval_monomial(t, (1, 1))) == "6/1"
    t2 = (int_in_field(q, 0), int_in_field(q, 5))
    assert str(eval_monomial(t2, (2, 0))) == "0/1"
    ones = tuple(int_in_field(q, 1) for _ in range(3))
    for alpha in enumerate_exponents(3, 4):
        assert str(eval_monomial(ones, alpha)) == "1/1"


def test_eval_monomial_zero_to_the_zero():
    f = parse_field("F3")
    t = (f.zero(), f.one())
    assert eval_monomial(t, (0, 2)) == f.one()

"""Field construction, arithmetic, enumeration, and integer images."""

from __future__ import annotations

import itertools

import pytest

from verolab import (
    DivisionByZero,
    FieldMismatch,
    InfiniteField,
    NonPrimeP,
    enumerate_elements,
    field_make,
    int_in_field,
    parse_field,
    rationals,
)
from verolab.field import Scalar, _poly_divmod_p, scalar_from_str


def all_monic(p, deg):
    for tail in itertools.product(range(p), repeat=deg):
        yield tuple(tail) + (1,)


def test_gf2_has_no_modulus():
    f = field_make("finite", 2, 1)
    assert f.q == 2 and f.modulus is None


def test_gf4_modulus_is_unique_irreducible_quadratic():
    # oracle: trial-divide all 4 monic quadratics over GF(2) by the two
    # monic linears; exactly one survives
    survivors = []
    for g in all_monic(2, 2):
        if all(_poly_divmod_p(g, lin, 2)[1] for lin in all_monic(2, 1)):
            survivors.append(g)
    assert survivors == [(1, 1, 1)]
    assert field_make("finite", 2, 2).modulus == (1, 1, 1)


def test_rational_spec():
    f = field_make("rational")
    assert not f.is_finite and f.char == 0 and f.name == "Q"


def test_field_make_rejects_bad_orders():
    with pytest.raises(NonPrimeP):
        field_make("finite", 4, 1)
    with pytest.raises(NonPrimeP):
        field_make("finite", 2, 0)
    with pytest.raises(NonPrimeP):
        parse_field("F6")
    with pytest.raises(NonPrimeP):
        parse_field("F1")


def test_field_make_deterministic_across_calls():
    a = field_make("finite", 3, 2)
    b = parse_field("F9")
    assert a == b and a.modulus == b.modulus


def test_arith_gf3():
    f = parse_field("F3")
    two = int_in_field(f, 2)
    assert (two + two).value == (1,)


def test_arith_gf4_generator_square():
    f = parse_field("F4")
    w = enumerate_elements(f)[2]
    assert w.value == (0, 1)
    assert (w * w).value == (1, 1)  # x^2 reduces to x + 1


def test_arith_rationals():
    q = rationals()
    half = scalar_from_str(q, "1/2")
    third = scalar_from_str(q, "1/3")
    assert str(half + third) == "5/6"


def test_arith_errors():
    f = parse_field("F5")
    with pytest.raises(DivisionByZero):
        f.one() / f.zero()
    with pytest.raises(DivisionByZero):
        f.zero().inv()
    with pytest.raises(FieldMismatch):
        f.one() + parse_field("F7").one()


def test_enumeration_orders():
    assert [s.value for s in enumerate_elements(parse_field("F2"))] == [(0,), (1,)]
    assert [s.value for s in enumerate_elements(parse_field("F3"))] == [(0,), (1,), (2,)]
    assert [s.value for s in enumerate_elements(parse_field("F4"))] == [
        (0, 0), (1, 0), (0, 1), (1, 1),
    ]
    with pytest.raises(InfiniteField):
        enumerate_elements(rationals())


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9])
def test_field_axioms_exhaustive(q):
    f = parse_field(f"F{q}")
    els = enumerate_elements(f)
    for a in els:
        for b in els:
            assert a + b == b + a
            assert a * b == b * a
            for c in els:
                assert (a + b) + c == a + (b + c)
                assert (a * b) * c == a * (b * c)
                assert a * (b + c) == a * b + a * c
    one = f.one()
    for a in els[1:]:
        assert a.inv() * a == one
        assert a / a == one


@pytest.mark.parametrize("q", [2, 3, 4, 5, 8, 9, 11])
def test_char_detection(q):
    f = parse_field(f"F{q}")
    assert int_in_field(f, f.char).v == f.zero_raw
    for n in range(1, f.char):
        assert int_in_field(f, n).v != f.zero_raw


def test_int_in_field_examples():
    assert int_in_field(parse_field("F3"), 6).value == (0,)
    assert int_in_field(parse_field("F5"), 12).value == (2,)  # 4!/(4-2)! = 12
    assert str(int_in_field(rationals(), 7)) == "7/1"


def test_scalar_pow_and_zero_conventions():
    f = parse_field("F5")
    z = f.zero()
    assert (z ** 0).value == (1,)  # 0^0 = 1 by convention
    a = int_in_field(f, 2)
    assert (a ** 4).value == (1,)


def test_large_prime_field_ops():
    f = parse_field("F101")
    a, b = int_in_field(f, 40), int_in_field(f, 70)
    assert (a * b).v == (40 * 70) % 101
    assert (a / b * b) == a


def test_extension_field_beyond_table_limit():
    f = parse_field("F128")
    els = [Scalar(f, i) for i in (1, 2, 57, 100)]
    for a in els:
        assert (a * a.inv()).v == 1

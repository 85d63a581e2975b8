from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from nodalis.errors import FieldError
from nodalis.field import QQ, adjoin_sqrt, is_square, parse_field, prime_field, sqrt, squarefree_rational

from conftest import FIELDS, coeff_strategy

F7 = prime_field(7)


def _primes_upto(n):
    return [p for p in range(3, n + 1) if all(p % q for q in range(2, int(p ** 0.5) + 1))]


# -- examples ---------------------------------------------------------------------


def test_rational_squares():
    assert is_square(QQ(Fraction(4, 9)))
    assert not is_square(QQ(2))
    assert sqrt(QQ(Fraction(9, 4))) == Fraction(3, 2)
    assert sqrt(QQ(3)) is None
    assert sqrt(QQ(0)) == 0


def test_f7_squares_match_enumeration():
    squares = {(r * r) % 7 for r in range(7)}
    for a in range(7):
        assert is_square(F7(a)) == (a in squares)
    assert is_square(F7(2)) and not is_square(F7(3))


def test_f7_sqrt_takes_smaller_residue():
    assert sqrt(F7(2)).raw == 3
    for a in range(1, 7):
        r = sqrt(F7(a))
        if r is not None:
            assert r.raw == min(x for x in range(7) if x * x % 7 == a)


def test_extension_examples():
    E = adjoin_sqrt(QQ, -1)
    assert is_square(E(-1))
    R = adjoin_sqrt(QQ, 2)
    assert sqrt(R(2)) == R((0, 1))
    z = R((3, 2))  # 3 + 2*sqrt(2) = (1 + sqrt(2))^2
    assert is_square(z)
    s = sqrt(z)
    assert s * s == z
    assert s in (R((1, 1)), R((-1, -1)))


def test_extension_canonical_sign_is_lexicographic():
    R = adjoin_sqrt(QQ, 2)
    s = sqrt(R((3, 2)))
    assert s == R((1, 1))


def test_characteristic_two_and_composites_rejected():
    with pytest.raises(FieldError):
        prime_field(2)
    for n in (1, 9, 15, 91, 561):
        with pytest.raises(FieldError):
            prime_field(n)


def test_adjoin_rejects_squares_and_towers():
    with pytest.raises(FieldError):
        adjoin_sqrt(QQ, 4)
    with pytest.raises(FieldError):
        adjoin_sqrt(F7, 2)
    E = adjoin_sqrt(QQ, -1)
    with pytest.raises(FieldError):
        adjoin_sqrt(E, 3)


def test_parse_field_roundtrip():
    for text in ("q", "fp:7", "q-adjoin:-1", "fp:7-adjoin:3", "q-adjoin:2"):
        assert str(parse_field(text)) == text
    for bad in ("z", "fp:2", "fp:x", "q-adjoin:9"):
        with pytest.raises(FieldError):
            parse_field(bad)


def test_squarefree_class():
    assert squarefree_rational(Fraction(8)) == 2
    assert squarefree_rational(Fraction(-12, 25)) == -3
    assert squarefree_rational(Fraction(1, 2)) == 2


def test_rationals_canonical():
    x = QQ(Fraction(6, -4))
    assert x.raw == Fraction(-3, 2) and x.raw.denominator > 0
    assert F7(10).raw == 3 and F7(-1).raw == 6


def test_rational_into_prime_field():
    assert F7(Fraction(1, 2)) * 2 == 1


# -- properties --------------------------------------------------------------------


@pytest.mark.parametrize("desc", FIELDS, ids=str)
@given(data=st.data())
def test_field_axioms(desc, data):
    c = coeff_strategy(desc)
    a, b, e = data.draw(c), data.draw(c), data.draw(c)
    assert (a + b) + e == a + (b + e)
    assert (a * b) * e == a * (b * e)
    assert a * (b + e) == a * b + a * e
    assert a + (-a) == 0
    if not a.is_zero():
        assert a * a.inverse() == 1


@given(a=st.integers(-50, 50), b=st.integers(-50, 50))
def test_extension_axioms_and_sqrt(a, b):
    E = adjoin_sqrt(QQ, 3)
    z = E((a, b))
    w = E((b - 1, a + 2))
    assert (z + w) * w == z * w + w * w
    if not z.is_zero():
        assert z * z.inverse() == 1
    sq = z * z
    assert is_square(sq)
    assert sqrt(sq) ** 2 == sq


@pytest.mark.parametrize("desc", FIELDS, ids=str)
@given(data=st.data())
def test_sqrt_squares_back(desc, data):
    e = data.draw(coeff_strategy(desc))
    s = sqrt(e)
    assert (s is not None) == is_square(e)
    if s is not None:
        assert s * s == e


def test_euler_criterion_all_residues():
    for p in _primes_upto(101):
        K = prime_field(p)
        for a in range(p):
            euler = a == 0 or pow(a, (p - 1) // 2, p) == 1
            assert is_square(K(a)) == euler, (p, a)


@pytest.mark.parametrize("p,d", [(5, 2), (7, 3), (11, 2), (13, 5)])
def test_extension_of_prime_field_squares_by_enumeration(p, d):
    E = adjoin_sqrt(prime_field(p), d)
    elems = [E((x, y)) for x in range(p) for y in range(p)]
    squares = {e * e for e in elems}
    for e in elems:
        assert is_square(e) == (e in squares)
        if is_square(e):
            assert sqrt(e) ** 2 == e

from fractions import Fraction

import pytest
import sympy
from hypothesis import assume, given, settings, strategies as st

from nodalis.errors import InsufficientPrecision, PreconditionError
from nodalis.field import QQ, prime_field
from nodalis.parsing import parse_polynomial as P
from nodalis.prep import factor_node_branches
from nodalis.series import AtLeast
from nodalis.translate import (
    branch_gap_unit,
    check_direction,
    translation_intersections,
    transversality,
)

from conftest import coeff_strategy, nodal_curves

t = sympy.Symbol("t")


def fr(s):
    return [c.to_fraction() for c in s.coeffs]


@pytest.fixture
def cubic(nodal_cubic):
    return nodal_cubic, factor_node_branches(nodal_cubic, 14)


def test_check_direction(cubic):
    F, b = cubic
    assert check_direction(F, b, 0, 1)
    assert not check_direction(F, b, 1, 1)
    assert not check_direction(F, b, 1, -1)
    assert check_direction(F, b, 1, 0)
    G = P("Y^2 - X^2")
    assert check_direction(G, factor_node_branches(G, 4), 1, 0)
    with pytest.raises(PreconditionError):
        check_direction(F, b, 0, 0)


def test_branch_gap_unit(cubic):
    _, b = cubic
    U = branch_gap_unit(b)
    ref = sympy.series(2 * sympy.sqrt(1 + t), t, 0, 6).removeO()
    assert fr(U)[:6] == [Fraction(str(sympy.Poly(ref, t).coeff_monomial(t ** k))) for k in range(6)]
    assert fr(branch_gap_unit(factor_node_branches(P("Y^2 - X^2"), 5)))[0] == 2
    u0 = branch_gap_unit(factor_node_branches(P("(Y-X)*(Y-2*X) + X^3"), 5))[0].to_fraction()
    assert abs(u0) == 1


def _reversion_oracle(n):
    """c with c * 2 sqrt(1 + c) = t, by sympy series reversion."""
    c = sympy.Symbol("c")
    f = sympy.series(c * 2 * sympy.sqrt(1 + c), c, 0, n + 1).removeO()
    # undetermined coefficients
    a = sympy.symbols(f"a1:{n}")
    cs = sum(ai * t ** (i + 1) for i, ai in enumerate(a))
    eq = sympy.expand(sympy.series(f.subs(c, cs), t, 0, n).removeO()) - t
    sol = sympy.solve([eq.coeff(t, k) for k in range(1, n)], a, dict=True)[0]
    return [Fraction(0)] + [Fraction(str(sol[ai])) for ai in a]


def test_c1_nodal_cubic(cubic):
    F, b = cubic
    rep = translation_intersections(F, b, 0, 1, 8)
    assert fr(rep.c1)[:4] == [0, Fraction(1, 2), Fraction(-1, 8), Fraction(5, 64)]
    assert fr(rep.c1) == _reversion_oracle(8)
    assert rep.ok
    assert rep.q_on_C_residual == (AtLeast(8), AtLeast(8))
    assert rep.q_on_Ct_residual == (AtLeast(8), AtLeast(8))
    assert rep.distinctness_ord == 1
    assert rep.transversality_ord == (0, 0)


def test_two_lines_exact():
    F = P("Y^2 - X^2")
    rep = translation_intersections(F, factor_node_branches(F, 6), 0, 1, 6)
    half = Fraction(1, 2)
    assert fr(rep.c1) == [0, half, 0, 0, 0, 0]
    assert fr(rep.c2) == [0, -half, 0, 0, 0, 0]
    (x1, y1), (x2, y2) = rep.points
    assert (fr(x1)[:2], fr(y1)[:2]) == ([0, half], [0, half])
    assert (fr(x2)[:2], fr(y2)[:2]) == ([0, -half], [0, half])
    assert rep.exact_membership == (True, True)


def test_transversality_limits(cubic):
    F, b = cubic
    rep = translation_intersections(F, b, 0, 1, 8)
    assert transversality(rep.frame_poly, rep) == (0, 0)


def test_numeric_spot_check(cubic):
    # truncated q_1(1/100) leaves residuals of the size of the dropped tail
    F, b = cubic
    N = 10
    rep = translation_intersections(F, b, 0, 1, N)
    t0 = Fraction(1, 100)
    (x1, y1), _ = rep.points
    px, py = x1.evaluate(t0), y1.evaluate(t0)
    on_c = abs(F.evaluate(QQ(px), QQ(py)).to_fraction())
    on_ct = abs(F.evaluate(QQ(px), QQ(py - t0)).to_fraction())
    tail = t0 ** N * 10
    assert on_c < tail and on_ct < tail
    assert on_c != 0  # the truncation is not exact here


def test_precision_and_direction_errors(cubic):
    F, b = cubic
    with pytest.raises(InsufficientPrecision):
        translation_intersections(F, b, 0, 1, 1)
    with pytest.raises(PreconditionError):
        translation_intersections(F, b, 1, 1, 6)


@pytest.mark.parametrize("direction", [(0, 1), (1, 0), (1, 2), (2, -3)])
def test_directions_on_cubic(cubic, direction):
    F, b = cubic
    rep = translation_intersections(F, b, *direction, 10)
    assert rep.ok


@settings(max_examples=20)
@given(nodal_curves(QQ, max_deg=4), coeff_strategy(QQ), coeff_strategy(QQ), st.integers(4, 9))
def test_random_translation(data, u, v, N):
    F, _ = data
    assume(not (u.is_zero() and v.is_zero()))
    b = factor_node_branches(F, N + 2)
    assume(check_direction(F, b, u, v))
    rep = translation_intersections(F, b, u, v, N)
    assert all(isinstance(r, AtLeast) for r in rep.q_on_C_residual + rep.q_on_Ct_residual)
    assert rep.distinctness_ord == 1
    assert rep.transversality_ord == (0, 0)
    # leading coefficient of c1 - c2 is 2/U(0)
    U0 = branch_gap_unit(rep.frame_branches)[0]
    assert (rep.c1 - rep.c2)[1] == 2 / U0


@settings(max_examples=15)
@given(nodal_curves(prime_field(13), max_deg=4), st.integers(4, 8))
def test_random_translation_prime_field(data, N):
    F, _ = data
    b = factor_node_branches(F, N + 2)
    assume(check_direction(F, b, 0, 1))
    assert translation_intersections(F, b, 0, 1, N).ok

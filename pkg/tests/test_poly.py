
import pytest
import sympy
from hypothesis import assume, given, strategies as st

from nodalis.errors import NeedsExtension
from nodalis.field import QQ, adjoin_sqrt, prime_field
from nodalis.parsing import parse_polynomial as P
from nodalis.poly import (
    AffinePoint,
    BivariatePoly,
    LinearForm,
    divides,
    divmod_poly,
    homogeneous_part,
    linear_change,
    partials,
    restrict_to_line,
    resultant_y,
    split_binary_quadratic,
    translate_to_origin,
)

from conftest import FIELDS, poly_strategy, small_fractions

sx, sy = sympy.symbols("x y")


def to_sympy(F):
    return sum(
        sympy.Rational(str(c.to_fraction())) * sx ** i * sy ** j for (i, j), c in F.coefficients().items()
    ) if F.terms else sympy.Integer(0)


def upoly(coeffs):
    """Univariate FieldElement list (low to high) as a sympy expression in x."""
    return sum(sympy.Rational(str(c.to_fraction())) * sx ** k for k, c in enumerate(coeffs))


# -- examples ---------------------------------------------------------------------------


def test_homogeneous_parts():
    F = P("Y^2 - X^2 - X^3")
    assert homogeneous_part(F, 2) == P("Y^2 - X^2")
    assert homogeneous_part(F, 1).is_zero()
    assert homogeneous_part(P("X*Y + X^3"), 3) == P("X^3")


def test_translate_examples():
    one = AffinePoint.of(QQ, 1, 1)
    assert translate_to_origin(P("Y - X"), one) == P("Y - X")
    assert translate_to_origin(P("Y - X^2"), one) == P("Y - X^2 - 2*X")
    F = P("3*X^2*Y - Y + 7")
    assert translate_to_origin(F, AffinePoint.of(QQ, 0, 0)) == F


def test_linear_change_examples():
    # X -> Y - X, Y -> Y + X
    assert linear_change(P("X*Y"), -1, 1, 1, 1) == P("Y^2 - X^2")
    F = P("X^3 - 2*X*Y + 5")
    assert linear_change(F, 1, 0, 0, 1) == F
    assert linear_change(P("X"), 0, 1, 1, 0) == P("Y")
    with pytest.raises(ValueError):
        linear_change(F, 1, 2, 2, 4)


def test_split_examples():
    s = split_binary_quadratic(P("Y^2 - X^2"))
    assert {s.l1, s.l2} == {LinearForm.slope(QQ, 1), LinearForm.slope(QQ, -1)} and s.distinct
    s = split_binary_quadratic(P("Y^2 - 2*X*Y + X^2"))
    assert s.l1 == s.l2 == LinearForm.slope(QQ, 1) and not s.distinct
    with pytest.raises(NeedsExtension) as e:
        split_binary_quadratic(P("X^2 + Y^2"))
    assert e.value.d == -1
    with pytest.raises(NeedsExtension) as e:
        split_binary_quadratic(P("Y^2 - 8*X^2"))
    assert e.value.d == 2
    with pytest.raises(ValueError):
        split_binary_quadratic(P("Y^2 + X"))


def test_split_without_y_squared():
    s = split_binary_quadratic(P("X^2 + 3*X*Y"))
    assert s.distinct and s.l1 == LinearForm.of(QQ, 1, 0) and s.l2 == LinearForm.of(QQ, 1, 3)
    s = split_binary_quadratic(P("X*Y"))
    assert s.distinct and {s.l1, s.l2} == {LinearForm.of(QQ, 1, 0), LinearForm.of(QQ, 0, 1)}
    assert not split_binary_quadratic(P("X^2")).distinct


def test_split_over_extension():
    E = adjoin_sqrt(QQ, -1)
    s = split_binary_quadratic(P("X^2 + Y^2", E))
    assert s.distinct
    assert (s.l1.as_poly() * s.l2.as_poly()).scale(s.const) == P("X^2 + Y^2", E)


def test_restrict_examples():
    F = P("Y^2 - X^2 - X^3")
    r = restrict_to_line(F, LinearForm.slope(QQ, 1))
    assert r.variable == "X" and list(r.coeffs) == [0, 0, 0, -1]
    r = restrict_to_line(F, LinearForm.slope(QQ, 2))
    assert list(r.coeffs) == [0, 0, 3, -1] and r.ord() == 2
    r = restrict_to_line(P("Y"), LinearForm.of(QQ, 1, 0))
    assert r.variable == "Y" and list(r.coeffs) == [0, 1]
    assert restrict_to_line(P("Y^2 - X^2"), LinearForm.slope(QQ, 1)).ord() is None


def test_resultant_examples():
    r = resultant_y(P("Y^2 - X^2 - X^3"), P("Y - X"))
    assert sympy.expand(upoly(r) - (-sx ** 3)) == 0 or sympy.expand(upoly(r) - sx ** 3) == 0
    r = resultant_y(P("Y - X"), P("Y + X"))
    assert sympy.expand(upoly(r) ** 2 - 4 * sx ** 2) == 0
    assert resultant_y(P("Y^2 - X^2"), P("Y - X")) == []
    with pytest.raises(ValueError):
        resultant_y(P("X"), P("Y"))


def test_resultant_sign_convention():
    # Sylvester rows of F = Y + 1 first, then H = Y^3:
    # det [[1,1,0,0],[0,1,1,0],[0,0,1,1],[1,0,0,0]] = -1
    assert [c.to_fraction() for c in resultant_y(P("1 + Y"), P("Y^3"))] == [-1]
    assert [c.to_fraction() for c in resultant_y(P("Y^3"), P("1 + Y"))] == [1]


def test_partials_examples():
    assert partials(P("Y^2 - X^2 - X^3")) == (P("-2*X - 3*X^2"), P("2*Y"))
    fx, fy = partials(P("7"))
    assert fx.is_zero() and fy.is_zero()
    assert partials(P("X*Y")) == (P("Y"), P("X"))


def test_divides_examples():
    assert divides(P("Y - X"), P("(Y - X)*(Y + X^2)"))
    assert not divides(P("Y^2 - X^2 - X^3"), P("Y - X"))
    assert divides(P("Y^2 - X^2"), P("Y^2 - X^2"))
    assert divides(P("2*X + 1"), P("4*X^2 - 1"))


def test_format_and_degree():
    F = P("Y^2 - X^2 - X^3")
    assert F.degree == 3 and F.degree_x() == 2 + 1 and F.degree_y() == 2
    assert F.format() == "Y^2 - X^2 - X^3"
    assert BivariatePoly(QQ, {}).degree is None


def test_no_stored_zeros():
    F = P("X - X + Y")
    assert F.terms.keys() == {(0, 1)}
    assert P("X*Y - Y*X").is_zero()


def test_evaluate():
    assert P("Y^2 - X^2 - X^3").evaluate(1, 2) == 2
    K = prime_field(7)
    assert P("Y^2 - X^2 - X^3", K).evaluate(3, 3) == K(-27)


# -- properties --------------------------------------------------------------------------


points = st.builds(lambda a, b: AffinePoint.of(QQ, a, b), small_fractions, small_fractions)


@given(poly_strategy(max_deg=5), points)
def test_translate_roundtrip(F, p):
    assert translate_to_origin(translate_to_origin(F, p), -p) == F


@given(poly_strategy(max_deg=4), points)
def test_translate_matches_sympy(F, p):
    G = translate_to_origin(F, p)
    px, py = (sympy.Rational(str(c.to_fraction())) for c in (p.x, p.y))
    assert sympy.expand(to_sympy(G) - to_sympy(F).subs({sx: sx + px, sy: sy + py}, simultaneous=True)) == 0


@given(poly_strategy(max_deg=4), st.lists(small_fractions, min_size=4, max_size=4))
def test_linear_change_inverse(F, m):
    a, b, c, d = m
    det = a * d - b * c
    assume(det != 0)
    G = linear_change(F, a, b, c, d)
    assert G.degree == F.degree
    # inverse matrix
    assert linear_change(G, d / det, -b / det, -c / det, a / det) == F


@pytest.mark.parametrize("desc", FIELDS, ids=str)
@given(data=st.data())
def test_split_reconstructs(desc, data):
    Q = data.draw(poly_strategy(desc, max_deg=2, min_deg=2, max_terms=3))
    assume(not Q.is_zero())
    try:
        s = split_binary_quadratic(Q)
    except NeedsExtension as exc:
        E = adjoin_sqrt(desc, exc.d)
        Q = Q.change_field(E)
        s = split_binary_quadratic(Q)
    assert (s.l1.as_poly() * s.l2.as_poly()).scale(s.const) == Q
    assert s.distinct == (s.l1 != s.l2)


@given(poly_strategy(max_deg=3, min_deg=0), poly_strategy(max_deg=3, min_deg=0))
def test_resultant_matches_sympy(F, H):
    assume(F.degree_y() >= 1 and H.degree_y() >= 1)
    ours = upoly(resultant_y(F, H))
    ref = sympy.resultant(to_sympy(F), to_sympy(H), sy)
    # sign conventions differ between implementations; only ord and vanishing are used
    assert sympy.expand(ours - ref) == 0 or sympy.expand(ours + ref) == 0


@given(poly_strategy(max_deg=2, max_terms=4), poly_strategy(max_deg=2, max_terms=4),
       poly_strategy(max_deg=2, max_terms=4))
def test_resultant_vanishes_iff_common_factor(A, B, C):
    assume(A.degree_y() >= 1 and B.degree_y() + A.degree_y() >= 1 and C.degree_y() + A.degree_y() >= 1)
    F, H = A * B, A * C
    assume(not F.is_zero() and not H.is_zero())
    assert resultant_y(F, H) == []
    assert divides(A, F) and divides(A, H)


@given(poly_strategy(max_deg=3), poly_strategy(max_deg=3))
def test_divides_matches_sympy(F, H):
    assume(not F.is_zero())
    q, r = divmod_poly(H, F)
    assert q * F + r == H
    ref = sympy.div(sympy.Poly(to_sympy(H), sy, sx, domain="QQ"), sympy.Poly(to_sympy(F), sy, sx, domain="QQ"))[1]
    assert divides(F, H) == ref.is_zero
    assert divides(F, F * H) or H.is_zero()

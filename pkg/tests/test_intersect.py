import math
from fractions import Fraction

import pytest
import sympy
from hypothesis import assume, given, settings

from nodalis.errors import InsufficientPrecision, OracleError, PreconditionError
from nodalis.field import QQ, prime_field
from nodalis.intersect import (
    Contact,
    ExceedsBound,
    bezout_bound,
    branch_multiplicity,
    classify_smooth_contact,
    intersect_at_node,
    oracle_total_multiplicity,
)
from nodalis.parsing import parse_polynomial as P
from nodalis.poly import BivariatePoly, LinearForm
from nodalis.prep import factor_node_branches, node_branches
from nodalis.series import AtLeast, TruncatedSeries

from conftest import coeff_strategy, nodal_curves, poly_strategy

x = sympy.Symbol("x")


@pytest.fixture
def cubic_branches(nodal_cubic):
    return factor_node_branches(nodal_cubic, 12)


def _h_through_origin(desc=QQ, max_deg=4):
    return poly_strategy(desc, max_deg=max_deg, min_deg=1, max_terms=6).filter(lambda H: not H.is_zero())


def test_branch_multiplicity_examples(cubic_branches):
    e1, e2 = cubic_branches
    assert branch_multiplicity(P("Y - X"), e1, 8) == 2
    assert branch_multiplicity(P("Y - X"), e2, 8) == 1
    assert branch_multiplicity(P("Y - 2*X"), e1, 8) == 1
    assert branch_multiplicity(P("Y - 2*X"), e2, 8) == 1


def test_substituted_series_matches_sympy(cubic_branches):
    e1, _ = cubic_branches
    s = P("Y - X").eval_series(TruncatedSeries.variable(QQ, 12), e1)
    ref = sympy.series(x * sympy.sqrt(1 + x) - x, x, 0, 12).removeO()
    assert [c.to_fraction() for c in s.coeffs] == [
        Fraction(str(sympy.Poly(ref, x).coeff_monomial(x ** k))) for k in range(12)
    ]
    assert s[2].to_fraction() == Fraction(1, 2) and s[3].to_fraction() == Fraction(-1, 8)


def test_branch_multiplicity_exceeds_and_errors(cubic_branches):
    e1, _ = cubic_branches
    F = P("Y^2 - X^2 - X^3")
    assert branch_multiplicity(F, e1, 10) == ExceedsBound(10)
    assert str(ExceedsBound(10)) == "exceeds_10"
    with pytest.raises(PreconditionError):
        branch_multiplicity(P("Y - 1"), e1, 8)
    with pytest.raises(InsufficientPrecision):
        branch_multiplicity(P("Y"), e1, 40)


def test_intersect_examples(nodal_cubic, cubic_branches):
    r = intersect_at_node(nodal_cubic, P("Y - X"), cubic_branches, oracle=True)
    assert (r.per_branch, r.total, r.containment, r.oracle_total) == ((2, 1), 3, False, 3)
    r = intersect_at_node(nodal_cubic, P("Y - 2*X"), oracle=True)
    assert (r.per_branch, r.total, r.oracle_total) == ((1, 1), 2, 2)


def test_containment(nodal_cubic):
    r = intersect_at_node(nodal_cubic, nodal_cubic * P("1 + X*Y"))
    assert r.containment and r.total == math.inf
    assert r.branch_contained == (True, True)
    b = factor_node_branches(nodal_cubic, r.precision_used)
    for eta in b:
        assert branch_multiplicity(nodal_cubic * P("1 + X*Y"), eta, r.precision_used) == ExceedsBound(
            r.precision_used
        )


def test_reducible_branch_containment():
    F = P("Y^2 - X^2")
    r = intersect_at_node(F, P("(Y - X)*(1 + X)"))
    assert not r.containment
    assert r.branch_contained == (True, False)
    assert r.per_branch == (math.inf, 1)


def test_misses_node(nodal_cubic):
    r = intersect_at_node(nodal_cubic, P("Y - 1"))
    assert r.misses_node and r.total == 0 and r.per_branch == (0, 0)


def test_bezout_bound(nodal_cubic):
    assert bezout_bound(nodal_cubic, P("Y - X")) == 5


def test_oracle_examples(nodal_cubic):
    assert oracle_total_multiplicity(nodal_cubic, P("Y - X")) == 3
    assert oracle_total_multiplicity(nodal_cubic, P("Y - 2*X")) == 2
    assert oracle_total_multiplicity(nodal_cubic, P("Y - X^2")) == 2
    assert oracle_total_multiplicity(nodal_cubic, P("X^2 + Y^2")) == 4
    with pytest.raises(OracleError):
        oracle_total_multiplicity(nodal_cubic, nodal_cubic * P("Y + 2"))


def test_oracle_prime_fields():
    for p in (3, 7):
        F = P("Y^2 - X^2 - X^3", prime_field(p))
        assert oracle_total_multiplicity(F, P("Y - X", prime_field(p))) == 3


def test_oracle_is_deterministic(nodal_cubic):
    H = P("X*Y + Y^3 - X^3")
    assert len({oracle_total_multiplicity(nodal_cubic, H) for _ in range(3)}) == 1


def _sympy_local_total(F, H):
    """Reference from sympy: ord_x of Res_y after a fixed shear that keeps
    only the origin on x = 0 (checked)."""
    sx, sy = sympy.symbols("x y")

    def conv(G):
        return sum(sympy.Rational(str(c.to_fraction())) * sx ** i * sy ** j for (i, j), c in G.coefficients().items())

    f, h = conv(F), conv(H)
    for s in (0, 1, 2, 3, 5, 7, -1, -2, Fraction(1, 2), 11):
        fs = sympy.expand(f.subs(sx, sx + sympy.Rational(str(s)) * sy))
        hs = sympy.expand(h.subs(sx, sx + sympy.Rational(str(s)) * sy))
        pf, ph = sympy.Poly(fs, sy), sympy.Poly(hs, sy)
        if pf.degree() < 1 or ph.degree() < 1 or not pf.LC().is_number:
            continue
        g = sympy.gcd(fs.subs(sx, 0), hs.subs(sx, 0))
        if len(sympy.Poly(g, sy).monoms()) != 1:  # gcd must be a power of y
            continue
        r = sympy.Poly(sympy.resultant(fs, hs, sy), sx)
        if r.is_zero:
            return None
        return min(m[0] for m in r.monoms())
    return None


@settings(max_examples=30)
@given(nodal_curves(QQ, max_deg=4), _h_through_origin(max_deg=3))
def test_branch_sum_equals_oracle(data, H):
    F, _ = data
    r = intersect_at_node(F, H)
    assume(r.total != math.inf)
    assert r.total >= 2
    assert r.total == oracle_total_multiplicity(F, H)
    ref = _sympy_local_total(F, H)
    if ref is not None:
        assert r.total == ref


@settings(max_examples=30)
@given(nodal_curves(prime_field(13), max_deg=4), _h_through_origin(prime_field(13), max_deg=3))
def test_branch_sum_equals_oracle_prime_field(data, H):
    F, _ = data
    r = intersect_at_node(F, H)
    assume(r.total != math.inf)
    assert r.total == oracle_total_multiplicity(F, H)


def test_contact_examples(nodal_cubic):
    c = classify_smooth_contact(nodal_cubic, P("Y - X^2"))
    assert (c.contact, c.total) == (Contact.TRANSVERSE, 2)
    c = classify_smooth_contact(nodal_cubic, P("Y - X - X^2"))
    assert (c.contact, c.total, c.per_branch) == (Contact.TANGENT_1, 3, (2, 1))
    c = classify_smooth_contact(P("Y^2 - X^2"), P("Y"))
    assert (c.contact, c.total) == (Contact.TRANSVERSE, 2)
    c = classify_smooth_contact(nodal_cubic, P("Y + X"))
    assert c.contact is Contact.TANGENT_2


def test_contact_preconditions(nodal_cubic):
    with pytest.raises(PreconditionError):
        classify_smooth_contact(nodal_cubic, P("X^2 + Y^2"))
    with pytest.raises(PreconditionError):
        classify_smooth_contact(nodal_cubic, P("Y - X + 1"))
    with pytest.raises(PreconditionError):
        classify_smooth_contact(P("Y^2 - X^2"), P("(Y - X)*(1 + X)"))


@given(nodal_curves(QQ, max_deg=4), coeff_strategy(QQ), coeff_strategy(QQ), poly_strategy(QQ, max_deg=3, min_deg=2, max_terms=3))
def test_smooth_contact_total(data, hx, hy, tail):
    assume(not (hx.is_zero() and hy.is_zero()))
    F, (a, b) = data
    H = BivariatePoly.from_dict(QQ, {(1, 0): hx, (0, 1): hy}) + tail
    r = intersect_at_node(F, H)
    assume(r.total != math.inf)
    avoids = all(not (hx + hy * s).is_zero() for s in (a, b))
    assert (r.total == 2) == avoids
    assert r.total >= 2
    c = classify_smooth_contact(F, H)
    assert (c.contact is Contact.TRANSVERSE) == avoids
    assert c.tangent_line == LinearForm(hx, hy)


@given(nodal_curves(QQ, max_deg=4), poly_strategy(QQ, max_deg=4, min_deg=2, max_terms=5))
def test_singular_h_total_at_least_two(data, H):
    F, _ = data
    assume(not H.is_zero())
    r = intersect_at_node(F, H)
    assert r.total >= 2


@given(nodal_curves(QQ, max_deg=4), coeff_strategy(QQ))
def test_line_tangency_argmin(data, lam):
    # I_j(C, Y - lam X) = ord_T(eta_j(T) - lam T) >= 2 exactly at lam = eta_j'(0)
    F, _ = data
    b = factor_node_branches(F, 10)
    H = P("Y") - BivariatePoly.x(QQ).scale(lam)
    for j, eta in enumerate(b):
        m = branch_multiplicity(H, eta, 10)
        direct = (eta - TruncatedSeries.variable(QQ, 10).scale(lam)).ord()
        if isinstance(m, ExceedsBound):
            assert isinstance(direct, AtLeast)
        else:
            assert m == direct
            assert (m >= 2) == (lam == b.slopes[j])


def test_extension_field_branches():
    FE, b = node_branches(P("X^2 + Y^2 + X^3"), 10)
    r = intersect_at_node(FE, P("Y"), b, oracle=True)
    assert r.per_branch == (1, 1) and r.oracle_total == 2

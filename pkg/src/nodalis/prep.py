"""Weierstrass preparation at the origin and the two branch parametrisations
of an ordinary double point.

``weierstrass_prepare`` writes ``F = U * G`` modulo ``X^N`` with ``U`` a unit
of ``K[[X]][Y]`` and ``G = Y^d + c_1(X) Y^(d-1) + ... + c_d(X)``,
``c_i(0) = 0``, by Weierstrass division order by order in ``X``: with
``F = sum X^k F_k(Y)`` and ``U_0 = F_0 / Y^d``, step ``k`` solves

    R_k = F_k - sum_{0<j<k} U_(k-j) G_j = U_k Y^d + U_0 G_k,   deg G_k < d,

so ``G_k = R_k / U_0 mod Y^d`` and ``U_k = (R_k - U_0 G_k) / Y^d``.

For ``d = 2`` the quadratic ``G`` is split by completing the square,
``eta = (-c_1 +- sqrt(c_1^2 - 4 c_2)) / 2``.  An independent route
(``hensel_branch_oracle``) blows up ``Y = X*W`` and lifts the two simple roots
of the tangent-cone quadratic.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import (
    ConsistencyError,
    InsufficientPrecision,
    NeedsExtension,
    NotSquareError,
    PreconditionError,
)
from .field import FieldDescriptor, FieldElement, RATIONALS, adjoin_sqrt, squarefree_rational
from .poly import BivariatePoly, _umul, _utrim
from .series import AtLeast, TruncatedSeries

__all__ = [
    "WeierstrassData",
    "BranchPair",
    "DiscriminantAnalysis",
    "Verdict",
    "weierstrass_prepare",
    "analyze_discriminant",
    "factor_node_branches",
    "hensel_branch_oracle",
    "node_branches",
    "default_precision",
]


def default_precision(F: BivariatePoly) -> int:
    """``deg(F)^2 + 2``."""
    return (F.degree or 0) ** 2 + 2


@dataclass(frozen=True)
class WeierstrassData:
    d: int
    c: tuple[TruncatedSeries, ...]
    U: BivariatePoly
    prec: int

    @property
    def G(self) -> BivariatePoly:
        """Truncation of ``G`` to X-degree ``< prec``."""
        desc = self.U.desc
        terms = {(0, self.d): desc.one_raw()}
        for i, ci in enumerate(self.c, start=1):
            for k, v in enumerate(ci.raw):
                if not desc.is_zero(v):
                    terms[(k, self.d - i)] = v
        return BivariatePoly(desc, terms)

    def reconstructs(self, F: BivariatePoly) -> bool:
        return (self.U * self.G).truncate_x(self.prec) == F.truncate_x(self.prec)


def weierstrass_prepare(F: BivariatePoly, N: int) -> WeierstrassData:
    """Unique ``U``, ``c_1..c_d`` with ``F = U*G mod X^N``.

    Raises :class:`PreconditionError` when ``F(0, Y) = 0``.
    """
    if N < 1:
        raise ValueError("precision must be positive")
    desc = F.desc
    rows = F.x_coeffs()
    F0 = _utrim(desc, rows[0]) if rows else []
    if not F0:
        raise PreconditionError(
            "F(0, Y) vanishes: the Y-axis is a component through the origin; apply a linear change first"
        )
    d = next(k for k, c in enumerate(F0) if not desc.is_zero(c))
    U0 = F0[d:]
    U = [U0]
    G = [None]
    if d:
        u0inv = list(TruncatedSeries(desc, U0, d).inverse().raw)
    zero = desc.zero_raw()
    for k in range(1, N):
        R = list(rows[k]) if k < len(rows) else []
        for j in range(1, k):
            prod = _umul(desc, U[k - j], G[j])
            R = _sub(desc, R, prod)
        if d == 0:
            Gk: list = []
            Uk = _utrim(desc, R)
        else:
            Gk = _utrim(desc, _umul(desc, R, u0inv)[:d])
            rest = _sub(desc, R, _umul(desc, U0, Gk))
            if any(not desc.is_zero(c) for c in rest[:d]):
                raise ConsistencyError("Weierstrass division left a remainder below Y^d")
            Uk = _utrim(desc, rest[d:])
        G.append(Gk)
        U.append(Uk)
    c = []
    for i in range(1, d + 1):
        coeffs = [zero]
        for k in range(1, N):
            Gk = G[k]
            coeffs.append(Gk[d - i] if d - i < len(Gk) else zero)
        c.append(TruncatedSeries(desc, coeffs, N))
    uterms = {}
    for k, Uk in enumerate(U):
        for j, v in enumerate(Uk):
            if not desc.is_zero(v):
                uterms[(k, j)] = v
    w = WeierstrassData(d, tuple(c), BivariatePoly(desc, uterms), N)
    if not w.reconstructs(F):
        raise ConsistencyError("F != U*G modulo X^N after Weierstrass preparation")
    return w


def _sub(desc, a, b):
    n = max(len(a), len(b))
    z = desc.zero_raw()
    return [desc.sub(a[i] if i < len(a) else z, b[i] if i < len(b) else z) for i in range(n)]


class Verdict(str, Enum):
    SQUARE = "square"
    ODD_ORDER = "odd_order_case"
    NONSQUARE_UNIT = "nonsquare_unit_case"


@dataclass(frozen=True)
class DiscriminantAnalysis:
    """``D = c_1^2 - 4 c_2`` and its square-class verdict.

    ``m``, ``n`` are the orders of ``c_1``, ``c_2`` (``AtLeast`` when they
    vanish to full precision; ``c_1 = 0`` falls in the ``n < 2m`` branch).
    ``reason`` is the failure reported by the series square root.
    """

    D: TruncatedSeries
    m: int | AtLeast
    n: int | AtLeast
    verdict: Verdict
    sqrt: TruncatedSeries | None = None
    reason: str | None = None
    leading: FieldElement | None = None


def analyze_discriminant(w: WeierstrassData) -> DiscriminantAnalysis:
    if w.d != 2:
        raise ValueError(f"discriminant analysis needs d = 2, got d = {w.d}")
    c1, c2 = w.c
    D = c1 * c1 - c2.scale(4)
    m, n = c1.ord(), c2.ord()
    vD = D.ord()
    if isinstance(vD, AtLeast):
        raise InsufficientPrecision(f"discriminant vanishes to precision {D.prec}")
    lead = D[vD]
    try:
        Z = D.sqrt()
    except NotSquareError as exc:
        mm = float("inf") if isinstance(m, AtLeast) else m
        nn = float("inf") if isinstance(n, AtLeast) else n
        if nn < 2 * mm:
            verdict = Verdict.ODD_ORDER if nn % 2 else Verdict.NONSQUARE_UNIT
        elif nn == 2 * mm:
            verdict = Verdict.NONSQUARE_UNIT
        else:
            raise ConsistencyError("n > 2m leaves a square discriminant") from exc
        return DiscriminantAnalysis(D, m, n, verdict, None, exc.reason, lead)
    return DiscriminantAnalysis(D, m, n, Verdict.SQUARE, Z, None, lead)


@dataclass(frozen=True)
class BranchPair:
    """The two parametrisations ``Y = eta_j(X)`` of an ordinary double point."""

    eta1: TruncatedSeries
    eta2: TruncatedSeries

    def __post_init__(self):
        if self.eta1.desc != self.eta2.desc:
            raise ValueError("branches over different fields")
        if self.eta1.prec < 2 or self.eta2.prec < 2:
            raise InsufficientPrecision("branch pair needs precision >= 2")
        if self.eta1.raw[0] != self.desc.zero_raw() or self.eta2.raw[0] != self.desc.zero_raw():
            raise ValueError("branches must pass through the origin")
        if self.eta1.raw[1] == self.eta2.raw[1]:
            raise ValueError("branch slopes coincide")

    @property
    def desc(self) -> FieldDescriptor:
        return self.eta1.desc

    @property
    def prec(self) -> int:
        return min(self.eta1.prec, self.eta2.prec)

    @property
    def slopes(self) -> tuple[FieldElement, FieldElement]:
        return self.eta1[1], self.eta2[1]

    def __iter__(self):
        return iter((self.eta1, self.eta2))

    def swapped(self) -> "BranchPair":
        return BranchPair(self.eta2, self.eta1)

    def same_unordered(self, other: "BranchPair", n: int | None = None) -> bool:
        n = min(self.prec, other.prec) if n is None else n
        a = (self.eta1.truncate(n), self.eta2.truncate(n))
        b = (other.eta1.truncate(n), other.eta2.truncate(n))
        return a == b or a == b[::-1]


def _check_odp_at_origin(F: BivariatePoly) -> None:
    if not F.coeff(0, 0).is_zero():
        raise PreconditionError("the origin is not on the curve")
    if not F.coeff(1, 0).is_zero() or not F.coeff(0, 1).is_zero():
        raise PreconditionError("the origin is a smooth point, not an ordinary double point")
    a, b, c = F.coeff(0, 2), F.coeff(1, 1), F.coeff(2, 0)
    if a.is_zero() and b.is_zero() and c.is_zero():
        raise PreconditionError("the tangent cone vanishes: not an ordinary double point")
    if (b * b - 4 * a * c).is_zero():
        raise PreconditionError("repeated tangent direction: not an ordinary double point")
    if a.is_zero():
        raise PreconditionError(
            "the Y-axis is tangent to the node (F(0, Y) has order > 2); apply a linear change first"
        )


def _square_class(desc: FieldDescriptor, e: FieldElement) -> FieldElement:
    if desc.kind == RATIONALS:
        return desc(squarefree_rational(e.raw))
    return e


def factor_node_branches(F: BivariatePoly, N: int) -> BranchPair:
    """``eta_1, eta_2`` modulo ``X^N`` by preparation and completing the square.

    ``eta_1`` takes the canonical square root of the discriminant.  Raises
    :class:`NeedsExtension` when the tangent slopes are not in the field.
    """
    if F.desc.characteristic == 2:
        raise PreconditionError("completing the square needs characteristic != 2")
    _check_odp_at_origin(F)
    w = weierstrass_prepare(F, N + 1)
    a = analyze_discriminant(w)
    if a.verdict is Verdict.SQUARE:
        c1 = w.c[0]
        Z = a.sqrt
        half = F.desc(1) / 2
        eta1 = ((-c1) + Z).scale(half).truncate(N)
        eta2 = ((-c1) - Z).scale(half).truncate(N)
        return BranchPair(eta1, eta2)
    if a.verdict is Verdict.NONSQUARE_UNIT and a.reason == "leading_coeff_not_square" and a.D.ord() == 2:
        raise NeedsExtension(_square_class(F.desc, a.leading))
    raise ConsistencyError(f"discriminant verdict {a.verdict.value} is impossible at an ordinary double point")


def hensel_branch_oracle(F: BivariatePoly, N: int) -> BranchPair:
    """Independent branch computation: substitute ``Y = X*W``, divide by
    ``X^2``, lift both simple roots of the result at ``X = 0``."""
    desc = F.desc
    _check_odp_at_origin(F)
    terms = {}
    for (i, j), v in F.terms.items():
        if i + j < 2:
            raise PreconditionError("origin is not a double point")
        terms[(i + j - 2, j)] = v
    Ft = BivariatePoly(desc, terms)  # F(X, X*W) / X^2 in variables (X, W)
    a, b, c = F.coeff(0, 2), F.coeff(1, 1), F.coeff(2, 0)
    disc = b * b - 4 * a * c
    s = disc.sqrt()
    if s is None:
        raise NeedsExtension(_square_class(desc, disc))
    wprec = N - 1
    X = TruncatedSeries.variable(desc, wprec)
    etas = []
    for root in ((-b + s) / (2 * a), (-b - s) / (2 * a)):
        dq = 2 * a * root + b
        if dq.is_zero():
            raise PreconditionError("repeated root after blow-up: not an ordinary double point")
        coeffs = [root.raw] + [desc.zero_raw()] * (wprec - 1)
        for k in range(1, wprec):
            partial = TruncatedSeries(desc, coeffs[:k], k + 1)
            val = Ft.eval_series(X.truncate(k + 1), partial)[k]
            coeffs[k] = (-(val / dq)).raw
        w = TruncatedSeries(desc, coeffs, wprec)
        etas.append(w.shift(1))
    return BranchPair(etas[0], etas[1])


def node_branches(F: BivariatePoly, N: int, extend: bool = True) -> tuple[BivariatePoly, BranchPair]:
    """``factor_node_branches`` that adjoins the needed square root once.

    Returns the (possibly field-extended) polynomial with its branch pair.
    """
    try:
        return F, factor_node_branches(F, N)
    except NeedsExtension as exc:
        if not extend or F.desc.is_extension:
            raise
        E = adjoin_sqrt(F.desc, exc.d)
        FE = F.change_field(E)
        return FE, factor_node_branches(FE, N)

"""Translating a nodal curve along a direction ``(u, v)`` by a formal amount
``t``.

After a linear change of coordinates the direction becomes the Y-axis.  The
two nearby intersection points of ``C`` and its translate ``C_t`` are then

    q_1(t) = (c_1, eta_1(c_1)),  q_2(t) = (c_2, eta_2(c_2))

with ``c_1 * U(c_1) = t`` and ``c_2 * (-U)(c_2) = t``, where
``eta_1 - eta_2 = X * U``.  Every claim is checked as an identity of
truncated series in ``t``.
"""
from __future__ import annotations

from dataclasses import dataclass, replace

from .errors import ConsistencyError, InsufficientPrecision, PreconditionError
from .field import FieldElement
from .poly import BivariatePoly, LinearForm, linear_change, partials
from .prep import BranchPair, factor_node_branches
from .series import AtLeast, TruncatedSeries, revert_unit_times_x
from .node import branch_tangents

__all__ = [
    "TranslationReport",
    "check_direction",
    "branch_gap_unit",
    "translation_intersections",
    "transversality",
]


@dataclass(frozen=True)
class TranslationReport:
    """Results in original coordinates; ``points[i] = (x_i(t), y_i(t))``."""

    direction: tuple[FieldElement, FieldElement]
    c1: TruncatedSeries
    c2: TruncatedSeries
    points: tuple[tuple[TruncatedSeries, TruncatedSeries], tuple[TruncatedSeries, TruncatedSeries]]
    q_on_C_residual: tuple[int | AtLeast, int | AtLeast]
    q_on_Ct_residual: tuple[int | AtLeast, int | AtLeast]
    distinctness_ord: int | AtLeast
    transversality_ord: tuple[int | AtLeast, int | AtLeast] | None
    precision: int
    exact_membership: tuple[bool, bool] = (False, False)
    # new-frame data kept for inspection
    frame_poly: BivariatePoly | None = None
    frame_branches: BranchPair | None = None

    @property
    def ok(self) -> bool:
        full = all(isinstance(r, AtLeast) for r in self.q_on_C_residual + self.q_on_Ct_residual)
        return full and self.distinctness_ord == 1 and self.transversality_ord == (0, 0)


def _direction(desc, u, v) -> tuple[FieldElement, FieldElement]:
    u, v = desc(u), desc(v)
    if u.is_zero() and v.is_zero():
        raise PreconditionError("translation direction (0, 0) is not a direction")
    return u, v


def check_direction(F: BivariatePoly, b: BranchPair, u, v) -> bool:
    """True iff the line ``vX - uY`` is distinct from both branch tangents."""
    u, v = _direction(b.desc, u, v)
    l = LinearForm(v, -u)
    return l not in branch_tangents(b)


def branch_gap_unit(b: BranchPair) -> TruncatedSeries:
    """``U`` with ``eta_1 - eta_2 = X * U``; ``U(0)`` is the slope gap."""
    U = (b.eta1 - b.eta2).unshift(1)
    if U[0].is_zero():
        raise ConsistencyError("branch gap is not a unit")
    return U


def _frame(desc, u, v):
    """Columns ``w, (u, v)`` of the change ``(x, y) = X' w + Y' (u, v)``."""
    w = (desc.one(), desc.zero()) if not v.is_zero() else (desc.zero(), desc.one())
    return w


def _match_labels(b: BranchPair, fb: BranchPair, w, u, v) -> BranchPair:
    """Reorder ``fb`` so its branch ``j`` is the image of branch ``j`` of ``b``."""
    det = w[0] * v - u * w[1]
    mapped = []
    for s in b.slopes:
        # inverse of [[w0, u], [w1, v]] applied to (1, s)
        a = (v - u * s) / det
        c = (w[0] * s - w[1]) / det
        if a.is_zero():
            raise PreconditionError("translation direction is tangent to a branch")
        mapped.append(c / a)
    if tuple(mapped) == fb.slopes:
        return fb
    if tuple(mapped[::-1]) == fb.slopes:
        return fb.swapped()
    raise ConsistencyError("branch slopes do not transform consistently")


def _ord_capped(s: TruncatedSeries, n: int) -> int | AtLeast:
    v = s.ord()
    if isinstance(v, AtLeast) or v >= n:
        return AtLeast(n)
    return v


def _exact_zero(F: BivariatePoly, px: TruncatedSeries, py: TruncatedSeries) -> bool:
    """Substitute the stored truncations as polynomials; exact check."""
    desc = F.desc
    T = BivariatePoly.x(desc)

    def poly(s):
        out = BivariatePoly(desc, {})
        for k, c in enumerate(s.coeffs):
            if not c.is_zero():
                out = out + (T ** k).scale(c)
        return out

    return F.substitute(poly(px), poly(py)).is_zero()


def translation_intersections(F: BivariatePoly, b: BranchPair, u, v, N: int) -> TranslationReport:
    """The two points of ``C`` and ``C_t`` near the node, as series in ``t``."""
    if N < 2:
        raise InsufficientPrecision("translation needs precision >= 2")
    desc = b.desc
    if F.desc != desc:
        F = F.change_field(desc)
    u, v = _direction(desc, u, v)
    if not check_direction(F, b, u, v):
        raise PreconditionError("translation direction is tangent to a branch of the node")
    w = _frame(desc, u, v)
    Fn = linear_change(F, w[0], u, w[1], v)
    fb = _match_labels(b, factor_node_branches(Fn, N + 2), w, u, v)
    U = branch_gap_unit(fb)
    c1 = revert_unit_times_x(U, N)
    c2 = revert_unit_times_x(-U, N)
    t = TruncatedSeries.variable(desc, N)
    d1 = fb.eta1.compose(c1)
    d2 = fb.eta2.compose(c2)
    # q_1 - (0, t) sits on branch 2, q_2 - (0, t) on branch 1
    if not (d1 - t).agrees_with(fb.eta2.compose(c1), N) or not (d2 - t).agrees_with(fb.eta1.compose(c2), N):
        raise ConsistencyError("branch attribution on the translated curve failed")

    def back(X, Y):
        return X.scale(w[0]) + Y.scale(u), X.scale(w[1]) + Y.scale(v)

    pts = (back(c1, d1), back(c2, d2))
    tu, tv = t.scale(u), t.scale(v)
    on_c = tuple(_ord_capped(F.eval_series(x, y), N) for x, y in pts)
    on_ct = tuple(_ord_capped(F.eval_series(x - tu, y - tv), N) for x, y in pts)
    exact = tuple(
        _exact_zero(Fn, cx, cy) and _exact_zero(Fn, cx, cy - t) for cx, cy in ((c1, d1), (c2, d2))
    )
    rep = TranslationReport(
        direction=(u, v),
        c1=c1,
        c2=c2,
        points=pts,
        q_on_C_residual=on_c,
        q_on_Ct_residual=on_ct,
        distinctness_ord=_ord_capped(c1 - c2, N),
        transversality_ord=None,
        precision=N,
        exact_membership=exact,
        frame_poly=Fn,
        frame_branches=fb,
    )
    return replace(rep, transversality_ord=transversality(Fn, rep))


def _grad_along(FX: BivariatePoly, FY: BivariatePoly, x: TruncatedSeries, y: TruncatedSeries) -> TruncatedSeries:
    num = -FX.eval_series(x, y)
    den = FY.eval_series(x, y)
    n = min(num.prec, den.prec)
    k = den.ord()
    if isinstance(k, AtLeast) or k >= n - 1:
        raise InsufficientPrecision("F_Y vanishes to working precision along the point path")
    num_k = num.ord()
    if not isinstance(num_k, AtLeast) and num_k < k:
        raise PreconditionError("F_Y is a non-unit along the point path: the slope has a pole")
    return num.truncate(n).unshift(k) / den.truncate(n).unshift(k)


def transversality(Fn: BivariatePoly, rep: TranslationReport) -> tuple[int | AtLeast, int | AtLeast]:
    """``ord_t(g_C - g_{C_t})`` at ``q_1, q_2`` in the frame where the
    translation is vertical; transverse iff both are 0."""
    if Fn.desc != rep.c1.desc:
        Fn = Fn.change_field(rep.c1.desc)
    FX, FY = partials(Fn)
    fb = rep.frame_branches
    if fb is None:
        raise ValueError("report lacks frame data")
    t = TruncatedSeries.variable(Fn.desc, rep.precision)
    out = []
    for c, eta in ((rep.c1, fb.eta1), (rep.c2, fb.eta2)):
        y = eta.compose(c)
        g_c = _grad_along(FX, FY, c, y)
        g_ct = _grad_along(FX, FY, c, y - t)
        diff = g_c - g_ct
        out.append(_ord_capped(diff, diff.prec))
    return out[0], out[1]

"""Intersection multiplicities of a second curve ``H`` with ``C: F = 0`` at an
ordinary double point placed at the origin.

Per branch, ``I_j = ord_T H(T, eta_j(T))``; the total is ``I_1 + I_2``.  The
independent check ``oracle_total_multiplicity`` shears the pair so that the
origin is alone on the line ``X = 0`` and reads the order of vanishing of the
Y-resultant at ``X = 0``.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .errors import ConsistencyError, InsufficientPrecision, OracleError, PreconditionError
from .field import FieldDescriptor, PRIME_FIELD, adjoin_sqrt
from .poly import BivariatePoly, LinearForm, divides, linear_change, resultant_y, upoly_gcd, _utrim
from .prep import BranchPair, factor_node_branches
from .series import AtLeast, TruncatedSeries

__all__ = [
    "ExceedsBound",
    "Contact",
    "IntersectionReport",
    "ContactReport",
    "branch_multiplicity",
    "intersect_at_node",
    "classify_smooth_contact",
    "oracle_total_multiplicity",
    "bezout_bound",
    "SHEAR_SEED",
]

SHEAR_SEED = 20240611


@dataclass(frozen=True)
class ExceedsBound:
    """``H(T, eta(T))`` vanishes to at least ``bound``: containment or too
    little precision."""

    bound: int

    def __str__(self) -> str:
        return f"exceeds_{self.bound}"


class Contact(str, Enum):
    TRANSVERSE = "transverse"
    TANGENT_1 = "tangent_to_branch_1"
    TANGENT_2 = "tangent_to_branch_2"
    TANGENT_BOTH = "tangent_to_both"


@dataclass(frozen=True)
class IntersectionReport:
    per_branch: tuple[int | float, int | float]
    total: int | float
    containment: bool
    precision_used: int
    oracle_total: int | None = None
    contact: Contact | None = None
    branch_contained: tuple[bool, bool] = (False, False)
    misses_node: bool = False


@dataclass(frozen=True)
class ContactReport:
    contact: Contact
    tangent_line: LinearForm
    total: int
    per_branch: tuple[int, int]


def bezout_bound(F: BivariatePoly, H: BivariatePoly) -> int:
    return (F.degree or 0) * (H.degree or 0) + 2


def branch_multiplicity(H: BivariatePoly, eta: TruncatedSeries, N_bound: int) -> int | ExceedsBound:
    """``ord_T H(T, eta(T))``, or :class:`ExceedsBound` when it is ``>= N_bound``."""
    if eta.prec < N_bound:
        raise InsufficientPrecision(f"branch known to X^{eta.prec}, bound {N_bound} requested")
    if eta.desc != H.desc:
        H = H.change_field(eta.desc)
    if not H.coeff(0, 0).is_zero():
        raise PreconditionError("H does not pass through the node")
    s = H.eval_series(TruncatedSeries.variable(eta.desc, eta.prec), eta)
    v = s.ord()
    if isinstance(v, AtLeast) or v >= N_bound:
        return ExceedsBound(N_bound)
    return v


def _branches(F: BivariatePoly, b: BranchPair | None, n: int) -> BranchPair:
    if b is not None and b.prec >= n:
        return b
    fresh = factor_node_branches(F, n)
    if b is not None and not (
        fresh.eta1.agrees_with(b.eta1, b.prec) and fresh.eta2.agrees_with(b.eta2, b.prec)
    ):
        fresh = fresh.swapped()
    return fresh


def _common_factor(F: BivariatePoly, H: BivariatePoly) -> bool:
    if F.degree_y() < 1 or H.degree_y() < 1:
        return False
    return not resultant_y(F, H)


def intersect_at_node(
    F: BivariatePoly,
    H: BivariatePoly,
    b: BranchPair | None = None,
    N_bound: int | None = None,
    oracle: bool = False,
) -> IntersectionReport:
    """Branched and total intersection multiplicities of ``H`` with ``F`` at
    the origin.

    ``b`` may be supplied (e.g. over an extension field); it is recomputed at
    higher precision when needed, keeping its labelling.
    """
    desc = b.desc if b is not None else F.desc
    if F.desc != desc:
        F = F.change_field(desc)
    if H.desc != desc:
        H = H.change_field(desc)
    if not H.coeff(0, 0).is_zero():
        return IntersectionReport((0, 0), 0, False, 0, misses_node=True)
    bound = N_bound or bezout_bound(F, H)
    if divides(F, H):
        b = _branches(F, b, bound)
        ords = [branch_multiplicity(H, eta, bound) for eta in b]
        if not all(isinstance(o, ExceedsBound) for o in ords):
            raise ConsistencyError("F divides H but H does not vanish along both branches")
        return IntersectionReport((math.inf, math.inf), math.inf, True, bound, branch_contained=(True, True))
    n = bound
    for attempt in range(2):
        b = _branches(F, b, n)
        ords = [branch_multiplicity(H, eta, n) for eta in b]
        if not any(isinstance(o, ExceedsBound) for o in ords):
            break
        if attempt == 0:
            n *= 2
    contained = tuple(isinstance(o, ExceedsBound) for o in ords)
    if any(contained):
        if not _common_factor(F, H):
            raise InsufficientPrecision(
                f"branch order exceeds {n} although F and H share no component"
            )
        per = tuple(math.inf if c else o for c, o in zip(contained, ords))
        return IntersectionReport(per, math.inf, False, n, branch_contained=contained)
    per = (ords[0], ords[1])
    total = per[0] + per[1]
    if total < 2:
        raise ConsistencyError(f"total intersection {total} < 2 at a double point")
    otot = oracle_total_multiplicity(F, H) if oracle else None
    return IntersectionReport(per, total, False, n, oracle_total=otot)


def classify_smooth_contact(F: BivariatePoly, H: BivariatePoly, b: BranchPair | None = None) -> ContactReport:
    """Transverse or tangent contact of a smooth ``H`` with the two branches.

    The tangency test ``H_X(0) + H_Y(0) * eta_j'(0) = 0`` is checked against
    the branch orders: tangency to branch ``j`` iff ``I_j > 1``, transverse
    iff the total is 2.
    """
    if b is not None and H.desc != b.desc:
        H = H.change_field(b.desc)
    if not H.coeff(0, 0).is_zero():
        raise PreconditionError("H does not pass through the node")
    hx, hy = H.coeff(1, 0), H.coeff(0, 1)
    if hx.is_zero() and hy.is_zero():
        raise PreconditionError("H is singular at the node; only total >= 2 applies")
    rep = intersect_at_node(F, H, b)
    if rep.containment or any(rep.branch_contained):
        raise PreconditionError("H shares a component with C; contact needs finite intersection")
    if b is None:
        b = factor_node_branches(F.change_field(H.desc) if F.desc != H.desc else F, 2)
    s1, s2 = b.slopes
    t1 = (hx + hy * s1).is_zero()
    t2 = (hy * s2 + hx).is_zero()
    contact = {
        (False, False): Contact.TRANSVERSE,
        (True, False): Contact.TANGENT_1,
        (False, True): Contact.TANGENT_2,
        (True, True): Contact.TANGENT_BOTH,
    }[(t1, t2)]
    i1, i2 = rep.per_branch
    if (i1 > 1) != t1 or (i2 > 1) != t2:
        raise ConsistencyError("gradient tangency test disagrees with branch orders")
    if (contact is Contact.TRANSVERSE) != (rep.total == 2):
        raise ConsistencyError("transversality disagrees with total multiplicity 2")
    return ContactReport(contact, LinearForm(hx, hy), rep.total, (i1, i2))


# -- resultant oracle -------------------------------------------------------------------


def _shear_candidates(desc: FieldDescriptor, rng: random.Random, count: int):
    yield desc.zero()
    if desc.kind == PRIME_FIELD:
        res = list(range(1, desc.p))
        rng.shuffle(res)
        for r in res:
            yield desc(r)
        return
    if desc.is_extension and desc.base.kind == PRIME_FIELD:
        p = desc.base.p
        pairs = [(a, b) for a in range(p) for b in range(p) if (a, b) != (0, 0)]
        rng.shuffle(pairs)
        for a, b in pairs:
            yield desc((a, b))
        return
    for _ in range(count):
        num = rng.randint(-30, 30)
        den = rng.choice((1, 1, 1, 2, 3, 5))
        yield desc(Fraction(num, den))


def _shear_ok(Fs: BivariatePoly, Hs: BivariatePoly) -> bool:
    desc = Fs.desc
    if Fs.degree_y() < 1 or Hs.degree_y() < 1:
        return False
    top = _utrim(desc, Fs.y_coeffs()[-1])
    if len(top) != 1:  # leading coefficient in Y must be a nonzero constant
        return False
    f0, h0 = _utrim(desc, Fs.at_x0()), _utrim(desc, Hs.at_x0())
    if not f0 or not h0:
        return False
    g = upoly_gcd(desc, f0, h0)
    return all(desc.is_zero(c) for c in g[:-1])


def oracle_total_multiplicity(
    F: BivariatePoly, H: BivariatePoly, seed: int = SHEAR_SEED, max_tries: int = 60
) -> int:
    """Total intersection number at the origin from a sheared Y-resultant.

    The shear ``X -> X + s*Y`` is drawn from a seeded generator (``s = 0``
    first) until the sheared ``F`` has constant leading coefficient in ``Y``
    and the origin is the only common point on ``X = 0``.  Small prime fields
    fall back to shears from a quadratic extension.
    """
    if H.desc != F.desc:
        H = H.change_field(F.desc)
    desc = F.desc
    rng = random.Random(seed)
    fields = [desc]
    if desc.kind == PRIME_FIELD:
        fields.append(adjoin_sqrt(desc, _smallest_nonresidue(desc.p)))
    for E in fields:
        FE = F if E == desc else F.change_field(E)
        HE = H if E == desc else H.change_field(E)
        for s in _shear_candidates(E, rng, max_tries):
            Fs = linear_change(FE, 1, s, 0, 1)
            Hs = linear_change(HE, 1, s, 0, 1)
            if not _shear_ok(Fs, Hs):
                continue
            res = resultant_y(Fs, Hs)
            if not res:
                raise OracleError("F and H share a common factor: resultant vanishes identically")
            return next(k for k, c in enumerate(res) if not c.is_zero())
    raise OracleError("no admissible shear found")


def _smallest_nonresidue(p: int) -> int:
    for a in range(2, p):
        if pow(a, (p - 1) // 2, p) == p - 1:
            return a
    raise ValueError(f"no quadratic non-residue mod {p}")

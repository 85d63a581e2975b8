"""Acceptance corpus shared by ``nodalis selftest`` and the test suite.

Every check is exact.  Random instances come from ``random.Random`` seeded
per criterion, so runs are reproducible.
"""
from __future__ import annotations

import math
import random
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .errors import FieldError, NeedsExtension
from .field import PRIME_FIELD, QQ, FieldDescriptor, adjoin_sqrt, prime_field
from .intersect import classify_smooth_contact, intersect_at_node, oracle_total_multiplicity, Contact
from .node import Classification, classify_point, default_line_sample, line_multiplicity, verify_odp_by_lines
from .parsing import parse_polynomial
from .poly import AffinePoint, BivariatePoly, LinearForm, divides
from .prep import Verdict, analyze_discriminant, factor_node_branches, hensel_branch_oracle, weierstrass_prepare
from .series import AtLeast, TruncatedSeries
from .translate import check_direction, translation_intersections

__all__ = ["CriterionResult", "CRITERIA", "run_all", "run_criterion", "format_table"]

SEED = 1729
NODAL_CUBIC = "Y^2 - X^2 - X^3"


@dataclass(frozen=True)
class CriterionResult:
    number: int
    name: str
    passed: bool
    detail: str
    seconds: float = 0.0

    def line(self) -> str:
        mark = "PASS" if self.passed else "FAIL"
        return f"[{mark}] {self.number}. {self.name}: {self.detail} ({self.seconds:.2f}s)"


# -- random instances -------------------------------------------------------------------


def rand_coeff(desc: FieldDescriptor, rng: random.Random, nonzero: bool = False):
    while True:
        if desc.kind == PRIME_FIELD:
            c = desc(rng.randrange(desc.p))
        else:
            c = desc(Fraction(rng.randint(-5, 5), rng.choice((1, 1, 2, 3))))
        if not nonzero or not c.is_zero():
            return c


def rand_poly(desc, rng, degrees, density=0.5) -> BivariatePoly:
    """Random polynomial with terms of total degree in ``degrees``."""
    terms = {}
    for k in degrees:
        for i in range(k + 1):
            if rng.random() < density:
                terms[(i, k - i)] = rand_coeff(desc, rng)
    return BivariatePoly.from_dict(desc, terms)


def rand_distinct_pair(desc, rng):
    a = rand_coeff(desc, rng)
    while True:
        b = rand_coeff(desc, rng)
        if b != a:
            return a, b


def rand_nodal(desc, rng, max_deg=5):
    """``(Y - aX)(Y - bX) + noise`` with noise of order >= 3."""
    a, b = rand_distinct_pair(desc, rng)
    X, Y = BivariatePoly.x(desc), BivariatePoly.y(desc)
    cone = (Y - X.scale(a)) * (Y - X.scale(b))
    return cone + rand_poly(desc, rng, range(3, rng.randint(3, max_deg) + 1)), (a, b)


def rand_weierstrass_input(desc, rng, max_deg=6) -> BivariatePoly:
    d = rng.randint(1, 3)
    F = rand_poly(desc, rng, range(1, max_deg + 1), density=0.35)
    F = F + BivariatePoly.from_dict(desc, {(0, d): rand_coeff(desc, rng, nonzero=True)})
    if not [c for c in F.at_x0() if not desc.is_zero(c)]:
        F = F + BivariatePoly.y(desc)
    return F


def _fields():
    return [QQ, prime_field(5), prime_field(7), prime_field(13)]


# -- criteria ----------------------------------------------------------------------------


def check_weierstrass(desc=QQ, count=100, seed=SEED) -> tuple[bool, str]:
    rng = random.Random(seed)
    for k in range(count):
        F = rand_weierstrass_input(desc, rng)
        w16 = weierstrass_prepare(F, 16)
        w8 = weierstrass_prepare(F, 8)
        if not w16.reconstructs(F):
            return False, f"instance {k}: U*G != F mod X^16"
        same_c = all(a.agrees_with(b, 8) for a, b in zip(w8.c, w16.c)) and w8.d == w16.d
        if not same_c or w8.U.truncate_x(8) != w16.U.truncate_x(8):
            return False, f"instance {k}: N=8 and N=16 preparations disagree"
    return True, f"{count} instances over {desc}"


def check_branches(desc=QQ, count=100, seed=SEED + 1, N=10) -> tuple[bool, str]:
    rng = random.Random(seed)
    for k in range(count):
        F, _ = rand_nodal(desc, rng)
        b = factor_node_branches(F, N)
        X = TruncatedSeries.variable(desc, N)
        for eta in b:
            if not isinstance(F.eval_series(X, eta).ord(), AtLeast):
                return False, f"instance {k}: F(X, eta) != 0 mod X^{N}"
        w = weierstrass_prepare(F, N)
        c1, c2 = w.c
        if not (b.eta1 + b.eta2).agrees_with(-c1, N) or not (b.eta1 * b.eta2).agrees_with(c2, N):
            return False, f"instance {k}: Vieta identities fail"
        if not b.same_unordered(hensel_branch_oracle(F, N), N):
            return False, f"instance {k}: disagrees with the Hensel oracle"
    return True, f"{count} nodal curves over {desc}"


def check_lines(desc=QQ, seed=SEED + 2, n_odp=50, n_other=20) -> tuple[bool, str]:
    origin = AffinePoint.of(desc, 0, 0)
    if desc == QQ:
        F = parse_polynomial(NODAL_CUBIC, desc)
        sample = [LinearForm.slope(desc, 1), LinearForm.slope(desc, -1), LinearForm.slope(desc, 0),
                  LinearForm.slope(desc, 2), LinearForm.of(desc, 1, 0)]
        mults = tuple(line_multiplicity(F, origin, l) for l in sample)
        if mults != (3, 3, 2, 2, 2):
            return False, f"nodal cubic line multiplicities {mults}"
    rng = random.Random(seed)
    X, Y = BivariatePoly.x(desc), BivariatePoly.y(desc)
    curves = [rand_nodal(desc, rng)[0] for _ in range(n_odp)]
    for k in range(n_other):
        a = rand_coeff(desc, rng)
        kind = k % 3
        if kind == 0:  # cusp
            G = (Y - X.scale(a)) ** 2 + X ** 3 + rand_poly(desc, rng, range(4, 6))
        elif kind == 1:  # tacnode
            G = (Y - X.scale(a)) ** 2 - X ** 4 + rand_poly(desc, rng, range(5, 7))
        else:  # triple point
            G = rand_poly(desc, rng, (3,), density=0.8) + rand_poly(desc, rng, range(4, 6))
            if G.low_degree() != 3:
                G = G + X ** 3
        curves.append(G)
    disagreements = 0
    for G in curves:
        rep = classify_point(G, origin, survey=False)
        sample = default_line_sample(desc, rep.tangent_cone or ())
        if verify_odp_by_lines(G, origin, sample) != rep.is_odp:
            disagreements += 1
    ok = disagreements == 0
    return ok, f"{len(curves)} curves over {desc}, {disagreements} disagreements"


def _rand_h_through_origin(desc, rng, slopes) -> BivariatePoly:
    X, Y = BivariatePoly.x(desc), BivariatePoly.y(desc)
    roll = rng.random()
    if roll < 0.3:  # tangent to a branch
        lin = Y - X.scale(rng.choice(slopes))
        return lin.scale(rand_coeff(desc, rng, nonzero=True)) + rand_poly(desc, rng, range(2, rng.randint(2, 4) + 1))
    if roll < 0.45:  # singular at the node
        return rand_poly(desc, rng, range(2, rng.randint(2, 4) + 1), density=0.7)
    return rand_poly(desc, rng, range(1, rng.randint(1, 4) + 1), density=0.6)


def check_oracle(desc=QQ, count=100, seed=SEED + 3) -> tuple[bool, str]:
    rng = random.Random(seed)
    done = 0
    tries = 0
    while done < count:
        tries += 1
        if tries > 10 * count:
            return False, f"only {done} usable pairs generated"
        F, slopes = rand_nodal(desc, rng, max_deg=4)
        H = _rand_h_through_origin(desc, rng, slopes)
        if H.is_zero() or divides(F, H):
            continue
        rep = intersect_at_node(F, H)
        if rep.total == math.inf:
            continue  # shared component with one branch
        o = oracle_total_multiplicity(F, H)
        if o != rep.total:
            return False, f"pair {done}: branches give {rep.total}, resultant gives {o}"
        done += 1
    return True, f"{count} pairs over {desc}"


def check_smooth_contact(desc=QQ, seed=SEED + 4, n_smooth=50, n_singular=10) -> tuple[bool, str]:
    rng = random.Random(seed)
    X, Y = BivariatePoly.x(desc), BivariatePoly.y(desc)
    smooth = 0
    while smooth < n_smooth:
        F, slopes = rand_nodal(desc, rng, max_deg=4)
        if rng.random() < 0.4:
            lin = Y - X.scale(rng.choice(slopes))
        else:
            lin = X.scale(rand_coeff(desc, rng)) + Y.scale(rand_coeff(desc, rng))
            if lin.is_zero():
                continue
        H = lin + rand_poly(desc, rng, range(2, 4))
        if divides(F, H):
            continue
        rep = intersect_at_node(F, H)
        if rep.total == math.inf:
            continue
        b = factor_node_branches(F, 2)
        lH = LinearForm(H.coeff(1, 0), H.coeff(0, 1))
        tangents = {LinearForm.slope(desc, s) for s in b.slopes}
        avoids = lH not in tangents
        if avoids != (rep.total == 2) or rep.total < 2:
            return False, f"smooth H {smooth}: total {rep.total}, avoids tangents {avoids}"
        c = classify_smooth_contact(F, H)
        if (c.contact is Contact.TRANSVERSE) != avoids:
            return False, f"smooth H {smooth}: contact {c.contact.value}"
        smooth += 1
    singular = 0
    while singular < n_singular:
        F, _ = rand_nodal(desc, rng, max_deg=4)
        H = rand_poly(desc, rng, range(2, 5), density=0.6)
        if H.is_zero() or divides(F, H):
            continue
        rep = intersect_at_node(F, H)
        if rep.total < 2:
            return False, f"singular H {singular}: total {rep.total} < 2"
        singular += 1
    return True, f"{n_smooth} smooth and {n_singular} singular H over {desc}"


def check_translation(seed=SEED + 5, N=10, n_random=5) -> tuple[bool, str]:
    desc = QQ
    rng = random.Random(seed)
    curves = [parse_polynomial(NODAL_CUBIC)] + [rand_nodal(desc, rng, max_deg=4)[0] for _ in range(n_random)]
    candidates = [(0, 1), (1, 0), (1, 2), (2, -1), (1, 3), (3, 1), (1, -3)]
    runs = 0
    for j, F in enumerate(curves):
        b = factor_node_branches(F, N + 2)
        dirs = [d for d in candidates if check_direction(F, b, *d)][:3]
        if len(dirs) < 3:
            return False, f"curve {j}: fewer than 3 valid directions"
        for d in dirs:
            rep = translation_intersections(F, b, *d, N)
            if not rep.ok:
                return False, (
                    f"curve {j} direction {d}: residuals {rep.q_on_C_residual}/{rep.q_on_Ct_residual}, "
                    f"distinctness {rep.distinctness_ord}, transversality {rep.transversality_ord}"
                )
            runs += 1
    lines = parse_polynomial("Y^2 - X^2")
    rep = translation_intersections(lines, factor_node_branches(lines, N + 2), 0, 1, N)
    if not rep.ok or rep.exact_membership != (True, True):
        return False, "two-lines case is not an exact identity"
    return True, f"{runs} translations at N={N}, two-lines case exact"


def check_fields() -> tuple[bool, str]:
    parts = []
    for p in (5, 7, 13):
        K = prime_field(p)
        for fn in (check_weierstrass, check_branches, check_lines, check_oracle):
            ok, detail = fn(K)
            if not ok:
                return False, f"F_{p} {fn.__name__}: {detail}"
        parts.append(f"F_{p}")
    try:
        prime_field(2)
        return False, "p = 2 was accepted"
    except FieldError:
        pass
    origin = AffinePoint.of(QQ, 0, 0)
    F = parse_polynomial("X^2 + Y^2")
    rep = classify_point(F, origin, survey=False)
    if rep.classification is not Classification.NEEDS_EXTENSION or rep.extension_needed != QQ(-1):
        return False, f"X^2 + Y^2 over Q gave {rep.classification.value}"
    E = adjoin_sqrt(QQ, -1)
    FE = F.change_field(E)
    if not classify_point(FE, AffinePoint.of(E, 0, 0), survey=False).is_odp:
        return False, "X^2 + Y^2 is not an ODP over Q(sqrt(-1))"
    try:
        factor_node_branches(F, 4)
        return False, "branches of X^2 + Y^2 computed over Q"
    except NeedsExtension as exc:
        if exc.d != QQ(-1):
            return False, f"needs_extension({exc.d}) instead of -1"
    factor_node_branches(FE, 6)
    return True, f"criteria 1-4 over {', '.join(parts)}; p=2 rejected; X^2+Y^2 extends by sqrt(-1)"


def check_discriminant(seed=SEED + 6, count=100) -> tuple[bool, str]:
    cases = [
        ("Y^2 - X^3", Verdict.ODD_ORDER),
        ("Y^2 - X^3 - X^4", Verdict.ODD_ORDER),
        ("Y^2 - 1/2*X^2", Verdict.NONSQUARE_UNIT),
        ("Y^2 + X*Y + X^2", Verdict.NONSQUARE_UNIT),
        ("Y^2 - X^2 - X^3", Verdict.SQUARE),
    ]
    for text, want in cases:
        got = analyze_discriminant(weierstrass_prepare(parse_polynomial(text), 10)).verdict
        if got is not want:
            return False, f"{text}: {got.value}, expected {want.value}"
    rng = random.Random(seed)
    N = 8
    for k in range(count):
        c1 = TruncatedSeries(QQ, [0] + [rand_coeff(QQ, rng).raw for _ in range(N - 1)], N)
        c2 = TruncatedSeries(QQ, [0] + [rand_coeff(QQ, rng).raw for _ in range(N - 1)], N)
        D2 = c1.substitute_xpow(2) ** 2 - c2.substitute_xpow(2).scale(4)
        v = D2.ord()
        if not isinstance(v, AtLeast) and v % 2:
            return False, f"pair {k}: substituted discriminant has odd order {v}"
    return True, f"{len(cases)} constructed verdicts, {count} substituted discriminants of even order"


CRITERIA: list[tuple[int, str, Callable[[], tuple[bool, str]]]] = [
    (1, "Weierstrass reconstruction and uniqueness", check_weierstrass),
    (2, "branch factorization vs Hensel oracle", check_branches),
    (3, "line characterization of double points", check_lines),
    (4, "branched multiplicities vs sheared resultant", check_oracle),
    (5, "transverse vs tangent contact at the node", check_smooth_contact),
    (6, "translated curve meets in two transverse points", check_translation),
    (7, "finite fields and quadratic extension", check_fields),
    (8, "discriminant case analysis", check_discriminant),
]


def run_criterion(number: int) -> CriterionResult:
    for n, name, fn in CRITERIA:
        if n == number:
            t0 = time.perf_counter()
            try:
                ok, detail = fn()
            except Exception as exc:  # reported, not swallowed silently
                ok, detail = False, f"{type(exc).__name__}: {exc}"
            return CriterionResult(n, name, ok, detail, time.perf_counter() - t0)
    raise KeyError(number)


def run_all() -> list[CriterionResult]:
    return [run_criterion(n) for n, _, _ in CRITERIA]


def format_table(results: list[CriterionResult]) -> str:
    return "\n".join(r.line() for r in results)

"""Classification of a marked point and line intersection multiplicities."""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

from .errors import NeedsExtension
from .field import FieldElement
from .poly import (
    AffinePoint,
    BivariatePoly,
    LinearForm,
    homogeneous_part,
    restrict_to_line,
    split_binary_quadratic,
    translate_to_origin,
)
from .prep import BranchPair

__all__ = [
    "Classification",
    "NodeReport",
    "classify_point",
    "classify_candidates",
    "line_multiplicity",
    "verify_odp_by_lines",
    "default_line_sample",
    "branch_tangents",
    "SAMPLE_SLOPES",
]

SAMPLE_SLOPES = (0, 1, -1, 2, 3)


class Classification(str, Enum):
    SMOOTH = "smooth"
    ODP = "ordinary_double_point"
    OTHER_SINGULAR = "other_singular"
    NOT_ON_CURVE = "not_on_curve"
    NEEDS_EXTENSION = "needs_extension"


@dataclass(frozen=True)
class NodeReport:
    point: AffinePoint
    classification: Classification
    tangent_cone: tuple[LinearForm, LinearForm] | None = None
    extension_needed: FieldElement | None = None
    line_survey: tuple[tuple[LinearForm, int | float], ...] | None = None

    @property
    def is_odp(self) -> bool:
        return self.classification is Classification.ODP


def classify_point(F: BivariatePoly, p: AffinePoint, survey: bool = True) -> NodeReport:
    """Smooth / ordinary double point / other singular / not on the curve.

    When the tangent cone only splits after adjoining a square root the
    classification is ``needs_extension`` and ``extension_needed`` holds the
    square class to adjoin.
    """
    if F.is_zero():
        raise ValueError("classify_point needs a nonzero polynomial")
    G = translate_to_origin(F, p)
    if not G.coeff(0, 0).is_zero():
        return NodeReport(p, Classification.NOT_ON_CURVE)
    if not homogeneous_part(G, 1).is_zero():
        return NodeReport(p, Classification.SMOOTH)
    Q = homogeneous_part(G, 2)
    if Q.is_zero():
        rep = NodeReport(p, Classification.OTHER_SINGULAR)
    else:
        try:
            split = split_binary_quadratic(Q)
        except NeedsExtension as exc:
            return NodeReport(p, Classification.NEEDS_EXTENSION, extension_needed=exc.d)
        cone = (split.l1, split.l2)
        cls = Classification.ODP if split.distinct else Classification.OTHER_SINGULAR
        rep = NodeReport(p, cls, tangent_cone=cone if split.distinct else (split.l1, split.l1))
    if not survey:
        return rep
    lines = default_line_sample(F.desc, rep.tangent_cone or ())
    surv = tuple((l, line_multiplicity(F, p, l)) for l in lines)
    return NodeReport(rep.point, rep.classification, rep.tangent_cone, rep.extension_needed, surv)


def classify_candidates(F: BivariatePoly, points: Iterable[AffinePoint]) -> list[NodeReport]:
    return [classify_point(F, p) for p in points]


def line_multiplicity(F: BivariatePoly, p: AffinePoint, l: LinearForm) -> int | float:
    """Order of ``F`` along the line ``l`` through ``p``; ``math.inf`` when the
    line is a component."""
    v = restrict_to_line(translate_to_origin(F, p), l.change_field(F.desc) if l.desc != F.desc else l).ord()
    return math.inf if v is None else v


def default_line_sample(desc, tangents: Sequence[LinearForm] = ()) -> list[LinearForm]:
    """Tangent lines, then ``Y = s*X`` for ``s`` in ``SAMPLE_SLOPES`` and the
    Y-axis ``X = 0``, skipping duplicates."""
    out: list[LinearForm] = []
    for l in tangents:
        l = l.change_field(desc) if l.desc != desc else l
        if l not in out:
            out.append(l)
    for s in SAMPLE_SLOPES:
        l = LinearForm.slope(desc, s)
        if l not in out:
            out.append(l)
    vertical = LinearForm(desc.one(), desc.zero())
    if vertical not in out:
        out.append(vertical)
    return out


def verify_odp_by_lines(F: BivariatePoly, p: AffinePoint, sample: Sequence[LinearForm]) -> bool:
    """Line test for an ordinary double point on a finite sample.

    True iff exactly two sampled lines meet ``F`` at ``p`` with multiplicity
    ``> 2`` and every other sampled line with multiplicity exactly 2.  The
    sample must contain the tangent-cone lines and at least three others.
    """
    distinct = list(dict.fromkeys(sample))
    if len(distinct) < 5:
        raise ValueError("degenerate sample: need the two tangent lines plus at least three others")
    mults = [line_multiplicity(F, p, l) for l in distinct]
    high = sum(1 for m in mults if m > 2)
    return high == 2 and all(m == 2 for m in mults if m <= 2)


def branch_tangents(b: BranchPair) -> tuple[LinearForm, LinearForm]:
    """``(Y - eta_1'(0) X, Y - eta_2'(0) X)``."""
    s1, s2 = b.slopes
    return LinearForm.slope(b.desc, s1), LinearForm.slope(b.desc, s2)

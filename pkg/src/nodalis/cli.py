"""Command line front end.

    nodalis <analyze|branches|intersect|translate|selftest>
            [--field=q|fp:<p>|q-adjoin:<d>] [--precision=N] [--point=x,y]
            [--direction=u,v] [--json] <poly> [<poly2>]

A polynomial argument ``-`` is read from stdin (one polynomial per line).
Exit codes: 0 success, 1 parse or configuration error, 2 geometric
precondition not met, 3 internal consistency failure or failed selftest.
"""
from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Sequence, TextIO

from .errors import (
    ConsistencyError,
    FieldError,
    InsufficientPrecision,
    NeedsExtension,
    OracleError,
    ParseError,
    PreconditionError,
)
from .field import FieldDescriptor, FieldElement, adjoin_sqrt, parse_field
from .intersect import IntersectionReport, classify_smooth_contact, intersect_at_node
from .node import NodeReport, classify_point
from .parsing import parse_polynomial
from .poly import AffinePoint, BivariatePoly, translate_to_origin
from .prep import analyze_discriminant, default_precision, hensel_branch_oracle, node_branches, weierstrass_prepare
from .series import AtLeast, TruncatedSeries
from .translate import TranslationReport, translation_intersections

__all__ = ["Command", "build_parser", "main", "run", "EXIT_OK", "EXIT_CONFIG", "EXIT_PRECONDITION", "EXIT_INTERNAL"]

EXIT_OK = 0
EXIT_CONFIG = 1
EXIT_PRECONDITION = 2
EXIT_INTERNAL = 3

DEFAULT_TRANSLATE_PRECISION = 10


@dataclass
class Command:
    """A fully parsed, field-checked request."""

    name: str
    field: FieldDescriptor
    polys: list[BivariatePoly] = field(default_factory=list)
    texts: list[str] = field(default_factory=list)
    point: AffinePoint | None = None
    direction: tuple[FieldElement, FieldElement] | None = None
    precision: int | None = None


# -- serialisation ----------------------------------------------------------------------


def _s(x) -> str:
    return str(x)


def _mult(m) -> int | str:
    return "infinity" if m == math.inf else int(m)


def _ord(v) -> int | str:
    return f"at_least_{v.n}" if isinstance(v, AtLeast) else int(v)


def series_json(s: TruncatedSeries, var: str = "X") -> dict:
    return {"coeffs": s.to_strings(), "prec": s.prec, "text": s.format(var)}


def node_json(rep: NodeReport) -> dict:
    return {
        "classification": rep.classification.value,
        "tangent_cone": [str(l) for l in rep.tangent_cone] if rep.tangent_cone else None,
        "extension_needed": _s(rep.extension_needed) if rep.extension_needed is not None else None,
        "line_survey": [{"line": str(l), "multiplicity": _mult(m)} for l, m in (rep.line_survey or ())],
    }


def intersection_json(rep: IntersectionReport) -> dict:
    return {
        "per_branch": [_mult(m) for m in rep.per_branch],
        "total": _mult(rep.total),
        "containment": rep.containment,
        "branch_contained": list(rep.branch_contained),
        "misses_node": rep.misses_node,
        "oracle_total": rep.oracle_total,
        "contact": rep.contact.value if rep.contact else None,
        "precision_used": rep.precision_used,
    }


def translation_json(rep: TranslationReport) -> dict:
    return {
        "direction": [_s(c) for c in rep.direction],
        "c1": series_json(rep.c1, "t"),
        "c2": series_json(rep.c2, "t"),
        "points": [{"x": series_json(x, "t"), "y": series_json(y, "t")} for x, y in rep.points],
        "q_on_C_residual": [_ord(v) for v in rep.q_on_C_residual],
        "q_on_Ct_residual": [_ord(v) for v in rep.q_on_Ct_residual],
        "distinctness_ord": _ord(rep.distinctness_ord),
        "transversality_ord": [_ord(v) for v in rep.transversality_ord],
        "exact_membership": list(rep.exact_membership),
        "verified": rep.ok,
    }


# -- commands ------------------------------------------------------------------------


def _local(cmd: Command, F: BivariatePoly) -> BivariatePoly:
    return translate_to_origin(F, cmd.point) if cmd.point is not None else F


def _origin(desc):
    return AffinePoint.of(desc, 0, 0)


def cmd_analyze(cmd: Command) -> dict:
    F = cmd.polys[0]
    p = cmd.point or _origin(cmd.field)
    rep = classify_point(F, p)
    out = node_json(rep)
    out["extended"] = None
    if rep.extension_needed is not None and not cmd.field.is_extension:
        E = adjoin_sqrt(cmd.field, rep.extension_needed)
        pe = AffinePoint(E(p.x), E(p.y))
        out["extended"] = {"field": str(E), **node_json(classify_point(F.change_field(E), pe))}
    return out


def cmd_branches(cmd: Command) -> dict:
    F = _local(cmd, cmd.polys[0])
    N = cmd.precision or default_precision(F)
    FE, b = node_branches(F, N)
    w = weierstrass_prepare(FE, N + 1)
    a = analyze_discriminant(w)
    return {
        "working_field": str(FE.desc),
        "eta1": series_json(b.eta1),
        "eta2": series_json(b.eta2),
        "slopes": [_s(s) for s in b.slopes],
        "weierstrass": {"d": w.d, "c": [series_json(c) for c in w.c]},
        "discriminant": {"verdict": a.verdict.value, "series": series_json(a.D)},
        "oracle_agrees": b.same_unordered(hensel_branch_oracle(FE, N), N),
    }


def cmd_intersect(cmd: Command) -> dict:
    F, H = (_local(cmd, P) for P in cmd.polys[:2])
    N = cmd.precision or default_precision(F)
    FE, b = node_branches(F, max(N, 2))
    rep = intersect_at_node(FE, H, b, N_bound=cmd.precision, oracle=True)
    out = intersection_json(rep)
    HE = H.change_field(FE.desc) if H.desc != FE.desc else H
    finite = not rep.misses_node and rep.total != math.inf
    if finite and not (HE.coeff(1, 0).is_zero() and HE.coeff(0, 1).is_zero()):
        out["contact"] = classify_smooth_contact(FE, HE, b).contact.value
    out["working_field"] = str(FE.desc)
    return out


def cmd_translate(cmd: Command) -> dict:
    F = _local(cmd, cmd.polys[0])
    N = cmd.precision or DEFAULT_TRANSLATE_PRECISION
    d = cmd.direction or (cmd.field(0), cmd.field(1))
    FE, b = node_branches(F, N + 2)
    rep = translation_intersections(FE, b, d[0], d[1], N)
    return {"working_field": str(FE.desc), **translation_json(rep)}


def cmd_selftest(cmd: Command) -> dict:
    from .acceptance import run_all

    results = run_all()
    return {
        "criteria": [
            {"number": r.number, "name": r.name, "passed": r.passed, "detail": r.detail} for r in results
        ],
        "all_passed": all(r.passed for r in results),
    }


COMMANDS = {
    "analyze": (cmd_analyze, 1),
    "branches": (cmd_branches, 1),
    "intersect": (cmd_intersect, 2),
    "translate": (cmd_translate, 1),
    "selftest": (cmd_selftest, 0),
}


def run(cmd: Command) -> tuple[int, dict]:
    """Execute ``cmd``; returns ``(exit_code, json_document)``."""
    doc: dict[str, Any] = {
        "command": cmd.name,
        "input": {
            "polynomials": cmd.texts,
            "point": [_s(cmd.point.x), _s(cmd.point.y)] if cmd.point else None,
            "direction": [_s(c) for c in cmd.direction] if cmd.direction else None,
        },
        "field": str(cmd.field),
        "precision": cmd.precision,
    }
    fn, _ = COMMANDS[cmd.name]
    try:
        doc["report"] = fn(cmd)
    except (PreconditionError, NeedsExtension, InsufficientPrecision) as exc:
        doc["error"] = {"type": type(exc).__name__, "message": str(exc)}
        return EXIT_PRECONDITION, doc
    except (ConsistencyError, OracleError) as exc:
        doc["error"] = {"type": type(exc).__name__, "message": str(exc)}
        return EXIT_INTERNAL, doc
    if cmd.name == "selftest" and not doc["report"]["all_passed"]:
        return EXIT_INTERNAL, doc
    return EXIT_OK, doc


# -- argument handling -----------------------------------------------------------------


def _pair(text: str, desc: FieldDescriptor, what: str) -> tuple[FieldElement, FieldElement]:
    parts = text.split(",")
    if len(parts) != 2:
        raise ValueError(f"--{what} expects two comma-separated values, got {text!r}")
    try:
        return desc(Fraction(parts[0].strip())), desc(Fraction(parts[1].strip()))
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"--{what}: {exc}") from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", default="q", help="q, fp:<p>, q-adjoin:<d> or fp:<p>-adjoin:<d>")
    common.add_argument("--precision", type=int, default=None, help="truncation order N")
    common.add_argument("--point", default=None, help="marked point x,y (default 0,0)")
    common.add_argument("--json", action="store_true", help="emit a JSON report")
    ap = argparse.ArgumentParser(prog="nodalis", description="Local analysis of nodal plane curves.")
    sub = ap.add_subparsers(dest="command", required=True)
    for name, (_, npolys) in COMMANDS.items():
        sp = sub.add_parser(name, parents=[common])
        if name == "translate":
            sp.add_argument("--direction", default="0,1", help="translation direction u,v")
        if npolys >= 1:
            sp.add_argument("poly", help="curve F, or - for stdin")
        if npolys == 2:
            sp.add_argument("poly2", help="second curve H, or - for stdin")
    return ap


def _read_polys(texts: list[str], stdin: TextIO) -> list[str]:
    if "-" not in texts:
        return texts
    lines = [l.strip() for l in stdin.read().splitlines() if l.strip()]
    out = []
    for t in texts:
        if t == "-":
            if not lines:
                raise ValueError("stdin does not hold enough polynomials")
            out.append(lines.pop(0))
        else:
            out.append(t)
    return out


def parse_command(argv: Sequence[str], stdin: TextIO) -> Command:
    ns = build_parser().parse_args(argv)
    desc = parse_field(ns.field)
    if ns.precision is not None and ns.precision < 2:
        raise ValueError("--precision must be at least 2")
    texts = [t for t in (getattr(ns, "poly", None), getattr(ns, "poly2", None)) if t is not None]
    texts = _read_polys(texts, stdin)
    polys = [parse_polynomial(t, desc) for t in texts]
    for P in polys:
        if P.is_zero():
            raise ValueError("the zero polynomial does not define a curve")
    point = AffinePoint(*_pair(ns.point, desc, "point")) if ns.point else None
    direction = _pair(ns.direction, desc, "direction") if getattr(ns, "direction", None) else None
    return Command(ns.command, desc, polys, texts, point, direction, ns.precision)


# -- text rendering ---------------------------------------------------------------------


def _render(doc: dict) -> str:
    rep = doc.get("report")
    if rep is None:
        return f"error ({doc['error']['type']}): {doc['error']['message']}"
    name = doc["command"]
    lines = []
    if name == "selftest":
        for c in rep["criteria"]:
            mark = "PASS" if c["passed"] else "FAIL"
            lines.append(f"[{mark}] {c['number']}. {c['name']}: {c['detail']}")
        lines.append("all passed" if rep["all_passed"] else "FAILURES")
        return "\n".join(lines)
    if name == "analyze":
        lines.append(f"classification: {rep['classification']}")
        if rep["tangent_cone"]:
            lines.append(f"tangent cone: {', '.join(rep['tangent_cone'])}")
        if rep["extension_needed"]:
            lines.append(f"extension needed: sqrt({rep['extension_needed']})")
        for l in rep["line_survey"]:
            lines.append(f"  line {l['line']} = 0: multiplicity {l['multiplicity']}")
        if rep["extended"]:
            e = rep["extended"]
            lines.append(f"over {e['field']}: {e['classification']}, tangent cone {', '.join(e['tangent_cone'] or [])}")
        return "\n".join(lines)
    lines.append(f"field: {rep['working_field']}")
    if name == "branches":
        lines.append(f"eta1 = {rep['eta1']['text']}")
        lines.append(f"eta2 = {rep['eta2']['text']}")
        lines.append(f"discriminant: {rep['discriminant']['verdict']}; oracle agrees: {rep['oracle_agrees']}")
    elif name == "intersect":
        lines.append(f"per branch: {rep['per_branch'][0]}, {rep['per_branch'][1]}")
        lines.append(f"total: {rep['total']} (resultant oracle: {rep['oracle_total']})")
        if rep["contact"]:
            lines.append(f"contact: {rep['contact']}")
        if rep["containment"]:
            lines.append("F divides H: H contains C")
    elif name == "translate":
        lines.append(f"c1(t) = {rep['c1']['text']}")
        lines.append(f"c2(t) = {rep['c2']['text']}")
        lines.append(f"residual ords on C: {rep['q_on_C_residual']}, on C_t: {rep['q_on_Ct_residual']}")
        lines.append(f"ord(c1 - c2) = {rep['distinctness_ord']}; transversality {rep['transversality_ord']}")
    return "\n".join(lines)


def main(argv: Sequence[str] | None = None, stdin: TextIO | None = None, stdout: TextIO | None = None) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    argv = list(sys.argv[1:] if argv is None else argv)
    want_json = "--json" in argv
    try:
        cmd = parse_command(argv, stdin)
    except SystemExit as exc:  # argparse usage errors
        return EXIT_CONFIG if exc.code else EXIT_OK
    except (ParseError, FieldError, ValueError) as exc:
        doc = {"error": {"type": type(exc).__name__, "message": str(exc)}, "exit_code": EXIT_CONFIG}
        if isinstance(exc, ParseError):
            doc["error"]["position"] = exc.position
        print(json.dumps(doc) if want_json else f"error: {exc}", file=stdout if want_json else sys.stderr)
        return EXIT_CONFIG
    code, doc = run(cmd)
    doc["exit_code"] = code
    if want_json:
        print(json.dumps(doc, indent=2), file=stdout)
    else:
        print(_render(doc), file=stdout if code == EXIT_OK else sys.stderr)
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())

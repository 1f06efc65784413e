"""Command-line front end.

Subcommands expose the classifiers, the finite-field oracles, and the
branching probes with machine-readable output (text, json with a
versioned schema, or plot-ready tsv).

Exit codes: 0 success, 1 parse error, 2 budget exceeded, 3 internal
cross-check disagreement (an oracle contradicting a proven verdict is
always a bug or a documented caveat, and is printed loudly).
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .classify import (
    Status,
    classify_AIII_borel,
    classify_double_flag,
    mwz_classify_A,
    mwz_classify_C,
)
from .clans import enumerate_clans
from .compositions import Composition, SymplecticComposition
from .errors import BudgetExceededError, CrossCheckError, DflagError, ParseError
from .flags import DEFAULT_BUDGET
from .groups import GroupFamily, ParabolicSpec, gl, sp
from .lr import (
    Partition,
    restrict_to_levi,
    spherical_probe_restriction,
    spherical_probe_tensor,
    tensor_decompose,
    weyl_dim_gl,
)
from .orbits import count_triple_orbits, growth_probe
from .pairs import KParabolicSpec, PairKind, SymmetricPairSpec
from .weyl import bruhat_double_cosets, twisted_involutions

__all__ = ["main"]

SCHEMA_VERSION = 1
BUDGET_ENV = "DFLAG_BUDGET"


class _Parser(argparse.ArgumentParser):
    """argparse that reports bad input through ParseError (exit 1)."""

    def error(self, message):
        raise ParseError(message)


def _default_budget() -> int:
    raw = os.environ.get(BUDGET_ENV)
    if raw is None:
        return DEFAULT_BUDGET
    try:
        return int(raw)
    except ValueError as exc:
        raise ParseError(f"bad {BUDGET_ENV} value {raw!r}") from exc


def _build_parser() -> _Parser:
    parser = _Parser(prog="dflag", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_text):
        p = sub.add_parser(name, help=help_text, description=help_text)
        p.add_argument(
            "--format",
            choices=("text", "json", "tsv"),
            default="text",
            help="tsv columns: probe-orbits q/points/orbits; triple-orbits "
            "q/orbits; branch target/multiplicity; others key/value",
        )
        return p

    p = add("mwz", "classify a triple of parabolic shapes (GL or Sp tables)")
    p.add_argument("--family", choices=("A", "C"), required=True)
    p.add_argument("--n", type=int, required=True, help="rank: GL_n or Sp_2n")
    p.add_argument("--triple", required=True, help="three shapes, ';'-separated")

    p = add("classify", "double-flag verdict: both criteria plus summary tables")
    p.add_argument("--pair", required=True)
    p.add_argument("--p", required=True, help="parabolic shape of G")
    p.add_argument("--q", required=True, help="K-parabolic factor shapes, ';'-separated")

    p = add("aiii-borel", "the five-case table for AIII with P = Borel")
    p.add_argument("--pair", required=True, help="AIII:p,q with q >= p")
    p.add_argument("--q", required=True, help="Q1;Q2")

    p = add("probe-orbits", "orbit counts of K(F_q) on the double flag variety")
    p.add_argument("--pair", required=True)
    p.add_argument("--p", required=True)
    p.add_argument("--q", required=True)
    p.add_argument("--qlist", default="2,3")
    p.add_argument("--budget", type=int, default=None)

    p = add("triple-orbits", "orbit counts of diagonal G(F_q) on a flag product")
    p.add_argument("--family", choices=("A", "C"), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--triple", required=True, help="two or three shapes, ';'-separated")
    p.add_argument("--qlist", default="2,3")
    p.add_argument("--budget", type=int, default=None)

    p = add("bruhat", "double coset count and minimal-length representatives")
    p.add_argument("--family", choices=("A", "C"), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", required=True)
    p.add_argument("--q2", required=True, help="second parabolic shape")

    p = add("clans", "clans of signature (p, q)")
    p.add_argument("--pair", required=True, help="AIII:p,q")

    p = add("twisted-involutions", "elements v of W with theta(v) = v^{-1}")
    p.add_argument("--family", choices=("A", "C"), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--twist", choices=("identity", "flip"), default="identity")

    p = add("branch", "restriction to a Levi or tensor decomposition")
    p.add_argument("--mode", choices=("restrict", "tensor"), required=True)
    p.add_argument("--weight", required=True, help="partition, e.g. 3,2,1")
    p.add_argument("--weight2", help="second partition (tensor mode)")
    p.add_argument("--pair", help="AIII:p,q (restrict mode)")
    p.add_argument("--n", type=int, help="rank bound (tensor mode)")

    p = add("spherical-probe", "multiplicity-freeness sweeps for a parabolic")
    p.add_argument("--pair", required=True)
    p.add_argument("--p", required=True)
    p.add_argument("--kmax", type=int, default=4)
    p.add_argument("--lmax", type=int, default=4)

    p = add("report", "full cross-checked dossier for one (pair, P, Q)")
    p.add_argument("--pair", required=True)
    p.add_argument("--p", required=True)
    p.add_argument("--q", required=True)
    p.add_argument("--qlist", default="2,3")
    p.add_argument("--kmax", type=int, default=3)
    p.add_argument("--lmax", type=int, default=3)
    p.add_argument("--budget", type=int, default=None)

    return parser


def _parse_qlist(text: str) -> tuple[int, ...]:
    try:
        values = tuple(int(t) for t in text.split(",") if t.strip())
    except ValueError as exc:
        raise ParseError(f"bad --qlist {text!r}") from exc
    if not values:
        raise ParseError("--qlist must name at least one prime")
    return values


def _group_shape(family: str, n: int, text: str):
    if family == "A":
        shape = Composition.parse(text)
        if shape.size != n:
            raise ParseError(f"shape {text!r} has size {shape.size}, expected {n}")
        return gl(n), shape
    shape = SymplecticComposition.parse(text)
    if shape.size != 2 * n:
        raise ParseError(f"shape {text!r} has size {shape.size}, expected {2 * n}")
    return sp(n), shape


def _pair_and_parabolic(pair_token: str, p_text: str):
    """Build the pair (inferring rank from the shape when needed) and P."""
    head = pair_token.split(":")[0].strip().upper()
    if head in ("CI", "CII"):
        shape = SymplecticComposition.parse(p_text)
    else:
        shape = Composition.parse(p_text)
    pair = SymmetricPairSpec.parse(pair_token, ambient_dim=shape.size)
    P = ParabolicSpec(pair.group, shape)
    return pair, P


def _emit(doc: dict, text_lines: list[str], tsv_rows: list[tuple], fmt: str) -> str:
    if fmt == "json":
        return json.dumps(doc, sort_keys=True)
    if fmt == "tsv":
        return "\n".join("\t".join(str(x) for x in row) for row in tsv_rows)
    return "\n".join(text_lines)


def _cmd_mwz(args) -> tuple[int, str]:
    shapes = [t for t in args.triple.split(";") if t.strip()]
    if len(shapes) != 3:
        raise ParseError("--triple needs exactly three shapes")
    if args.family == "A":
        comps = [Composition.parse(t) for t in shapes]
        for c in comps:
            if c.size != args.n:
                raise ParseError(f"shape {c} has size {c.size}, expected {args.n}")
        verdict = mwz_classify_A(*comps)
    else:
        comps = [SymplecticComposition.parse(t) for t in shapes]
        for c in comps:
            if c.size != 2 * args.n:
                raise ParseError(f"shape {c} has size {c.size}, expected {2 * args.n}")
        verdict = mwz_classify_C(*comps)
    doc = {
        "schema": SCHEMA_VERSION,
        "command": "mwz",
        "finite": verdict.finite,
        "matched_rows": [
            {"family": r.family, "label": r.label} for r in verdict.matched_rows
        ],
        "normalized_triple": [list(p) for p in verdict.normalized_triple],
    }
    word = "finite" if verdict.finite else "infinite"
    lines = [f"{word}: {', '.join(verdict.labels()) if verdict.finite else 'no table row matches'}"]
    rows = [("finite", verdict.finite)] + [("row", lbl) for lbl in verdict.labels()]
    return 0, _emit(doc, lines, rows, args.format)


def _verdict_doc(verdict, summary_rows) -> dict:
    doc = {
        "status": verdict.status.value,
        "witness": verdict.witness.as_dict() if verdict.witness else None,
        "summary_rows": [
            {"citation": r.citation, "description": r.description} for r in summary_rows
        ],
    }
    return doc


def _cmd_classify(args) -> tuple[int, str]:
    pair, P = _pair_and_parabolic(args.pair, args.p)
    Q = KParabolicSpec.parse(pair, args.q)
    verdict, rows = classify_double_flag(pair, P, Q)
    doc = {"schema": SCHEMA_VERSION, "command": "classify", **_verdict_doc(verdict, rows)}
    lines = [f"status: {verdict.status.value}"]
    if verdict.witness:
        for k, v in sorted(verdict.witness.as_dict().items()):
            lines.append(f"  {k}: {v}")
    for r in rows:
        lines.append(f"summary: {r.citation} ({r.description})")
    tsv = [("status", verdict.status.value)]
    return 0, _emit(doc, lines, tsv, args.format)


def _cmd_aiii_borel(args) -> tuple[int, str]:
    pair = SymmetricPairSpec.parse(args.pair)
    if pair.kind is not PairKind.AIII:
        raise ParseError("aiii-borel needs an AIII:p,q pair")
    Q = KParabolicSpec.parse(pair, args.q)
    case = classify_AIII_borel(pair.p, pair.q, Q.factors[0], Q.factors[1])
    doc = {"schema": SCHEMA_VERSION, "command": "aiii-borel", "case": case}
    return 0, _emit(doc, [f"case: {case}"], [("case", case)], args.format)


def _report_rows(report) -> list[tuple]:
    rows = [("q", "points", "orbits")]
    rows += [(q, pts, orb) for q, pts, orb in report.entries]
    return rows


def _cmd_probe_orbits(args) -> tuple[int, str]:
    pair, P = _pair_and_parabolic(args.pair, args.p)
    Q = KParabolicSpec.parse(pair, args.q)
    budget = args.budget if args.budget is not None else _default_budget()
    report = growth_probe(pair, P, Q, _parse_qlist(args.qlist), budget)
    doc = {
        "schema": SCHEMA_VERSION,
        "command": "probe-orbits",
        "entries": report.rows(),
        "hint": report.hint,
    }
    lines = [f"q={q} points={pts} orbits={orb}" for q, pts, orb in report.entries]
    lines.append(f"hint: {report.hint}")
    return 0, _emit(doc, lines, _report_rows(report), args.format)


def _cmd_triple_orbits(args) -> tuple[int, str]:
    shapes = [t for t in args.triple.split(";") if t.strip()]
    if len(shapes) not in (2, 3):
        raise ParseError("--triple needs two or three shapes")
    group = None
    specs = []
    for t in shapes:
        group, shape = _group_shape(args.family, args.n, t)
        specs.append(ParabolicSpec(group, shape))
    budget = args.budget if args.budget is not None else _default_budget()
    entries = []
    for q in _parse_qlist(args.qlist):
        orbits = count_triple_orbits(group, specs, q, budget)
        entries.append((q, orbits))
    doc = {
        "schema": SCHEMA_VERSION,
        "command": "triple-orbits",
        "entries": [{"q": q, "orbits": orb} for q, orb in entries],
    }
    lines = [f"q={q} orbits={orb}" for q, orb in entries]
    rows = [("q", "orbits")] + entries
    return 0, _emit(doc, lines, rows, args.format)


def _cmd_bruhat(args) -> tuple[int, str]:
    group, shape = _group_shape(args.family, args.n, args.p)
    _, shape2 = _group_shape(args.family, args.n, args.q2)
    result = bruhat_double_cosets(
        ParabolicSpec(group, shape), ParabolicSpec(group, shape2)
    )
    reps = [str(w) for w in result.representatives]
    doc = {
        "schema": SCHEMA_VERSION,
        "command": "bruhat",
        "count": result.count,
        "representatives": reps,
    }
    lines = [f"count: {result.count}"] + [f"  {r}" for r in reps]
    rows = [("count", result.count)] + [("rep", r) for r in reps]
    return 0, _emit(doc, lines, rows, args.format)


def _cmd_clans(args) -> tuple[int, str]:
    pair = SymmetricPairSpec.parse(args.pair)
    if pair.kind is not PairKind.AIII:
        raise ParseError("clans need an AIII:p,q signature")
    clans = enumerate_clans(pair.p, pair.q)
    doc = {
        "schema": SCHEMA_VERSION,
        "command": "clans",
        "count": len(clans),
        "clans": [str(c) for c in clans],
    }
    lines = [f"count: {len(clans)}"] + [f"  {c}" for c in clans]
    rows = [("count", len(clans))] + [("clan", str(c)) for c in clans]
    return 0, _emit(doc, lines, rows, args.format)


def _cmd_twisted_involutions(args) -> tuple[int, str]:
    group = gl(args.n) if args.family == "A" else sp(args.n)
    elements = twisted_involutions(group, args.twist)
    doc = {
        "schema": SCHEMA_VERSION,
        "command": "twisted-involutions",
        "count": len(elements),
        "elements": [str(w) for w in elements],
    }
    lines = [f"count: {len(elements)}"] + [f"  {w}" for w in elements]
    rows = [("count", len(elements))] + [("element", str(w)) for w in elements]
    return 0, _emit(doc, lines, rows, args.format)


def _cmd_branch(args) -> tuple[int, str]:
    lam = Partition.parse(args.weight)
    if args.mode == "restrict":
        if not args.pair:
            raise ParseError("restrict mode needs --pair AIII:p,q")
        pair = SymmetricPairSpec.parse(args.pair)
        if pair.kind is not PairKind.AIII:
            raise ParseError("restriction targets come from an AIII:p,q pair")
        dec = restrict_to_levi(lam, pair.p, pair.q)
        terms = [
            {"target": [str(mu), str(nu)], "multiplicity": c} for (mu, nu), c in dec
        ]
        lines = [f"({mu}) x ({nu}): {c}" for (mu, nu), c in dec]
        rows = [("mu", "nu", "multiplicity")] + [
            (str(mu), str(nu), c) for (mu, nu), c in dec
        ]
        audit = weyl_dim_gl(lam, pair.p + pair.q)
    else:
        if args.weight2 is None or args.n is None:
            raise ParseError("tensor mode needs --weight2 and --n")
        mu = Partition.parse(args.weight2)
        dec = tensor_decompose(lam, mu, args.n)
        terms = [{"target": str(nu), "multiplicity": c} for nu, c in dec]
        lines = [f"({nu}): {c}" for nu, c in dec]
        rows = [("nu", "multiplicity")] + [(str(nu), c) for nu, c in dec]
        audit = weyl_dim_gl(lam, args.n) * weyl_dim_gl(mu, args.n)
    doc = {
        "schema": SCHEMA_VERSION,
        "command": "branch",
        "mode": args.mode,
        "terms": terms,
        "multiplicity_free": dec.is_multiplicity_free,
        "dimension_audit": audit,
    }
    lines.append(f"multiplicity-free: {dec.is_multiplicity_free}")
    return 0, _emit(doc, lines, rows, args.format)


def _cmd_spherical_probe(args) -> tuple[int, str]:
    pair, P = _pair_and_parabolic(args.pair, args.p)
    if pair.group.family is not GroupFamily.GENERAL_LINEAR:
        raise ParseError("spherical probes are implemented for type A pairs")
    tensor = spherical_probe_tensor(P, pair, args.kmax, args.lmax)
    doc = {
        "schema": SCHEMA_VERSION,
        "command": "spherical-probe",
        "tensor": {
            "multiplicity_free": tensor.multiplicity_free,
            "first_failure": list(tensor.first_failure) if tensor.first_failure else None,
            "k_max": tensor.k_max,
            "l_max": tensor.l_max,
        },
    }
    lines = [
        f"tensor sweep (k<={args.kmax}, l<={args.lmax}): "
        + ("multiplicity free" if tensor.multiplicity_free else f"fails at {tensor.first_failure}")
    ]
    rows = [("probe", "multiplicity_free", "first_failure")]
    rows.append(("tensor", tensor.multiplicity_free, tensor.first_failure or ""))
    if pair.kind is PairKind.AIII:
        restr = spherical_probe_restriction(P, pair.p, pair.q, args.kmax)
        doc["restriction"] = {
            "multiplicity_free": restr.multiplicity_free,
            "first_failure": restr.first_failure,
            "k_max": restr.k_max,
        }
        lines.append(
            f"restriction sweep (k<={args.kmax}): "
            + ("multiplicity free" if restr.multiplicity_free else f"fails at k={restr.first_failure}")
        )
        rows.append(("restriction", restr.multiplicity_free, restr.first_failure or ""))
    return 0, _emit(doc, lines, rows, args.format)


def _cmd_report(args) -> tuple[int, str]:
    pair, P = _pair_and_parabolic(args.pair, args.p)
    Q = KParabolicSpec.parse(pair, args.q)
    budget = args.budget if args.budget is not None else _default_budget()
    verdict, rows = classify_double_flag(pair, P, Q)
    report = growth_probe(pair, P, Q, _parse_qlist(args.qlist), budget)
    doc = {
        "schema": SCHEMA_VERSION,
        "command": "report",
        **_verdict_doc(verdict, rows),
        "oracle": {"entries": report.rows(), "hint": report.hint},
    }
    lines = [f"status: {verdict.status.value}"]
    if verdict.witness:
        for k, v in sorted(verdict.witness.as_dict().items()):
            lines.append(f"  {k}: {v}")
    for r in rows:
        lines.append(f"summary: {r.citation} ({r.description})")
    for q, pts, orb in report.entries:
        lines.append(f"oracle: q={q} points={pts} orbits={orb}")
    lines.append(f"oracle hint: {report.hint}")

    probes_doc = {}
    if pair.group.family is GroupFamily.GENERAL_LINEAR and P.is_standard:
        tensor = spherical_probe_tensor(P, pair, args.kmax, args.lmax)
        probes_doc["tensor_multiplicity_free"] = tensor.multiplicity_free
        lines.append(f"tensor probe: multiplicity_free={tensor.multiplicity_free}")
        if pair.kind is PairKind.AIII:
            restr = spherical_probe_restriction(P, pair.p, pair.q, args.kmax)
            probes_doc["restriction_multiplicity_free"] = restr.multiplicity_free
            lines.append(
                f"restriction probe: multiplicity_free={restr.multiplicity_free}"
            )
            if tensor.multiplicity_free and not restr.multiplicity_free:
                raise CrossCheckError(
                    "tensor sweep is multiplicity free but the restriction sweep "
                    "is not; this contradicts the sphericity implication"
                )
    doc["branching_probes"] = probes_doc or None

    agreement = True
    caveat = None
    if verdict.status is Status.FINITE_PROVEN and report.hint == "Growing":
        agreement = False
        caveat = (
            "proven-finite verdict but orbit counts grow along "
            f"{[e[0] for e in report.entries]}: {[e[2] for e in report.entries]}. "
            "If q = 2 is in the list this can be the known square-class "
            "splitting of disconnected stabilizers in characteristic 2 "
            "(re-probe at odd q); otherwise it is a bug."
        )
    if verdict.status is Status.INFINITE_PROVEN and report.hint == "Bounded":
        agreement = False
        caveat = "proven-infinite verdict but orbit counts do not grow; this is a bug"
    doc["agreement"] = agreement
    doc["caveat"] = caveat
    if not agreement:
        lines.append("DISAGREEMENT: " + caveat)
        return 3, _emit(doc, lines, [("agreement", False)], args.format)
    lines.append("agreement: ok")
    return 0, _emit(doc, lines, [("agreement", True)], args.format)


_COMMANDS = {
    "mwz": _cmd_mwz,
    "classify": _cmd_classify,
    "aiii-borel": _cmd_aiii_borel,
    "probe-orbits": _cmd_probe_orbits,
    "triple-orbits": _cmd_triple_orbits,
    "bruhat": _cmd_bruhat,
    "clans": _cmd_clans,
    "twisted-involutions": _cmd_twisted_involutions,
    "branch": _cmd_branch,
    "spherical-probe": _cmd_spherical_probe,
    "report": _cmd_report,
}


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        code, output = _COMMANDS[args.command](args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 1
    except BudgetExceededError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return 2
    except CrossCheckError as exc:
        print(f"CROSS-CHECK DISAGREEMENT: {exc}", file=sys.stderr)
        return 3
    except DflagError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 1
    if output:
        print(output)
    return code


if __name__ == "__main__":
    sys.exit(main())

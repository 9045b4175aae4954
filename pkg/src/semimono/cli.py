"""Command-line front end: classify matrices, run theorem audits, explore
for counterexamples, and solve LCP instances.

File formats are exact-rational only: a matrix file holds the order n on
the first line and then n rows of n whitespace-separated tokens, each an
integer or p/q fraction; a vector file holds n and then n tokens.  Floats
are rejected on sight.

Exit codes: 0 = ran and every asserted property passed; 1 = a validated
counterexample or violation was found; 2 = usage or parse error.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from fractions import Fraction
from pathlib import Path
from typing import Optional, Sequence

from . import classify as cls
from . import explore, lcp, verify
from .classify import Variant
from .ratcore import RatMatrix, RatVector

SCHEMA = "semimono-report/1"


class CliError(Exception):
    """Usage or parse failure; maps to exit code 2."""


# ---------------------------------------------------------------------------
# exact I/O


def parse_rational_token(token: str, where: str) -> Fraction:
    if any(ch in token for ch in ".eE"):
        raise CliError(f"{where}: token {token!r} is not an exact rational (floats are rejected)")
    try:
        return Fraction(token)
    except (ValueError, ZeroDivisionError) as exc:
        raise CliError(f"{where}: bad rational token {token!r} ({exc})") from exc


def parse_matrix_text(text: str, source: str) -> RatMatrix:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise CliError(f"{source}: empty matrix file")
    try:
        n = int(lines[0].strip())
    except ValueError as exc:
        raise CliError(f"{source}: first line must be the order, got {lines[0]!r}") from exc
    if n < 1:
        raise CliError(f"{source}: order must be >= 1")
    if len(lines) != n + 1:
        raise CliError(f"{source}: expected {n} rows after the order line, got {len(lines) - 1}")
    rows = []
    for i, line in enumerate(lines[1:], start=1):
        tokens = line.split()
        if len(tokens) != n:
            raise CliError(f"{source}: row {i} has {len(tokens)} entries, expected {n}")
        rows.append(
            [parse_rational_token(tok, f"{source}: row {i}, column {j}") for j, tok in enumerate(tokens, start=1)]
        )
    return RatMatrix(rows)


def parse_vector_text(text: str, source: str) -> RatVector:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise CliError(f"{source}: empty vector file")
    try:
        n = int(lines[0].strip())
    except ValueError as exc:
        raise CliError(f"{source}: first line must be the length, got {lines[0]!r}") from exc
    tokens = " ".join(lines[1:]).split()
    if len(tokens) != n:
        raise CliError(f"{source}: expected {n} entries, got {len(tokens)}")
    return tuple(
        parse_rational_token(tok, f"{source}: entry {j}") for j, tok in enumerate(tokens, start=1)
    )


def load_matrix(path: str) -> RatMatrix:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc}") from exc
    return parse_matrix_text(text, path)


def load_vector(path: str) -> RatVector:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc}") from exc
    return parse_vector_text(text, path)


def format_matrix(m: RatMatrix) -> str:
    body = "\n".join(" ".join(str(v) for v in row) for row in m.entries)
    return f"{m.rows}\n{body}\n"


def format_vector(v: RatVector) -> str:
    return f"{len(v)}\n{' '.join(str(x) for x in v)}\n"


def _digest(*canonical_texts: str) -> str:
    h = hashlib.sha256()
    for text in canonical_texts:
        h.update(text.encode())
    return f"sha256:{h.hexdigest()}"


# ---------------------------------------------------------------------------
# JSON views


def _mat_json(m: RatMatrix) -> dict:
    return {"order": m.rows, "entries": [[str(v) for v in row] for row in m.entries]}


def _vec_json(v: RatVector) -> list[str]:
    return [str(x) for x in v]


def _witness_json(w) -> Optional[dict]:
    if w is None:
        return None
    if isinstance(w, cls.SupportWitness):
        return {"support": list(w.support.members), "vector": _vec_json(w.vector)}
    return {"support": list(w.support.members), "minor": str(w.minor)}


def _verdict_json(v: cls.ClassVerdict) -> dict:
    return {"label": v.label.value, "member": v.member, "witness": _witness_json(v.witness)}


def _exact_order_json(r: cls.ExactOrderResult) -> dict:
    return {
        "variant": r.variant.value,
        "k": r.k,
        "evidence": [s.value for s in r.evidence],
    }


def _audit_json(r: verify.AuditReport) -> dict:
    return {
        "audit": r.audit_id,
        "hypotheses_met": r.hypotheses_met,
        "hypotheses_note": r.hypotheses_note,
        "conclusions": [
            {"name": c.name, "passed": c.passed, "evidence": c.evidence} for c in r.conclusions
        ],
        "counterexample": None if r.counterexample is None else _mat_json(r.counterexample),
    }


def _search_json(r: explore.SearchReport) -> dict:
    return {
        "target": r.target,
        "attempts": r.attempts,
        "hit_count": r.hit_count,
        "hits": [_mat_json(m) for m in r.hits],
        "counterexamples": [
            {"matrix": _mat_json(c.matrix), "failed": c.failed, "evidence": c.evidence}
            for c in r.counterexamples
        ],
        "notes": list(r.notes),
    }


def _emit(report: dict, as_json: bool, human_text: str) -> None:
    if as_json:
        print(json.dumps(report, indent=2, sort_keys=True))
    else:
        print(human_text, end="" if human_text.endswith("\n") else "\n")


def _report_envelope(command: Sequence[str], digest: str, results: dict, started: float) -> dict:
    return {
        "schema": SCHEMA,
        "command": list(command),
        "input_digest": digest,
        "results": results,
        "timing_seconds": round(time.monotonic() - started, 6),
    }


# ---------------------------------------------------------------------------
# subcommands


def _cmd_classify(args: argparse.Namespace, argv: Sequence[str]) -> int:
    started = time.monotonic()
    a = load_matrix(args.matrix)
    n = a.order
    results: dict = {"order": n}
    verdicts = {
        "semimonotone": cls.is_semimonotone(a),
        "strictly_semimonotone": cls.is_strictly_semimonotone(a),
        "P0": cls.is_P0(a),
        "P": cls.is_P(a),
        "copositive": cls.is_copositive(a),
        "strictly_copositive": cls.is_strictly_copositive(a),
        "inverse_Z": cls.is_inverse_Z(a),
    }
    if n >= 2:
        verdicts["almost_semimonotone"] = cls.is_almost_semimonotone(a, Variant.E0)
        verdicts["almost_strictly_semimonotone"] = cls.is_almost_semimonotone(a, Variant.E)
    results["verdicts"] = {k: _verdict_json(v) for k, v in verdicts.items()}
    results["Z"] = cls.is_Z(a)
    results["nonnegative"] = cls.is_nonnegative(a)
    orders = {
        "E0": cls.exact_order(a, Variant.E0),
        "E": cls.exact_order(a, Variant.E),
        "copositive_E0": cls.copositive_exact_order(a, Variant.E0),
        "copositive_E": cls.copositive_exact_order(a, Variant.E),
    }
    results["exact_order"] = {k: _exact_order_json(r) for k, r in orders.items()}
    profile = cls.negative_entry_profile(a)
    results["negative_entries"] = {
        "rows": list(profile.row_counts),
        "columns": list(profile.column_counts),
    }

    lines = [f"matrix {args.matrix} (order {n})"]
    for key, verdict in verdicts.items():
        mark = "yes" if verdict.member else "no"
        extra = ""
        if verdict.witness is not None and not verdict.member:
            if isinstance(verdict.witness, cls.SupportWitness):
                extra = f"  [witness support {verdict.witness.support}]"
            else:
                extra = f"  [witness minor at {verdict.witness.support}: {verdict.witness.minor}]"
        lines.append(f"  {key:32s} {mark}{extra}")
    lines.append(f"  {'Z':32s} {'yes' if results['Z'] else 'no'}")
    lines.append(f"  {'nonnegative':32s} {'yes' if results['nonnegative'] else 'no'}")
    for key, r in orders.items():
        lines.append(f"  {('exact order ' + key):32s} {r.describe()}")
    lines.append(
        f"  {'negative entries (min row/col)':32s} {profile.min_row}/{profile.min_column}"
    )

    report = _report_envelope(argv, _digest(format_matrix(a)), results, started)
    _emit(report, args.json, "\n".join(lines))
    return 0


_AUDIT_NEEDS_VARIANT = {"thm3.4", "prop4.10", "n=k+1", "sym-copositive"}


def _cmd_audit(args: argparse.Namespace, argv: Sequence[str]) -> int:
    started = time.monotonic()
    a = load_matrix(args.matrix)
    variant = Variant.E if args.variant == "e" else Variant.E0
    b: Optional[RatMatrix] = None
    try:
        if args.theorem == "thm3.4":
            report = verify.audit_thm_3x3_structure(a, variant)
        elif args.theorem == "thm3.5":
            report = verify.audit_thm_3x3_inverse(a)
        elif args.theorem == "prop4.10":
            report = verify.audit_prop_4_10(a, variant)
        elif args.theorem == "thm4.11":
            report = verify.audit_thm_4_11(a)
        elif args.theorem == "invariance":
            report = verify.audit_invariance(a, args.seed if args.seed is not None else 0)
        elif args.theorem == "n=k+1":
            report = verify.audit_n_eq_k_plus_1(a, variant)
        elif args.theorem == "sym-copositive":
            report = verify.audit_symmetric_copositive_equiv(a, variant)
        else:  # nonclosure
            if not args.matrix_b:
                raise CliError("audit nonclosure needs --matrix-b with the second matrix")
            b = load_matrix(args.matrix_b)
            report = verify.audit_nonclosure(a, b)
    except (cls.WrongOrderError, verify.NotSymmetricError, ValueError) as exc:
        raise CliError(f"audit {args.theorem}: {exc}") from exc

    lines = [f"audit {args.theorem} on {args.matrix}"]
    lines.append(f"  hypotheses met: {'yes' if report.hypotheses_met else 'no'} ({report.hypotheses_note})")
    for c in report.conclusions:
        lines.append(f"  [{'pass' if c.passed else 'FAIL'}] {c.name}: {c.evidence}")
    if not report.conclusions and not report.hypotheses_met:
        lines.append("  conclusions skipped")
    if report.counterexample is not None:
        lines.append("  counterexample matrix:")
        lines.append("    " + "\n    ".join(str(report.counterexample).splitlines()))

    digests = [format_matrix(a)] + ([format_matrix(b)] if b is not None else [])
    report_json = _report_envelope(argv, _digest(*digests), _audit_json(report), started)
    _emit(report_json, args.json, "\n".join(lines))
    return 0 if report.ok else 1


_TEMPLATES = {
    "pattern": explore.template_exact_order_pattern,
    "z": lambda n, variant: explore.template_z(n),
    "free": lambda n, variant: explore.template_free(n),
    "diag-free": lambda n, variant: explore.template_diag_nonneg_off_free(n),
    "nonneg": lambda n, variant: explore.template_nonneg(n),
}

_DEFAULT_TEMPLATE = {
    "exact-order": "pattern",
    "conjecture1": "z",
    "conjecture2": "diag-free",
    "neg-entries": "pattern",
}


_CONJECTURE_DEFAULTS = {
    # calibrated bounds: conjecture targets want diagonals that dominate the
    # off-diagonal magnitudes, and the free template leans negative
    "conjecture1": {"num_bound": 4, "den_bound": 2, "diag_bound": 8, "weights": (4, 1, 4)},
    "conjecture2": {"num_bound": 4, "den_bound": 2, "diag_bound": 8, "weights": (12, 1, 2)},
}


def _cmd_explore(args: argparse.Namespace, argv: Sequence[str]) -> int:
    started = time.monotonic()
    variant = Variant.E if args.variant == "e" else Variant.E0
    template_name = args.template or _DEFAULT_TEMPLATE[args.target]
    template = _TEMPLATES[template_name](args.n, variant)
    defaults = _CONJECTURE_DEFAULTS.get(args.target, {})
    num_bound = args.num_bound if args.num_bound is not None else defaults.get("num_bound", 5)
    den_bound = args.den_bound if args.den_bound is not None else defaults.get("den_bound", 3)
    diag_bound = args.diag_bound if args.diag_bound is not None else defaults.get("diag_bound")
    config = explore.GeneratorConfig(
        order=args.n,
        template=template,
        numerator_bound=num_bound,
        denominator_bound=den_bound,
        seed=args.seed,
        max_attempts=args.attempts,
        free_weights=defaults.get("weights", (4, 1, 4)),
        diagonal_numerator_bound=diag_bound,
    )
    if args.target == "exact-order":
        if args.k is None:
            raise CliError("explore exact-order needs --k")
        report = explore.search_exact_order(args.n, args.k, variant, config, target_hits=args.hits)
    elif args.target == "conjecture1":
        report = explore.search_conjecture_1(config, target_hits=args.hits)
    elif args.target == "conjecture2":
        report = explore.search_conjecture_2(config, target_hits=args.hits)
    else:  # neg-entries
        if args.k is None:
            raise CliError("explore neg-entries needs --k")
        report = explore.search_negative_entries_question(
            config, args.k, variant, target_hits=args.hits
        )

    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        for i, hit in enumerate(report.hits, start=1):
            (out / f"hit_{i:04d}.txt").write_text(format_matrix(hit))
        for i, ce in enumerate(report.counterexamples, start=1):
            (out / f"counterexample_{i:04d}.txt").write_text(format_matrix(ce.matrix))
        (out / "report.json").write_text(
            json.dumps(_search_json(report), indent=2, sort_keys=True) + "\n"
        )

    lines = [
        f"explore {args.target} (seed {args.seed}, template {template_name})",
        f"  attempts: {report.attempts}",
        f"  hits: {report.hit_count}",
        f"  counterexamples: {len(report.counterexamples)}",
    ]
    for note in report.notes:
        lines.append(f"  note: {note}")
    for ce in report.counterexamples:
        lines.append(f"  COUNTEREXAMPLE: {ce.failed} ({ce.evidence})")

    config_text = json.dumps(
        {
            "order": args.n,
            "template": template_name,
            "seed": args.seed,
            "attempts": args.attempts,
            "num_bound": num_bound,
            "den_bound": den_bound,
            "diag_bound": diag_bound,
        },
        sort_keys=True,
    )
    report_json = _report_envelope(argv, _digest(config_text), _search_json(report), started)
    _emit(report_json, args.json, "\n".join(lines))
    return 1 if report.counterexamples else 0


def _cmd_lcp(args: argparse.Namespace, argv: Sequence[str]) -> int:
    started = time.monotonic()
    q = load_vector(args.q)
    a = load_matrix(args.matrix)
    try:
        inst = lcp.LcpInstance(q, a)
    except ValueError as exc:
        raise CliError(str(exc)) from exc
    feas = lcp.lcp_feasible(inst)
    enum = lcp.lcp_solve_enum(inst)
    verified = all(sol.satisfies(inst) for sol in enum.solutions)

    results = {
        "feasible": feas.feasible,
        "feasible_witness": None if feas.certificate is None else _vec_json(feas.certificate),
        "solutions": [
            {
                "z": _vec_json(sol.z),
                "w": _vec_json(sol.w),
                "support": list(sol.support.members),
            }
            for sol in enum.solutions
        ],
        "singular_supports_skipped": [list(s.members) for s in enum.singular_supports],
        "substitution_verified": verified,
    }
    lines = [f"LCP(q, A) with q from {args.q}, A from {args.matrix}"]
    lines.append(f"  feasible: {'yes' if feas.feasible else 'no'}")
    if feas.certificate is not None:
        lines.append(f"  feasibility witness z = ({', '.join(_vec_json(feas.certificate))})")
    lines.append(f"  enumeration solutions: {len(enum.solutions)}")
    for sol in enum.solutions:
        lines.append(
            f"    support {sol.support}: z = ({', '.join(_vec_json(sol.z))}), "
            f"w = ({', '.join(_vec_json(sol.w))})"
        )
    if enum.singular_supports:
        lines.append(
            "  singular supports skipped: "
            + ", ".join(str(s) for s in enum.singular_supports)
        )
    lines.append(f"  substitution check: {'all solutions verified' if verified else 'FAILED'}")

    violation = False
    if args.q0_trials:
        q0 = lcp.q0_falsify(a, args.q0_trials, args.seed if args.seed is not None else 0)
        results["q0"] = {
            "trials": q0.trials,
            "feasible": q0.feasible_count,
            "solved": q0.solved_count,
            "violations": [_vec_json(v) for v in q0.violations],
            "note": q0.note,
        }
        lines.append(
            f"  q0 sampling: {q0.feasible_count} feasible of {q0.trials} trials, "
            f"{q0.solved_count} solved, {len(q0.violations)} violations"
        )
        lines.append(f"  note: {q0.note}")
        violation = q0.violated

    report = _report_envelope(
        argv, _digest(format_vector(q), format_matrix(a)), results, started
    )
    _emit(report, args.json, "\n".join(lines))
    if not verified:
        return 1
    return 1 if violation else 0


# ---------------------------------------------------------------------------
# argument parsing


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="semimono",
        description="Exact-arithmetic classification, audits, and conjecture search "
        "for semimonotone matrix classes of exact order k.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_classify = sub.add_parser("classify", help="classify a matrix into every supported class")
    p_classify.add_argument("matrix", help="matrix file (n, then n rows of rationals)")
    p_classify.add_argument("--json", action="store_true", help="emit the JSON report")

    p_audit = sub.add_parser("audit", help="run one theorem audit against a matrix")
    p_audit.add_argument("matrix")
    p_audit.add_argument("--theorem", required=True, choices=list(verify.AUDIT_IDS))
    p_audit.add_argument("--matrix-b", help="second matrix (nonclosure audit)")
    p_audit.add_argument("--variant", choices=["e0", "e"], default="e0")
    p_audit.add_argument("--seed", type=int, default=None, help="seed (invariance audit)")
    p_audit.add_argument("--json", action="store_true")

    p_explore = sub.add_parser("explore", help="seeded randomized search")
    p_explore.add_argument(
        "--target",
        required=True,
        choices=["exact-order", "conjecture1", "conjecture2", "neg-entries"],
    )
    p_explore.add_argument("--n", type=int, required=True, help="matrix order")
    p_explore.add_argument("--k", type=int, default=None, help="exact order target")
    p_explore.add_argument("--seed", type=int, required=True, help="generator seed (mandatory)")
    p_explore.add_argument("--attempts", type=int, default=10_000)
    p_explore.add_argument("--hits", type=int, default=None, help="stop after this many hits")
    p_explore.add_argument("--variant", choices=["e0", "e"], default="e0")
    p_explore.add_argument("--template", choices=list(_TEMPLATES), default=None)
    p_explore.add_argument("--num-bound", type=int, default=None)
    p_explore.add_argument("--den-bound", type=int, default=None)
    p_explore.add_argument("--diag-bound", type=int, default=None,
                           help="separate numerator bound for diagonal entries")
    p_explore.add_argument("--out", help="directory for hit/counterexample matrix files")
    p_explore.add_argument("--json", action="store_true")

    p_lcp = sub.add_parser("lcp", help="solve LCP(q, A) by support enumeration")
    p_lcp.add_argument("q", help="vector file")
    p_lcp.add_argument("matrix", help="matrix file")
    p_lcp.add_argument("--q0-trials", type=int, default=0, help="also run q0 sampling")
    p_lcp.add_argument("--seed", type=int, default=None, help="seed for q0 sampling")
    p_lcp.add_argument("--json", action="store_true")

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "classify":
            return _cmd_classify(args, argv)
        if args.command == "audit":
            return _cmd_audit(args, argv)
        if args.command == "explore":
            return _cmd_explore(args, argv)
        return _cmd_lcp(args, argv)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

"""Command-line entry point.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 open case.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import suites
from .bounds import code_bound
from .lp import lp_bound
from .schemes import PolarKind, SchemeSpec, eig_table, scheme_size
from .steiner import DualCertificate, LiteratureRef, Outcome, RatioCertificate, full_verdict

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_OPEN = 0, 1, 2, 3

FAMILY_NAMES = {
    "2A-odd": PolarKind.HERMITIAN_ODD,
    "hermitian-odd": PolarKind.HERMITIAN_ODD,
    "2A-even": PolarKind.HERMITIAN_EVEN,
    "hermitian-even": PolarKind.HERMITIAN_EVEN,
    "C": PolarKind.SYMPLECTIC,
    "symplectic": PolarKind.SYMPLECTIC,
    "D": PolarKind.HYPERBOLIC,
    "hyperbolic": PolarKind.HYPERBOLIC,
    "B": PolarKind.PARABOLIC,
    "parabolic": PolarKind.PARABOLIC,
    "2D": PolarKind.ELLIPTIC,
    "elliptic": PolarKind.ELLIPTIC,
    "half-D": PolarKind.HALF_HYPERBOLIC,
    "fused-BC": PolarKind.FUSED_BC,
}


class UsageError(ValueError):
    pass


def rational(x):
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def encode(obj):
    """Rationals become "num/den" strings, never floats."""
    if isinstance(obj, Fraction):
        return rational(obj)
    if isinstance(obj, dict):
        return {k: encode(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [encode(v) for v in obj]
    return obj


def make_spec(args) -> SchemeSpec:
    kind = FAMILY_NAMES.get(args.space)
    if kind is None:
        raise UsageError(f"unknown family {args.space!r}; valid names: {', '.join(FAMILY_NAMES)}")
    try:
        return SchemeSpec(kind, args.n, args.q)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def emit(data: dict, fmt: str, out) -> None:
    data = encode(data)
    if fmt == "json":
        json.dump(data, out, indent=2)
        out.write("\n")
        return
    for key, value in data.items():
        if isinstance(value, list) and value and isinstance(value[0], list):
            out.write(f"{key}:\n")
            for row in value:
                out.write("  " + "  ".join(f"{c:>8}" for c in row) + "\n")
        elif isinstance(value, list):
            out.write(f"{key}: " + " ".join(str(v) for v in value) + "\n")
        else:
            out.write(f"{key}: {value}\n")


def cmd_params(args, out):
    spec = make_spec(args)
    table = eig_table(spec)
    emit(
        {
            "family": spec.kind.value,
            "label": spec.label(),
            "n": spec.n,
            "q": spec.q,
            "x_size": scheme_size(spec),
            "e": spec.e if spec.kind.is_base else None,
            "p": Fraction(spec.p),
            "valencies": list(table.v),
            "multiplicities": list(table.mu),
        },
        args.format,
        out,
    )
    return EXIT_OK


def cmd_eigenvalues(args, out):
    spec = make_spec(args)
    ordering = None if args.ordering == "standard" else args.ordering
    try:
        table = eig_table(spec, ordering)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    emit(
        {
            "label": spec.label(),
            "ordering": table.ordering,
            "valencies": list(table.v),
            "multiplicities": list(table.mu),
            "P": [list(r) for r in table.P],
            "Q": [list(r) for r in table.Q],
        },
        args.format,
        out,
    )
    return EXIT_OK


def _need(args, name):
    if getattr(args, name) is None:
        raise UsageError(f"--{name} is required")
    return getattr(args, name)


def cmd_bound(args, out):
    spec = make_spec(args)
    d = _need(args, "d")
    try:
        res = code_bound(spec, d)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    emit({"label": spec.label(), "d": d, "value": res.value, "floor": res.floor, "formula": res.formula_used.value}, args.format, out)
    return EXIT_OK


def cmd_lp(args, out):
    spec = make_spec(args)
    d = _need(args, "d")
    try:
        res = lp_bound(spec, d)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    emit(
        {
            "label": spec.label(),
            "d": d,
            "status": res.status,
            "optimum": res.optimum,
            "inner_distribution": list(res.primal),
            "dual_multipliers": list(res.dual),
            "certificate_ok": res.certificate_ok,
        },
        args.format,
        out,
    )
    return EXIT_OK if res.certificate_ok else EXIT_FAIL


def cmd_steiner(args, out):
    spec = make_spec(args)
    t = _need(args, "t")
    try:
        verdict = full_verdict(spec, t)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    data = {
        "label": spec.label(),
        "t": t,
        "outcome": verdict.outcome.value,
        "case": verdict.case.value if verdict.case else None,
    }
    cert = verdict.certificate
    if isinstance(cert, RatioCertificate):
        data.update(B=cert.B, S=cert.S, R=cert.R)
    elif isinstance(cert, DualCertificate):
        data.update(k=cert.k, dual_entry=cert.value, normalized=cert.normalized)
    elif isinstance(cert, LiteratureRef):
        data.update(reference=cert.fact)
    elif cert is not None:
        data.update(construction=cert.description)
    if verdict.notes:
        data["notes"] = list(verdict.notes)
    emit(data, args.format, out)
    return EXIT_OPEN if verdict.outcome is Outcome.OPEN else EXIT_OK


def cmd_verify(args, out):
    names = list(suites.SUITES) if args.suite == "all" else [args.suite]
    results = {}
    for name in names:
        if name == "oracle":
            failures = suites.oracle_suite(max_size=args.max_size, seed=args.seed)
        else:
            failures = suites.SUITES[name]()
        results[name] = {"passed": not failures, "failures": failures[:20]}
    emit(results if args.format == "json" else {k: "pass" if v["passed"] else f"FAIL {v['failures']}" for k, v in results.items()}, args.format, out)
    return EXIT_OK if all(r["passed"] for r in results.values()) else EXIT_FAIL


def cmd_enumerate(args, out):
    from . import oracle

    spec = make_spec(args)
    if not spec.kind.is_base:
        raise UsageError("enumeration needs one of the six classical families")
    try:
        inst = oracle.enumerate(spec, cap=args.max_size, cache_dir=args.cache_dir)
    except oracle.TooLarge as exc:
        raise UsageError(str(exc)) from exc
    if args.export:
        oracle.save(inst, args.export)
    failures = suites.instance_failures(inst, eig_table(spec))
    emit(
        {
            "label": spec.label(),
            "generators": inst.size,
            "points": len(inst.points),
            "isotropic_space_counts": inst.space_counts,
            "generators_per_hyperplane": sorted(inst.cover_counts),
            "matches_closed_forms": not failures,
        },
        args.format,
        out,
    )
    return EXIT_OK if not failures else EXIT_FAIL


def cmd_rankmap(args, out):
    from .oracle.rankmap import rank_map_check

    try:
        rep = rank_map_check(args.kind, args.n, args.q, trials=args.trials, seed=args.seed)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    emit(
        {"kind": rep.kind, "n": rep.n, "q": rep.q, "matrices": rep.matrices, "pairs": rep.pairs, "exhaustive": rep.exhaustive, "ok": rep.ok},
        args.format,
        out,
    )
    return EXIT_OK if rep.ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="polarsteiner", description="Exact computations in polar-space association schemes.")
    sub = parser.add_subparsers(dest="command", required=True)

    def scheme_args(p, *extra):
        p.add_argument("--space", required=True, help="family: " + ", ".join(FAMILY_NAMES))
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--q", type=int, required=True)
        for name in extra:
            p.add_argument(f"--{name}", type=int)
        p.add_argument("--format", choices=("json", "table"), default="json")

    scheme_args(sub.add_parser("params", help="|X|, valencies and multiplicities"))
    p = sub.add_parser("eigenvalues", help="P and Q tables")
    scheme_args(p)
    p.add_argument("--ordering", choices=("standard", "hermitian-alternate", "half-D"), default="standard")
    scheme_args(sub.add_parser("bound", help="closed-form d-code bound"), "d")
    scheme_args(sub.add_parser("lp", help="Delsarte LP bound"), "d")
    scheme_args(sub.add_parser("steiner", help="existence verdict for t-Steiner systems"), "t")

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", choices=tuple(suites.SUITES) + ("all",), default="all")
    p.add_argument("--max-size", type=int, default=500)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=("json", "table"), default="json")

    p = sub.add_parser("enumerate", help="enumerate generators by brute force")
    scheme_args(p)
    p.add_argument("--max-size", type=int, default=20000)
    p.add_argument("--cache-dir")
    p.add_argument("--export", help="write generators in the text format")

    p = sub.add_parser("rankmap", help="check the matrix-to-generator map")
    p.add_argument("--kind", choices=("Hermitian", "Symmetric", "Alternating"), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--trials", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=("json", "table"), default="json")
    return parser


COMMANDS = {
    "params": cmd_params,
    "eigenvalues": cmd_eigenvalues,
    "bound": cmd_bound,
    "lp": cmd_lp,
    "steiner": cmd_steiner,
    "verify": cmd_verify,
    "enumerate": cmd_enumerate,
    "rankmap": cmd_rankmap,
}


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return COMMANDS[args.command](args, out)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

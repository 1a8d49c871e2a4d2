"""Command-line interface: torsion, classify, sweep, verify-identities.

Exit status is 0 on success, 1 for bad input or unmet preconditions, and 2
when two independent computations disagree.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Dict, List, Optional, Sequence, Tuple

from .alex import alexander_Wbar, duality_exponents, duality_check, epsilon_of_g, g_poly, torres_check
from .laurent import MultiLaurent, monomial_equivalent
from .lens import (
    Lens,
    NotLens,
    classify_generalized,
    classify_theorem,
    lens_equivalent,
    obstruct,
)
from .rolfsen import constructive_lens
from .sweep import (
    CSV_COLUMNS,
    SCHEMA_VERSION,
    SweepConfig,
    csv_row,
    load_config,
    run_sweep,
    spec_to_dict,
    verdict_to_dict,
)
from .torsion import Side, mirror_normalize, torsion_closed_form, torsion_pipeline

EXIT_OK, EXIT_INPUT, EXIT_DISAGREE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad flags; 2 is reserved for disagreements here
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def parse_slope(text: str) -> Tuple[int, int]:
    num, sep, den = text.strip().partition("/")
    try:
        p, q = int(num), int(den) if sep else 1
    except ValueError:
        raise UsageError(f"bad slope {text!r}; expected p/q or p") from None
    if q == 0:
        raise UsageError(f"slope {text!r} has zero denominator")
    if q < 0:
        p, q = -p, -q
    return p, q


def parse_surgery(text: str) -> Tuple[int, int, int, int]:
    parts = text.split(",")
    if len(parts) != 2:
        raise UsageError(f"bad surgery {text!r}; expected p1/q1,p2/q2")
    (p1, q1), (p2, q2) = (parse_slope(x) for x in parts)
    return p1, q1, p2, q2


def _emit(payload: Dict, as_json: bool, lines: List[str], out) -> None:
    if as_json:
        out.write(json.dumps(payload, indent=2) + "\n")
    else:
        out.write("\n".join(lines) + "\n")


def _spec_from_args(args):
    p1, q1, p2, q2 = parse_surgery(args.surgery)
    s = mirror_normalize(args.n, p1, q1, p2, q2)
    return s.validate()


def cmd_torsion(args, out) -> int:
    s = _spec_from_args(args)
    side = Side(args.side)
    closed = torsion_closed_form(s, args.d, side, args.epsilon)
    piped = torsion_pipeline(s, args.d, side, args.epsilon)
    w = closed.equivalent(piped)
    payload = {
        "schema_version": SCHEMA_VERSION,
        "command": "torsion",
        "spec": spec_to_dict(s),
        "d": args.d,
        "side": int(side),
        "epsilon": args.epsilon,
        "variable": "z",
        "closed_form": str(closed.value),
        "pipeline": str(piped.value),
        "equivalent": w is not None,
        "witness": None if w is None else {"sign": w.sign, "m": w.m},
    }
    lines = [
        f"spec: {s}",
        f"d = {args.d}, side = {int(side)}, epsilon = {args.epsilon}, z = exp(2 pi i / {args.d})",
        f"closed form: {payload['closed_form']}",
        f"pipeline:    {payload['pipeline']}",
        f"equivalent: {str(w is not None).lower()}"
        + ("" if w is None else f" (closed = {w.sign:+d} * z^{w.m} * pipeline)"),
    ]
    _emit(payload, args.json, lines, out)
    return EXIT_OK if w is not None else EXIT_DISAGREE


def _verdict_line(v) -> str:
    if isinstance(v, Lens):
        extra = f", cases [{','.join(v.cases)}]" if v.cases else ""
        return f"Lens {v.space}{extra}"
    if isinstance(v, NotLens):
        return "NotLens, witness " + "; ".join(f"d={d}: {why}" for d, why in v.obstruction)
    return f"Indeterminate ({v.note})"


def cmd_classify(args, out) -> int:
    s = _spec_from_args(args)
    if args.generalized:
        verdict = classify_generalized(s, args.epsilon)
        payload = {"schema_version": SCHEMA_VERSION, "command": "classify", "mode": "generalized",
                   "spec": spec_to_dict(s), "epsilon": args.epsilon, "verdict": verdict_to_dict(verdict)}
        _emit(payload, args.json, [f"spec: {s}", f"generalized (epsilon = {args.epsilon}): {_verdict_line(verdict)}"], out)
        return EXIT_OK

    theorem = classify_theorem(s)
    obstruction = obstruct(s, 1)
    construction = constructive_lens(s)
    built = construction.space if construction else None
    problems = []
    if isinstance(theorem, Lens):
        if isinstance(obstruction, NotLens):
            problems.append("torsion obstructs a lens space the theorem produces")
        if built is None or not lens_equivalent(built, theorem.space):
            problems.append("constructive route does not reproduce the lens space")
    elif built is not None:
        problems.append("constructive route yields a lens space the theorem rejects")

    payload = {
        "schema_version": SCHEMA_VERSION,
        "command": "classify",
        "mode": "theorem",
        "spec": spec_to_dict(s),
        "verdict": verdict_to_dict(theorem),
        "obstruction": verdict_to_dict(obstruction),
        "constructive": None if construction is None else {
            "route": construction.route,
            "steps": list(construction.steps),
            "lens": None if built is None else [built.p, built.q],
        },
        "consistent": not problems,
        "problems": problems,
    }
    lines = [f"spec: {s}", f"verdict: {_verdict_line(theorem)}",
             f"torsion obstruction: {_verdict_line(obstruction)}"]
    if construction is not None:
        lines.append(f"construction ({construction.route}): {built if built else 'no lens space'}")
        lines.extend(f"  {step}" for step in construction.steps)
    lines.extend(f"DISAGREEMENT: {p}" for p in problems)
    _emit(payload, args.json, lines, out)
    return EXIT_DISAGREE if problems else EXIT_OK


def _parse_n_range(text: str) -> Tuple[int, int]:
    lo, sep, hi = text.partition(":")
    try:
        return (int(lo), int(hi)) if sep else (int(lo), int(lo))
    except ValueError:
        raise UsageError(f"bad --n-range {text!r}; expected MIN:MAX") from None


def sweep_config_from_args(args) -> SweepConfig:
    data = load_config(args.config) if args.config else {}
    overrides = {
        "n_range": _parse_n_range(args.n_range) if args.n_range else None,
        "p_bound": args.p_bound,
        "q_bound": args.q_bound,
        "epsilon": args.epsilon,
        "divisor_bound": args.divisor_bound,
        "output_format": args.format,
        "parallelism": args.parallelism,
    }
    data.update({k: v for k, v in overrides.items() if v is not None})
    return SweepConfig.from_mapping(data)


def render_sweep(report: Dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report, indent=1) + "\n"
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for r in report["records"]:
        w.writerow(csv_row(r))
    return buf.getvalue()


def cmd_sweep(args, out) -> int:
    config = sweep_config_from_args(args)
    report = run_sweep(config)
    text = render_sweep(report, config.output_format)
    if args.output:
        try:
            with open(args.output, "w", encoding="utf-8") as fh:
                fh.write(text)
        except OSError as exc:
            raise UsageError(f"{args.output}: cannot write report: {exc.strerror}") from None
    else:
        out.write(text)
    s = report["summary"]
    sys.stderr.write(f"records={s['records']} lens={s['lens']} obstructed={s['obstructed']} "
                     f"disagreements={s['disagreements']}\n")
    return EXIT_DISAGREE if s["disagreements"] else EXIT_OK


def identity_row(n: int) -> Dict:
    t1, t2, t3 = MultiLaurent.gens(3)
    g = g_poly(n)
    full = alexander_Wbar(n)
    return {
        "n": n,
        "epsilon": epsilon_of_g(g),
        "torres": torres_check(n),
        "duality": duality_check(n),
        "duality_exponents": list(duality_exponents(full) or []),
        "g_specializations": g.specialize({1: 1, 2: 1}) == -t1 and g.specialize({0: 1, 2: 1}) == -t2,
        "hopf_factor": monomial_equivalent(full.specialize({0: 1}), t3 - 1),
    }


def cmd_verify_identities(args, out) -> int:
    rows = [identity_row(n) for n in range(args.n_min, args.n_max + 1)]
    ok = all(r["epsilon"] == 1 and r["torres"] and r["duality"] and r["g_specializations"]
             and r["hopf_factor"] for r in rows)
    payload = {"schema_version": SCHEMA_VERSION, "command": "verify-identities", "rows": rows, "ok": ok}
    lines = [
        f"n={r['n']:>3}  epsilon={r['epsilon']:+d}  torres={r['torres']}  duality={r['duality']} "
        f"exps={tuple(r['duality_exponents'])}  g-specializations={r['g_specializations']}  "
        f"hopf-factor={r['hopf_factor']}"
        for r in rows
    ]
    lines.append("all identities hold" if ok else "IDENTITY FAILURE")
    _emit(payload, args.json, lines, out)
    return EXIT_OK if ok else EXIT_DISAGREE


def _epsilon(text: str) -> int:
    v = int(text)
    if v not in (1, -1):
        raise argparse.ArgumentTypeError("epsilon must be 1 or -1")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="lens-surgery", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def spec_flags(p):
        p.add_argument("--n", type=int, required=True, help="twist parameter (negative n is mirrored)")
        p.add_argument("--surgery", required=True, metavar="P1/Q1,P2/Q2",
                       help="surgery slopes; a missing /q means q = 1")
        p.add_argument("--json", action="store_true", help="machine-readable output")

    p = sub.add_parser("torsion", help="torsion by closed form and by surgery formula")
    spec_flags(p)
    p.add_argument("--d", type=int, required=True, help="order of the root of unity")
    p.add_argument("--side", type=int, choices=(1, 2), default=2,
                   help="component whose meridian goes to z (d must divide that p_i)")
    p.add_argument("--epsilon", type=_epsilon, default=1)
    p.set_defaults(func=cmd_torsion)

    p = sub.add_parser("classify", help="lens-space verdict with obstruction and construction")
    spec_flags(p)
    p.add_argument("--generalized", action="store_true",
                   help="use the necessary conditions for links sharing W_n's Alexander polynomials")
    p.add_argument("--epsilon", type=_epsilon, default=1, help="sign for --generalized")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("sweep", help="compare all deciders over a grid of specs")
    p.add_argument("--config", help="JSON file with SweepConfig fields; flags override it")
    p.add_argument("--n-range", metavar="MIN:MAX")
    p.add_argument("--p-bound", type=int)
    p.add_argument("--q-bound", type=int)
    p.add_argument("--epsilon", type=_epsilon)
    p.add_argument("--divisor-bound", type=int)
    p.add_argument("--format", choices=("json", "csv"))
    p.add_argument("--parallelism", type=int)
    p.add_argument("--output", "-o", help="report path (default: stdout)")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("verify-identities", help="Alexander-polynomial identities for n in a range")
    p.add_argument("--n-min", type=int, default=0)
    p.add_argument("--n-max", type=int, default=20)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify_identities)
    return parser


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except (UsageError, ValueError, ArithmeticError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())

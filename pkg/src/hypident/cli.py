"""Command-line front end: verify, spectrum, terms, sweep, selftest.

All output is machine-readable: JSON by default, CSV with --format csv.
CSV uses LF line endings and prints floats with 17 significant digits;
JSON uses the shortest round-trip representation.  Exit codes: 0 success
(for verify: |defect| <= --tol), 1 verification or selftest failure, 2
usage or domain errors with a one-line diagnostic on stderr.
"""

import argparse
import json
import math
import random
import sys

from .curves import brute_force_trace, enumerate_geodesics
from .dilog import PI2_6, rogers
from .errors import DomainError, ResourceLimitError
from .identities import (
    IdentityKind,
    RunningSum,
    check_point_kind,
    evaluate,
    identity_term,
    term_foursphere_ortho,
    term_foursphere_simple,
)
from .pants import foursphere_ortho, torus_ortho
from .torus import FenchelNielsen, from_fenchel_nielsen, trace_triple

__all__ = ["run", "main"]


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # one-line diagnostic on stderr, exit code 2 (via _UsageError)
    def error(self, message):
        raise _UsageError(message)


def _fmt17(value: float) -> str:
    return format(value, ".17g")


def _csv_line(fields) -> str:
    return ",".join(fields) + "\n"


def _emit_csv(out, header, rows):
    out.write(_csv_line(header))
    for row in rows:
        out.write(_csv_line([f if isinstance(f, str) else _fmt17(f) for f in row]))


def _parse_floats(text, count, option):
    parts = text.split(",")
    if len(parts) != count:
        raise _UsageError(f"{option} expects {count} comma-separated numbers, got {text!r}")
    try:
        return [float(p) for p in parts]
    except ValueError:
        raise _UsageError(f"malformed number in {option}={text!r}") from None


def _point_from_args(args):
    traces = getattr(args, "traces", None)
    fn = getattr(args, "fn", None)
    if (traces is None) == (fn is None):
        raise _UsageError("exactly one of --traces x,y,z or --fn b,t,k is required")
    if traces is not None:
        x, y, z = _parse_floats(traces, 3, "--traces")
        return trace_triple(x, y, z)
    b, t, k = _parse_floats(fn, 3, "--fn")
    return from_fenchel_nielsen(FenchelNielsen(b, t, k))


def _add_point_options(parser):
    parser.add_argument("--traces", help="trace triple x,y,z")
    parser.add_argument("--fn", help="Fenchel-Nielsen data b,t,k")


def _add_common(parser, with_identity):
    if with_identity:
        parser.add_argument(
            "--identity",
            required=True,
            choices=[kind.value for kind in IdentityKind],
        )
    _add_point_options(parser)
    parser.add_argument("--cutoff", type=float, required=True, help="length cutoff")
    parser.add_argument("--format", choices=["json", "csv"], default="json")


def _build_parser():
    parser = _Parser(prog="hypident", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="evaluate an identity and check its defect")
    _add_common(p, with_identity=True)
    p.add_argument("--tol", type=float, default=1e-4)

    p = sub.add_parser("spectrum", help="dump the enumerated simple length spectrum")
    _add_common(p, with_identity=False)

    p = sub.add_parser("terms", help="dump per-geodesic terms and partial sums")
    _add_common(p, with_identity=True)

    p = sub.add_parser("sweep", help="evaluate an identity over a parameter grid")
    p.add_argument("--identity", required=True, choices=[k.value for k in IdentityKind])
    p.add_argument("--vary", required=True, help="name=start:stop:step (inclusive of start)")
    p.add_argument("--fn", required=True, help="b,t,k with _ in the varied slot")
    p.add_argument("--cutoff", type=float, required=True)
    p.add_argument("--out", help="write CSV here instead of stdout")

    p = sub.add_parser("selftest", help="run the built-in verification battery")
    p.add_argument("--seed", type=int, default=0)
    return parser


def _report_json(report):
    return json.dumps(report.to_dict()) + "\n"


def _report_csv(report):
    param_names = sorted(report.parameters)
    header = (
        ["kind"]
        + [f"param_{name}" for name in param_names]
        + ["cutoff", "term_count", "partial_sum", "target", "defect", "tail_estimate"]
    )
    row = (
        [report.kind.value]
        + [_fmt17(report.parameters[name]) for name in param_names]
        + [
            _fmt17(report.cutoff),
            str(report.term_count),
            _fmt17(report.partial_sum),
            _fmt17(report.target),
            _fmt17(report.defect),
            _fmt17(report.tail_estimate),
        ]
    )
    return _csv_line(header) + _csv_line(row)


def _cmd_verify(args, out):
    kind = IdentityKind(args.identity)
    triple = _point_from_args(args)
    report = evaluate(kind, triple, args.cutoff)
    out.write(_report_json(report) if args.format == "json" else _report_csv(report))
    return 0 if abs(report.defect) <= args.tol else 1


def _cmd_spectrum(args, out):
    triple = _point_from_args(args)
    records = enumerate_geodesics(triple, args.cutoff)
    if args.format == "csv":
        rows = [(str(r.slope.p), str(r.slope.q), r.trace, r.length) for r in records]
        _emit_csv(out, ["p", "q", "trace", "length"], rows)
    else:
        payload = [
            {"p": r.slope.p, "q": r.slope.q, "trace": r.trace, "length": r.length}
            for r in records
        ]
        out.write(json.dumps(payload) + "\n")
    return 0


def _cmd_terms(args, out):
    kind = IdentityKind(args.identity)
    triple = _point_from_args(args)
    check_point_kind(kind, triple.k)
    records = enumerate_geodesics(triple, args.cutoff)
    acc = RunningSum()
    rows = []
    for record in records:
        term = identity_term(kind, triple.k, record)
        acc.add(term)
        rows.append((record, term, acc.value))
    if args.format == "csv":
        _emit_csv(
            out,
            ["p", "q", "length", "term", "partial_sum"],
            [
                (str(r.slope.p), str(r.slope.q), r.length, term, partial)
                for r, term, partial in rows
            ],
        )
    else:
        payload = [
            {
                "p": r.slope.p,
                "q": r.slope.q,
                "length": r.length,
                "term": term,
                "partial_sum": partial,
            }
            for r, term, partial in rows
        ]
        out.write(json.dumps(payload) + "\n")
    return 0


def _parse_sweep_range(text):
    if "=" not in text:
        raise _UsageError(f"--vary expects name=start:stop:step, got {text!r}")
    name, _, range_text = text.partition("=")
    if name not in ("b", "t", "k"):
        raise _UsageError(f"--vary parameter must be b, t or k, got {name!r}")
    parts = range_text.split(":")
    if len(parts) != 3:
        raise _UsageError(f"--vary expects name=start:stop:step, got {text!r}")
    try:
        start, stop, step = (float(p) for p in parts)
    except ValueError:
        raise _UsageError(f"malformed number in --vary={text!r}") from None
    if step <= 0.0 or stop < start:
        raise _UsageError(f"--vary range must have step > 0 and stop >= start, got {text!r}")
    # nudge against float rounding so nominal endpoints stay included
    count = math.floor((stop - start) / step + 1e-9) + 1
    return name, [start + i * step for i in range(count)]


def _cmd_sweep(args, out):
    kind = IdentityKind(args.identity)
    name, values = _parse_sweep_range(args.vary)
    slots = args.fn.split(",")
    if len(slots) != 3:
        raise _UsageError(f"--fn expects b,t,k with one _ slot, got {args.fn!r}")
    slot_names = ("b", "t", "k")
    if slots.count("_") != 1 or slot_names[slots.index("_")] != name:
        raise _UsageError(f"--fn must hold _ exactly in the {name!r} slot, got {args.fn!r}")
    fixed = {}
    for slot, text in zip(slot_names, slots):
        if text != "_":
            try:
                fixed[slot] = float(text)
            except ValueError:
                raise _UsageError(f"malformed number in --fn={args.fn!r}") from None

    rows = []
    for value in values:
        params = dict(fixed)
        params[name] = value
        triple = from_fenchel_nielsen(FenchelNielsen(params["b"], params["t"], params["k"]))
        report = evaluate(kind, triple, args.cutoff)
        rows.append(
            (
                name,
                value,
                report.cutoff,
                str(report.term_count),
                report.partial_sum,
                report.defect,
                report.tail_estimate,
            )
        )
    header = [
        "param_name",
        "param_value",
        "cutoff",
        "term_count",
        "partial_sum",
        "defect",
        "tail_estimate",
    ]
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as handle:
            _emit_csv(handle, header, rows)
    else:
        _emit_csv(out, header, rows)
    return 0


def _selftest_checks(seed):
    rng = random.Random(seed)

    def dilog_values():
        worst = max(
            abs(rogers(0.0)),
            abs(rogers(0.5) - PI2_6 / 2.0),
            abs(rogers(1.0) - PI2_6),
            abs(rogers(-1.0) + PI2_6 / 2.0),
        )
        return worst, 1e-13

    def dilog_equations():
        worst = 0.0
        for _ in range(1000):
            x = rng.uniform(1e-9, 1.0)
            y = rng.uniform(1e-9, 1.0 - 1e-9)
            worst = max(
                worst,
                abs(rogers(x) + rogers(1.0 - x) - PI2_6),
                abs(rogers(-x) + rogers(-1.0 / x) + PI2_6),
                abs(rogers(-y / (1.0 - y)) + rogers(y)),
                abs(
                    rogers(x) + rogers(y)
                    + rogers((1.0 - x) / (1.0 - x * y))
                    + rogers((1.0 - y) / (1.0 - x * y))
                    - rogers(x * y)
                    - 2.0 * PI2_6
                ),
            )
        return worst, 1e-11

    def foursphere_forms():
        worst = 0.0
        for c in (0.1, 0.5, 1.0, 2.0, 5.0):
            for a in (0.5, 1.0, 2.0, 5.0, 10.0):
                ortho = foursphere_ortho(c, a)
                worst = max(
                    worst,
                    abs(
                        term_foursphere_ortho(c, ortho.m, ortho.p)
                        - term_foursphere_simple(c, a)
                    ),
                )
        return worst, 1e-9

    def covering_correspondence():
        worst = 0.0
        for k in (0.2, 1.0, 2.0, 4.0, 8.0):
            for b in (0.5, 1.0, 2.0, 5.0, 10.0):
                four = foursphere_ortho(0.5 * k, 2.0 * b)
                torus = torus_ortho(k, b)
                worst = max(
                    worst,
                    abs(four.m - torus.m),
                    abs(four.p - torus.q),
                    abs(four.q - torus.p),
                )
        return worst, 1e-10

    def enumeration_oracle():
        worst = 0.0
        for _ in range(3):
            fn = FenchelNielsen(rng.uniform(0.8, 2.5), 0.0, rng.uniform(0.3, 3.0))
            records = enumerate_geodesics(from_fenchel_nielsen(fn), 16.0)
            for record in records:
                if record.slope.q <= 8 and abs(record.slope.p) <= 50:
                    oracle = brute_force_trace(fn, record.slope)
                    worst = max(worst, abs(oracle - record.trace) / record.trace)
        return worst, 1e-9

    return [
        ("dilog special values", dilog_values),
        ("dilog functional equations", dilog_equations),
        ("four-holed sphere bracket forms", foursphere_forms),
        ("covering correspondence", covering_correspondence),
        ("enumeration vs word oracle", enumeration_oracle),
    ]


def _cmd_selftest(args, out):
    failures = 0
    for label, check in _selftest_checks(args.seed):
        worst, bound = check()
        ok = worst <= bound
        failures += 0 if ok else 1
        status = "PASS" if ok else "FAIL"
        out.write(f"{status} {label}: worst {worst:.3e} (bound {bound:.0e})\n")
    return 0 if failures == 0 else 1


_COMMANDS = {
    "verify": _cmd_verify,
    "spectrum": _cmd_spectrum,
    "terms": _cmd_terms,
    "sweep": _cmd_sweep,
    "selftest": _cmd_selftest,
}


def run(argv, out=None, err=None) -> int:
    """Parse argv (without program name) and execute; returns the exit code."""
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return _COMMANDS[args.command](args, out)
    except _UsageError as exc:
        err.write(f"error: {exc}\n")
        return 2
    except (DomainError, ResourceLimitError) as exc:
        err.write(f"error: {exc}\n")
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))

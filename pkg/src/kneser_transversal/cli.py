"""Command-line front end.

Exit codes: 0 success / verified, 1 checked-and-false or suite failure, 2 input error.
"""
from __future__ import annotations

import argparse
import csv
import io as _io
import json
import sys
from fractions import Fraction

from . import errors
from .cyclic import DEFAULT_ORACLE_CAP, METHODS, zeta, zeta_trivial
from .geometry import is_complete_kneser_transversal, is_general_position, moment_curve, radon_partition
from .io import config_to_json, load_points, parse_rational
from .parity import ParamTriple
from .report import TABLE_COLUMNS, bound_report, table_rows
from .verify import SUITES, run_suite


def _jsonable(obj):
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, dict):
        return {k: _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    return obj


def _emit(args, data: dict, text_lines=None):
    data = _jsonable({**data, "seed": args.seed})
    if args.format == "json":
        out = json.dumps(data, indent=1)
    elif args.format == "csv":
        buf = _io.StringIO()
        flat = {k: json.dumps(v) if isinstance(v, (list, dict)) else v for k, v in data.items()}
        w = csv.DictWriter(buf, fieldnames=list(flat))
        w.writeheader()
        w.writerow(flat)
        out = buf.getvalue().rstrip("\n")
    else:
        out = ("\n".join([*text_lines, f"seed: {args.seed}"]) if text_lines
               else "\n".join(f"{k}: {v}" for k, v in data.items()))
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(out + "\n")
    else:
        print(out)


def _index_list(s: str):
    try:
        return [int(x) for x in s.split(",") if x.strip()]
    except ValueError:
        raise errors.ParseError(f"--t expects comma-separated integers, got {s!r}") from None


def cmd_radon(args):
    cfg = load_points(args.input)
    rp = radon_partition(cfg)
    data = {"positive": list(rp.positive), "negative": list(rp.negative),
            "coefficients": {str(i): rp.coefficients[i] for i in sorted(rp.coefficients)}}
    lines = [f"A = {{{', '.join(map(str, rp.positive))}}}",
             f"B = {{{', '.join(map(str, rp.negative))}}}"]
    lines += [f"  alpha_{i} = {rp.coefficients[i]}" for i in sorted(rp.coefficients)]
    _emit(args, data, lines)
    return 0


def cmd_check(args):
    cfg = load_points(args.input)
    cert = is_complete_kneser_transversal(cfg, _index_list(args.t), args.k)
    lines = [f"verified: {cert.verified}"]
    if not cert.verified:
        lines.append(f"failing k-set: {list(cert.failing_kset)}")
    _emit(args, cert.to_json(), lines)
    return 0 if cert.verified else 1


def cmd_bounds(args):
    rep = bound_report(args.k, args.d, args.lam)
    notes = rep.pop("notes")
    lines = [f"{k}: {v}" for k, v in _jsonable(rep).items()]
    lines = [ln.replace("m_lower_for_comparison", "m lower bound (for comparison, not computed)")
             .replace("m_upper_exclusive_for_comparison", "m strict upper bound (for comparison, not computed)")
             for ln in lines]
    lines += [f"note: {n}" for n in notes]
    _emit(args, {**rep, "notes": notes}, lines)
    return 0


def cmd_zeta(args):
    p = ParamTriple(args.k, args.d, args.lam)
    if not p.nontrivial:
        value = zeta_trivial(p, verify=True)
        data = {"k": p.k, "d": p.d, "lambda": p.lam, "zeta": value, "method": "trivial-range formula",
                "witness_gaps": None}
        _emit(args, data)
        return 0
    res = zeta(p, args.method, args.oracle_cap)
    data = res.to_json()
    data["transcript_length"] = len(res.transcript)
    rep = bound_report(p.k, p.d, p.lam)
    data["notes"] = rep["notes"]
    _emit(args, data)
    return 0


def cmd_table(args):
    rows = table_rows(args.d_max, args.k_max, args.lambda_max)
    buf = _io.StringIO()
    w = csv.DictWriter(buf, fieldnames=TABLE_COLUMNS)
    w.writeheader()
    w.writerows(rows)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(buf.getvalue())
    else:
        sys.stdout.write(buf.getvalue())
    return 0


def cmd_gen_cyclic(args):
    params = ([parse_rational(x.strip()) for x in args.params.split(",")]
              if args.params else list(range(1, args.n + 1)))
    if len(params) != args.n:
        raise errors.ParseError(f"--params gives {len(params)} values, expected n = {args.n}")
    cfg = moment_curve(params, args.d)
    text = json.dumps(config_to_json(cfg), indent=1)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    if not is_general_position(cfg):  # cannot happen for distinct parameters
        print("warning: generated configuration is not in general position", file=sys.stderr)
    return 0


def cmd_verify(args):
    results = run_suite(args.suite, args.seed)
    failed = False
    for name, cex in results:
        if cex is None:
            print(f"PASS {name}")
        else:
            failed = True
            print(f"FAIL {name}: {json.dumps(_jsonable(cex))}")
    print(f"seed: {args.seed}")
    return 1 if failed else 0


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--format", choices=("json", "csv", "text"), default="text")
    common.add_argument("--out")
    common.add_argument("--oracle-cap", type=int, default=DEFAULT_ORACLE_CAP)

    ap = argparse.ArgumentParser(prog="kneser", description="Complete Kneser transversals, exactly.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("radon", parents=[common], help="Radon partition of d+2 points")
    p.add_argument("--input", required=True)
    p.set_defaults(func=cmd_radon)

    p = sub.add_parser("check", parents=[common], help="test a candidate complete transversal")
    p.add_argument("--input", required=True)
    p.add_argument("--t", required=True, help="comma-separated 1-based labels")
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_check)

    for name, func, helptext in (("bounds", cmd_bounds, "bound report for (k, d, λ)"),
                                 ("zeta", cmd_zeta, "ζ(k, d, λ) by certified search")):
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.add_argument("--k", type=int, required=True)
        p.add_argument("--d", type=int, required=True)
        p.add_argument("--lambda", dest="lam", type=int, required=True)
        if name == "zeta":
            p.add_argument("--method", choices=METHODS, default="gap-optimizer")
        p.set_defaults(func=func)

    p = sub.add_parser("table", parents=[common], help="CSV table over a (d, k, λ) grid")
    p.add_argument("--d-max", type=int, required=True)
    p.add_argument("--k-max", type=int, required=True)
    p.add_argument("--lambda-max", type=int, required=True)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("gen-cyclic", parents=[common], help="moment-curve point file")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--params", help="comma-separated increasing rationals (default 1..n)")
    p.set_defaults(func=cmd_gen_cyclic)

    p = sub.add_parser("verify", parents=[common], help="run self-check suites")
    p.add_argument("--suite", choices=SUITES + ("all",), default="all")
    p.set_defaults(func=cmd_verify)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (errors.KneserError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end.

Exit codes: 0 when everything passes, 1 on a failed check or internal
inconsistency, 2 on bad input.  Output on stdout is deterministic for fixed
arguments; wall time is printed to stderr only with ``--timing``.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import hochschild, multiseg, numtheory
from .errors import ConsistencyError, InputError
from .suites import DEFAULTS, SUITES, run_suite

# integers beyond this are written as decimal strings in JSON
JSON_SAFE_INT = 2**53


def _json_int(x: int):
    return str(x) if abs(x) > JSON_SAFE_INT else x


def _jsonify(obj):
    if isinstance(obj, bool) or obj is None:
        return obj
    if isinstance(obj, int):
        return _json_int(obj)
    if isinstance(obj, dict):
        return {k: _jsonify(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonify(v) for v in obj]
    return obj


def _dump_json(obj) -> str:
    return json.dumps(_jsonify(obj), indent=2, sort_keys=False) + "\n"


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_dims(args) -> int:
    group = args.group.upper()
    target = args.target.upper()
    if args.max_n < 1:
        raise InputError("--max-n must be >= 1")
    first = 2 if group == "SL" else 1
    rows = [(n, numtheory.skein_dim(group, target, n)) for n in range(first, args.max_n + 1)]
    if args.format == "json":
        text = _dump_json({"group": group, "target": target, "rows": [{"N": n, "dim": d} for n, d in rows]})
    else:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["N", "dim"])
        writer.writerows(rows)
        text = buf.getvalue()
    _emit(text, args.out)
    return 0


def cmd_verify(args) -> int:
    report = run_suite(args.suite, args.max_n, args.seed, args.cases)
    if args.format == "json":
        _emit(_dump_json(report.to_json(timing=args.timing)), args.out)
    else:
        lines = []
        for c in report.checks:
            if c.passed:
                lines.append(f"PASS {c.name}")
            else:
                lines.append(f"FAIL {c.name}: {c.witness}")
        npass = sum(c.passed for c in report.checks)
        lines.append(f"suite {args.suite}: {npass}/{len(report.checks)} checks passed")
        _emit("\n".join(lines) + "\n", args.out)
    if args.timing:
        print(f"wall time {report.wall_time:.3f} s", file=sys.stderr)
    return 0 if report.passed else 1


def cmd_certificate(args) -> int:
    try:
        with open(args.input, encoding="utf-8") as fh:
            obj = json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {args.input}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{args.input} is not valid JSON: {exc}") from None
    delta = multiseg.Multisegment.from_json(obj)
    cert = multiseg.certificate_e_mj(delta, args.m, args.j)
    if not multiseg.replay_certificate(cert):
        raise ConsistencyError("certificate does not replay")
    _emit(_dump_json(cert.to_json()), args.out)
    msg = f"verdict: {cert.verdict}"
    if cert.failing_fact:
        msg += f" (failed: {cert.failing_fact})"
    print(msg, file=sys.stderr if not args.out else sys.stdout)
    return 0 if cert.verdict == "valid" else 1


def cmd_cube(args) -> int:
    table = hochschild.graded_table(args.group.upper(), args.n, args.dim_k)
    if table.total != numtheory.skein_dim(table.group, f"T{args.dim_k}", args.n):
        raise ConsistencyError("graded table total differs from the dimension formula")
    _emit(_dump_json({
        "group": table.group,
        "N": table.N,
        "k": table.k,
        "values": table.values.tolist(),
        "total": table.total,
    }), args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="skeindim", description="Skein dimension formulas and their verification suites.")
    sub = p.add_subparsers(dest="command", required=True)

    d = sub.add_parser("dims", help="table of dimensions for N = 1..max-n (SL from 2)")
    d.add_argument("--group", choices=["gl", "sl", "GL", "SL"], required=True)
    d.add_argument("--target", choices=["t2", "t3", "T2", "T3"], required=True)
    d.add_argument("--max-n", type=int, required=True)
    d.add_argument("--format", choices=["csv", "json"], default="csv")
    d.add_argument("--out")
    d.set_defaults(func=cmd_dims)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("--suite", choices=sorted(SUITES), required=True)
    v.add_argument("--max-n", type=int, help="size bound; default depends on the suite: "
                   + ", ".join(f"{k}={d['max_n']}" for k, d in DEFAULTS.items()))
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--cases", type=int, help="random cases for randomized suites")
    v.add_argument("--format", choices=["text", "json"], default="text")
    v.add_argument("--out")
    v.add_argument("--timing", action="store_true", help="print wall time to stderr")
    v.set_defaults(func=cmd_verify)

    c = sub.add_parser("certificate", help="survival certificate for e-_{m^j} on a multisegment")
    c.add_argument("--input", required=True, help="multisegment JSON file")
    c.add_argument("--m", type=int, required=True)
    c.add_argument("--j", type=int, required=True)
    c.add_argument("--out")
    c.set_defaults(func=cmd_certificate)

    q = sub.add_parser("cube", help="graded dimensions over (Z/N)^k as nested JSON")
    q.add_argument("--group", choices=["gl", "sl", "GL", "SL"], required=True)
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--dim-k", type=int, choices=[2, 3], required=True)
    q.add_argument("--out")
    q.set_defaults(func=cmd_cube)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    except (ConsistencyError, AssertionError, ArithmeticError) as exc:
        print(f"consistency failure: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

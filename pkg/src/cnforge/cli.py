"""Command-line front end.

Exit codes: 0 when every check passes, 1 when a mathematical verification
fails, 2 for usage or parse errors.  Results go to stdout, diagnostics to
stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

from . import document as docs
from .arith import primality, primes_1_mod_6
from .curve import INFINITY, CurveParams, Point, add, double, neg, on_curve, scalar_mul
from .descent import rank2_certificate
from .errors import CNForgeError, NotAdmissible, NotOnCurve
from .normform import admissible_moduli, solve_m, solve_m_squared, theorem_inputs, verify_fact1_counts
from .table import PAPER_TABLE, PaperTableRow, verify_row

OK, FAILED, USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _err(msg):
    print(f"cnforge: {msg}", file=sys.stderr)


def _emit(obj):
    print(json.dumps(obj, separators=(",", ":")))


def cmd_solve(args):
    if args.m < 1:
        raise UsageError("--m must be >= 1")
    sols = solve_m_squared(args.m) if args.squared else solve_m(args.m)
    if args.format == "json":
        _emit({"m": str(args.m), "squared": args.squared, "count": len(sols),
               "solutions": [[str(n), str(l)] for n, l in sols]})
    elif args.format == "csv":
        print("n,l")
        for n, l in sols:
            print(f"{n},{l}")
    else:
        rhs = f"{args.m}^2" if args.squared else str(args.m)
        for n, l in sols:
            print(f"n={n} l={l}  ({n}^2 + {n}*{l} + {l}^2 = {rhs})")
        print(f"{len(sols)} solution(s)")
    return OK


def _write_certs(cert_docs, fmt):
    if fmt == "csv":
        sys.stdout.write(docs.to_csv(cert_docs))
        return
    for d in cert_docs:
        if fmt == "json":
            print(docs.dumps(d))
        else:
            status = "ok" if all(d["checks"].values()) else "FAILED"
            print(f"A={d['A']} m={d['m']} n={d['n']} l={d['l']} q={d['q']} "
                  f"closure={d['closure_order']} slope={d['collinear_slope']} {status}")


def cmd_certify(args):
    try:
        cert = docs.certify(args.m, args.n, args.l, args.q)
    except NotAdmissible as exc:
        raise UsageError(str(exc)) from exc
    d = docs.certificate_document(cert)
    _write_certs([d], args.format)
    failed = [k for k, v in d["checks"].items() if not v]
    if failed:
        _err(f"failed checks: {', '.join(failed)}")
        return FAILED
    return OK


def _load_rows(path):
    with open(path) as fh:
        return [PaperTableRow.from_json(r) for r in json.load(fh)]


def cmd_paper_table(args):
    try:
        rows = _load_rows(args.rows) if args.rows else PAPER_TABLE
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"cannot read rows: {exc}") from exc
    reports = []
    first_bad = None
    for i, row in enumerate(rows, 1):
        checks = verify_row(row)
        ok = all(checks.values())
        reports.append({"row": i, "A": str(row.A), "m": str(row.m), "pass": ok, "checks": checks})
        if not ok and first_bad is None:
            first_bad = i
    if args.format == "json":
        _emit(reports)
    else:
        for r in reports:
            row = rows[r["row"] - 1]
            m = "*".join(map(str, row.m_factors))
            print(f"row {r['row']}: A={r['A']} m={m} l={row.l} n={row.n} k={row.k} "
                  f"{'PASS' if r['pass'] else 'FAIL'}")
        print(f"{sum(r['pass'] for r in reports)}/{len(reports)} rows pass")
    if first_bad is not None:
        bad = [k for k, v in reports[first_bad - 1]["checks"].items() if not v]
        _err(f"row {first_bad} failed: {', '.join(bad)}")
        return FAILED
    return OK


def search_inputs(limit, max_j=None):
    """All admissible inputs with m <= limit, ascending in m then l."""
    if limit < 7:
        return []
    return [inp for m in admissible_moduli(limit, max_j) for inp in theorem_inputs(m)]


def _certify_doc(inp):
    return docs.certificate_document(rank2_certificate(inp))


def cmd_search(args):
    if args.jobs < 1:
        raise UsageError("--jobs must be >= 1")
    inputs = search_inputs(args.limit, args.max_j)
    if args.jobs == 1:
        cert_docs = [_certify_doc(inp) for inp in inputs]
    else:
        with ThreadPoolExecutor(max_workers=args.jobs) as pool:
            # map preserves input order
            cert_docs = list(pool.map(_certify_doc, inputs))
    _write_certs(cert_docs, args.format)
    _err(f"{len(cert_docs)} certificate(s)")
    return OK if all(all(d["checks"].values()) for d in cert_docs) else FAILED


def parse_point(text: str) -> Point:
    text = text.strip()
    if text.lower() in ("inf", "o", "infinity"):
        return INFINITY
    try:
        x, y = text.split(",")
        return Point(Fraction(x), Fraction(y))
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"cannot parse point {text!r}; expected x,y or inf") from exc


def cmd_point(args):
    try:
        c = CurveParams(args.A)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    ops = args.operands
    arity = {"add": 2, "double": 1, "neg": 1, "mul": 2}[args.op]
    if len(ops) != arity:
        raise UsageError(f"{args.op} takes {arity} operand(s), got {len(ops)}")
    if args.op == "mul":
        try:
            t = int(ops[0])
        except ValueError as exc:
            raise UsageError(f"bad multiplier {ops[0]!r}") from exc
        points = [parse_point(ops[1])]
    else:
        points = [parse_point(o) for o in ops]
    for p in points:
        if not on_curve(c, p):
            raise UsageError(f"{p} is not on {c}")
    if args.op == "add":
        r = add(c, *points)
    elif args.op == "double":
        r = double(c, points[0])
    elif args.op == "neg":
        r = neg(points[0])
    else:
        r = scalar_mul(c, t, points[0])
    if args.format == "text":
        print(r)
    else:
        _emit({"A": str(c.A), "op": args.op, "result": docs.point_json(r)})
    return OK


def cmd_primes(args):
    ps = primes_1_mod_6(args.limit)
    if args.format == "json":
        _emit([str(p) for p in ps])
    else:
        print("\n".join(map(str, ps)))
    return OK


def cmd_fact1(args):
    if args.m is not None:
        ms = [args.m]
    elif args.limit is not None:
        ms = admissible_moduli(args.limit, args.max_j)
    else:
        raise UsageError("fact1 needs --m or --limit")
    try:
        reports = [verify_fact1_counts(m) for m in ms]
    except NotAdmissible as exc:
        raise UsageError(str(exc)) from exc
    for r in reports:
        if args.format == "json":
            _emit({"m": str(r.m), "j": r.j,
                   "count_m": r.count_m, "expected_m": r.expected_m,
                   "count_m_squared": r.count_m_squared, "expected_m_squared": r.expected_m_squared,
                   "coprime_count": r.coprime_count, "claimed_coprime_count": r.claimed_coprime_count,
                   "pass": r.passed})
        else:
            print(f"m={r.m} j={r.j} m:{r.count_m}/{r.expected_m} m^2:{r.count_m_squared}/{r.expected_m_squared} "
                  f"coprime:{r.coprime_count} (claimed {r.claimed_coprime_count}) "
                  f"{'PASS' if r.passed else 'FAIL'}")
    return OK if all(r.passed for r in reports) else FAILED


def cmd_isprime(args):
    pr = primality(args.n)
    _emit({"n": str(args.n), "prime": pr.is_prime, "proven": pr.proven})
    return OK


def _fmt_arg(p, default):
    p.add_argument("--format", choices=["json", "csv", "text"], default=default)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cnforge", description="Rank-two congruent number curves from m^2 = n^2 + nl + l^2.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="solutions of n^2 + nl + l^2 = m (or m^2)")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--squared", action="store_true")
    _fmt_arg(p, "json")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("certify", help="rank >= 2 certificate for C_A with A = klmn q^4")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--q", type=int, default=1)
    _fmt_arg(p, "json")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("paper-table", help="verify the embedded table of rank-five curves")
    p.add_argument("--rows", help="JSON file of rows to check instead of the embedded table")
    _fmt_arg(p, "text")
    p.set_defaults(func=cmd_paper_table)

    p = sub.add_parser("search", help="certificates for every admissible m <= limit")
    p.add_argument("--limit", type=int, required=True)
    p.add_argument("--max-j", type=int, default=None)
    p.add_argument("--jobs", type=int, default=1)
    _fmt_arg(p, "json")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("point", help="group law on C_A; points are x,y with rational p/q entries, or inf")
    p.add_argument("--A", type=int, required=True)
    _fmt_arg(p, "json")
    p.add_argument("op", choices=["add", "double", "neg", "mul"])
    p.add_argument("operands", nargs=argparse.REMAINDER)
    p.set_defaults(func=cmd_point)

    p = sub.add_parser("primes", help="primes = 1 mod 6 up to a limit")
    p.add_argument("--limit", type=int, required=True)
    _fmt_arg(p, "text")
    p.set_defaults(func=cmd_primes)

    p = sub.add_parser("fact1", help="solution counts for m and m^2 against 2^(j-1) and (3^j-1)/2")
    p.add_argument("--m", type=int)
    p.add_argument("--limit", type=int)
    p.add_argument("--max-j", type=int, default=None)
    _fmt_arg(p, "text")
    p.set_defaults(func=cmd_fact1)

    p = sub.add_parser("isprime", help="primality with proof status")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_isprime)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else USAGE
    try:
        return args.func(args)
    except (UsageError, NotOnCurve, ValueError) as exc:
        _err(str(exc))
        return USAGE
    except CNForgeError as exc:
        _err(f"verification failed: {exc}")
        return FAILED


if __name__ == "__main__":
    sys.exit(main())

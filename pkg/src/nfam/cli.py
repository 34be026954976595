"""Command-line interface.

Every subcommand prints one JSON report on stdout::

    {"command": ..., "params": {...}, "result": {...}, "elapsed_ms": ...}

Exit codes: 0 success / property holds, 1 property violated or conjecture
mismatch, 2 usage or validation error, 3 search cap exceeded.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from pathlib import Path

from .census import closed_form_K_size, reference_size
from .construct import Params, build_K
from .extremal import SearchLimitExceeded, check_conjecture, max_family_search
from .polytope import PolytopeSpec, enumerate_L
from .seqcore import Family
from .verify import ProfileUndefined, derive_profile, find_union_violation, is_downset

EXIT_OK, EXIT_VIOLATED, EXIT_USAGE, EXIT_GUARD = 0, 1, 2, 3


class UsageError(Exception):
    pass


# -- family files ------------------------------------------------------------

def family_to_json(fam: Family) -> dict:
    return {"n": fam.n, "vectors": fam.to_lists()}


def family_from_json(data) -> Family:
    if not isinstance(data, dict) or set(data) != {"n", "vectors"}:
        raise UsageError('family file must be an object with keys "n" and "vectors"')
    n, rows = data["n"], data["vectors"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise UsageError(f"n must be a positive integer, got {n!r}")
    if not isinstance(rows, list):
        raise UsageError('"vectors" must be a list')
    return _family_from_rows(rows, n)


def _family_from_rows(rows, n: int) -> Family:
    seen = set()
    for row in rows:
        if not isinstance(row, list) or len(row) != n:
            raise UsageError(f"row {row!r} does not have length {n}")
        if any(not isinstance(v, int) or isinstance(v, bool) or v < 0 for v in row):
            raise UsageError(f"row {row!r} has a non-integer or negative entry")
        t = tuple(row)
        if t in seen:
            raise UsageError(f"duplicate row {row!r}")
        seen.add(t)
    return Family(seen, n)


def family_to_csv(fam: Family) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(fam.members)
    return buf.getvalue()


def read_family(path: str | Path) -> Family:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e}") from e
    if path.suffix.lower() == ".csv":
        try:
            rows = [[int(v) for v in row] for row in csv.reader(io.StringIO(text)) if row]
        except ValueError as e:
            raise UsageError(f"bad CSV in {path}: {e}") from e
        if not rows:
            raise UsageError("an empty CSV file does not determine n; use JSON")
        return _family_from_rows(rows, len(rows[0]))
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise UsageError(f"bad JSON in {path}: {e}") from e
    return family_from_json(data)


def write_family(path: str | Path, fam: Family, fmt: str = "json") -> None:
    text = family_to_csv(fam) if fmt == "csv" else json.dumps(family_to_json(fam)) + "\n"
    Path(path).write_text(text, encoding="utf-8")


# -- subcommands -------------------------------------------------------------

def _int_list(text: str) -> list[int]:
    try:
        return [int(v) for v in text.split(",")] if text.strip() else []
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _params(args) -> Params:
    return Params(args.r, args.n, tuple(args.a), args.d)


def cmd_construct(args):
    p = _params(args)
    K = build_K(p)
    params = {"r": p.r, "n": p.n, "a": list(p.a), "d": p.d, "emit": args.emit,
              "format": args.format, "output": args.output}
    result = {"s": p.s, "size": len(K)}
    if args.output:
        write_family(args.output, K, args.format)
    elif args.emit == "vectors":
        if args.format == "csv":
            return params, result, EXIT_OK, family_to_csv(K)
        result["family"] = family_to_json(K)
    return params, result, EXIT_OK, None


def cmd_count(args):
    p = _params(args)
    br = closed_form_K_size(p)
    enumerated = len(build_K(p))
    lattice = len(enumerate_L(PolytopeSpec(p)))
    agree = br.total == enumerated == lattice
    params = {"r": p.r, "n": p.n, "a": list(p.a), "d": p.d}
    result = {
        "s": p.s,
        "closed_form": {"base_term": br.base_term, "layer_terms": list(br.layer_terms),
                        "total": br.total},
        "enumerated": enumerated,
        "lattice": lattice,
        "agree": agree,
    }
    return params, result, EXIT_OK if agree else EXIT_VIOLATED, None


def cmd_verify(args):
    fam = read_family(args.family)
    params = {"family": args.family, "r": args.r, "s": args.s,
              "downset": args.downset, "profile": args.profile}
    bad = find_union_violation(fam, args.r, args.s)
    result = {"n": fam.n, "size": len(fam), "r_wise_s_union": bad is None, "witness": None}
    if bad is not None:
        result["witness"] = {"members": [list(x) for x in bad.members],
                             "join": list(bad.join), "weight": bad.weight}
    ok = bad is None
    if args.downset:
        result["downset"] = is_downset(fam)
        ok = ok and result["downset"]
    if args.profile:
        result["profile"] = _profile_dict(fam, args.r, args.s)
    return params, result, EXIT_OK if ok else EXIT_VIOLATED, None


def _profile_dict(fam, r, s):
    try:
        pr = derive_profile(fam, r, s)
    except ProfileUndefined as e:
        return {"defined": False, "reason": e.reason, "message": str(e),
                "m": list(e.m) if e.m is not None else None}
    except ValueError as e:
        return {"defined": False, "reason": "empty", "message": str(e), "m": None}
    return {"defined": True, "m": list(pr.m), "d": pr.d, "a": list(pr.a),
            "P": [list(x) for x in pr.P], "assumption_holds": pr.assumption_holds}


def _search_opts(args):
    return {"max_universe": args.max_universe, "threads": args.threads}


def cmd_search(args):
    params = {"n": args.n, "r": args.r, "s": args.s, "all_optima": args.all_optima,
              "symmetry": args.symmetry, "max_universe": args.max_universe,
              "threads": args.threads}
    rep = max_family_search(args.n, args.r, args.s, all_optima=args.all_optima,
                            symmetry=args.symmetry, **_search_opts(args))
    return params, rep.to_dict(), EXIT_OK, None


def cmd_conjecture(args):
    params = {"n": args.n, "r": args.r, "s": args.s, "max_universe": args.max_universe,
              "threads": args.threads}
    rep = check_conjecture(args.n, args.r, args.s, **_search_opts(args))
    result = rep.to_dict()
    result["counterexample"] = rep.match is False
    return params, result, EXIT_VIOLATED if rep.match is False else EXIT_OK, None


def cmd_refsize(args):
    if args.r < 2 or args.s < 0:
        raise UsageError("need r >= 2 and s >= 0")
    d, p = divmod(args.s, args.r)
    params = {"n": args.n, "r": args.r, "s": args.s}
    return params, {"d": d, "p": p, "size": reference_size(args.n, p, d)}, EXIT_OK, None


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="nfam", description="r-wise s-union families in N^n")
    sub = ap.add_subparsers(dest="command", required=True)

    def instance(p):
        p.add_argument("--r", type=int, required=True)
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--a", type=_int_list, required=True, help="comma-separated entries")
        p.add_argument("--d", type=int, required=True)

    def search_flags(p):
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--r", type=int, required=True)
        p.add_argument("--s", type=int, required=True)
        p.add_argument("--max-universe", type=int, default=None,
                       help="cap on |{x : |x| <= s}| (default 10000 or $NFAM_MAX_UNIVERSE)")
        p.add_argument("--threads", type=_positive, default=1)

    p = sub.add_parser("construct", help="build K(r, n, a, d)")
    instance(p)
    p.add_argument("--emit", choices=["vectors", "count"], default="vectors")
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.add_argument("--output", default=None, help="write the family file here")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("count", help="closed-form and enumerated |K|")
    instance(p)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("verify", help="check a family file")
    p.add_argument("--family", required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--downset", action="store_true")
    p.add_argument("--profile", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search", help="exact maximum family")
    search_flags(p)
    p.add_argument("--all-optima", action="store_true")
    p.add_argument("--symmetry", action="store_true",
                   help="break coordinate symmetry (size only, no full optima list)")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("conjecture", help="search vs best balanced K")
    search_flags(p)
    p.set_defaults(func=cmd_conjecture)

    p = sub.add_parser("refsize", help="size of D(U(e_p, d)) with s = d*r + p")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.set_defaults(func=cmd_refsize)
    return ap


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return v


def report_argv(report: dict) -> list[str]:
    """Rebuild the argument list that produced *report*."""
    argv = [report["command"]]
    for key, val in report["params"].items():
        flag = "--" + key.replace("_", "-")
        if isinstance(val, bool):
            if val:
                argv.append(flag)
        elif val is None:
            continue
        elif isinstance(val, list):
            argv += [flag, ",".join(map(str, val))]
        else:
            argv += [flag, str(val)]
    return argv


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    t0 = time.perf_counter()
    try:
        params, result, code, raw = args.func(args)
    except SearchLimitExceeded as e:
        print(f"nfam: {e}", file=stderr)
        return EXIT_GUARD
    except (UsageError, ValueError) as e:
        print(f"nfam: {e}", file=stderr)
        return EXIT_USAGE
    if raw is not None:
        stdout.write(raw)
        return code
    report = {
        "command": args.command,
        "params": params,
        "result": result,
        "elapsed_ms": int((time.perf_counter() - t0) * 1000),
    }
    stdout.write(json.dumps(report) + "\n")
    return code


def main():
    sys.exit(run())

"""Command-line front end: ``sumsetlab <command> ...``.

Exit codes: 0 success, 1 violations or failures found, 2 usage error,
3 overflow guard.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from datetime import datetime, timezone
from typing import Any

from . import bounds
from .core_sets import IntSet, add_dilated, format_set, parse_set_literal, read_set_file
from .decomposition import (
    HypothesisError,
    decompose,
    diagonal_delta_sizes,
    normalize,
    special_index,
)
from .search import LEMMAS, SearchSpec, run_search, verify_lemma

ELIDE = 200
EXIT_OK, EXIT_FOUND, EXIT_USAGE, EXIT_OVERFLOW = 0, 1, 2, 3


class UsageError(Exception):
    pass


# -- helpers ---------------------------------------------------------------


def _warn(msg: str) -> None:
    print(f"warning: {msg}", file=sys.stderr)


def _read_set(args) -> IntSet:
    if args.set is not None and args.set_file is not None:
        raise UsageError("give either --set or --set-file, not both")
    if args.set_file is not None:
        a = read_set_file(args.set_file)
    elif args.set is not None:
        a = parse_set_literal(args.set)
    else:
        raise UsageError("a set is required (--set or --set-file)")
    if not a:
        raise UsageError("the set is empty")
    return a


def _check_k(k: int) -> None:
    if k < 2:
        raise UsageError("--k must be at least 2")


def _k_class_warning(k: int) -> list[str]:
    if bounds.classify_k(k) == bounds.OTHER:
        return [f"k={k} is neither a prime power nor a semiprime; no proved bound applies (conjecture probing)"]
    return []


def _bound_dict(rep: bounds.BoundReport) -> dict:
    return {
        "k": rep.k,
        "size": rep.size,
        "chs_bound": rep.chs_bound,
        "factorial_bound": rep.factorial_bound,
        "threshold": rep.threshold,
        "k_class": rep.k_class,
        "proved_at_this_size": rep.theorem_covers,
    }


def _bound_line(rep: bounds.BoundReport) -> str:
    fb = "n/a" if rep.factorial_bound is None else rep.factorial_bound
    th = "n/a" if rep.threshold is None else rep.threshold
    return f"chs_bound {rep.chs_bound}  factorial_bound {fb}  threshold {th}  k_class {rep.k_class}"


# -- commands --------------------------------------------------------------
# Each returns (exit code, params, result, human-readable lines, warnings).


def cmd_compute(args):
    _check_k(args.k)
    a = _read_set(args)
    s = add_dilated(a, args.k, a)
    rep = bounds.bound_report(args.k, len(a))
    params = {"k": args.k, "set": a.to_list()}
    result = {"size": len(s), "set_size": len(a), "elements": s.to_list(), "bound": _bound_dict(rep)}
    lines = [
        f"A = {format_set(a, ELIDE)}  (|A| = {len(a)})",
        f"|A+{args.k}A| = {len(s)}",
        f"A+{args.k}A = {format_set(s, ELIDE)}",
        _bound_line(rep),
    ]
    return EXIT_OK, params, result, lines, _k_class_warning(args.k)


def cmd_bound(args):
    _check_k(args.k)
    if args.size < 1:
        raise UsageError("--size must be positive")
    rep = bounds.bound_report(args.k, args.size)
    lines = [f"k = {args.k}, |A| = {args.size}", _bound_line(rep)]
    return EXIT_OK, {"k": args.k, "size": args.size}, _bound_dict(rep), lines, _k_class_warning(args.k)


def cmd_decompose(args):
    _check_k(args.k)
    k = args.k
    a = _read_set(args)
    if len(a) < 2:
        raise UsageError("decompose needs at least two elements")
    base, log = normalize(a, k)
    d = decompose(base, k)
    deltas = diagonal_delta_sizes(d)
    special: dict[str, Any] = {}
    primes = bounds.factorize(k)
    if len(primes) == 1:
        (p,) = primes
        special = {"name": "m", "prime": p, "index": special_index(d, p)}
    elif bounds.semiprime_factors(k):
        from math import gcd

        p1 = gcd(d.u(2), k)
        if p1 != 1:
            special = {"name": "n", "prime": p1, "index": special_index(d, p1)}
    classes = [
        {
            "i": i,
            "u": d.u(i),
            "X": d.X(i).to_list(),
            "size": d.size(i),
            "projection": list(d.projection(i).members),
        }
        for i in range(1, d.j + 1)
    ]
    steps = [
        {
            "rule": s.rule,
            "amount": s.amount,
            "before": s.before.to_list(),
            "after": s.after.to_list(),
            "size_before": s.size_before,
            "size_after": s.size_after,
            "justification": s.justification,
        }
        for s in log
    ]
    result = {
        "normalization": steps,
        "normalized": base.to_list(),
        "j": d.j,
        "classes": classes,
        "E": list(d.E),
        "F": list(d.F),
        "special_index": special or None,
        "delta_sizes": list(deltas),
    }
    lines = [f"A = {format_set(a, ELIDE)}, k = {k}"]
    if not steps:
        lines.append("normalization: already normalized")
    for s in steps:
        lines.append(
            f"  {s['rule']:9s} {s['amount']:>6}  |A+kA| {s['size_before']} -> {s['size_after']}  ({s['justification']})"
        )
    lines.append(f"normalized A = {format_set(base, ELIDE)}")
    lines.append(f"j = {d.j} classes")
    for c in classes:
        lines.append(f"  A_{c['i']}: u = {c['u']}, |X| = {c['size']}, X = {format_set(c['X'], ELIDE)}")
    lines.append(f"E = {list(d.E)}  F = {list(d.F)}")
    if special:
        lines.append(f"special index {special['name']} = {special['index']} (prime {special['prime']})")
    lines.append(f"|D_ii| = {list(deltas)}")
    return EXIT_OK, {"k": k, "set": a.to_list()}, result, lines, _k_class_warning(k)


def _parse_bound(text: str):
    if text in ("chs", "factorial"):
        return text
    try:
        return int(text)
    except ValueError:
        raise UsageError(f"--bound must be chs, factorial or an integer, not {text!r}") from None


def cmd_search(args):
    _check_k(args.k)
    mode = {"min": "minimum", "minimum": "minimum", "violations": "violations"}[args.mode]
    workers = args.workers if args.workers is not None else int(os.environ.get("SUMSETLAB_WORKERS", "1"))
    try:
        spec = SearchSpec(
            k=args.k,
            size=args.size,
            diameter=args.diameter,
            gcd_one=args.gcd_one,
            use_reflection=args.reflection,
            mode=mode,
            bound=_parse_bound(args.bound),
            workers=workers,
            witness_cap=args.witness_cap,
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    res = run_search(spec)
    result = res.to_dict()
    lines = [
        f"k = {spec.k}, |A| = {spec.size}, min over 0 in A, A within [0,{spec.diameter}]"
        + (" (gcd 1)" if spec.gcd_one else "")
        + (" (reflection-reduced)" if spec.use_reflection else ""),
        f"sets enumerated: {res.sets_enumerated}",
        f"min |A+kA| = {res.min_value}",
        "witnesses: " + " ".join(format_set(w, ELIDE) for w in res.witnesses),
    ]
    code = EXIT_OK
    if mode == "violations":
        lines.append(f"bound = {res.bound_value}; violations: {len(res.violations)}")
        for v in res.violations[:ELIDE]:
            lines.append(f"  {format_set(v.set, ELIDE)}  |A+kA| = {v.value} < {v.bound}")
        if len(res.violations) > ELIDE:
            lines.append(f"  ... ({len(res.violations) - ELIDE} more)")
        code = EXIT_FOUND if res.violations else EXIT_OK
    warnings = _k_class_warning(spec.k)
    return code, spec.params(), result, lines, warnings


_VERIFY_FLAGS = ("modulus", "k", "diameter", "max_size", "samples", "span", "workers", "random_max_size")


def cmd_verify(args):
    params = {}
    for key in _VERIFY_FLAGS:
        val = getattr(args, key, None)
        if val is None:
            continue
        params[key] = val[0] if isinstance(val, list) and len(val) == 1 else val
    if args.lemma not in LEMMAS:
        raise UsageError(f"unknown lemma {args.lemma!r}; choose from {', '.join(sorted(LEMMAS))}")
    try:
        rep = verify_lemma(args.lemma, params, seed=args.seed, budget=args.budget)
    except HypothesisError as exc:
        raise UsageError(str(exc)) from None
    result = rep.to_dict()
    lines = [
        f"lemma {rep.name} ({rep.mode})",
        f"cases checked: {rep.cases_checked}",
        f"applicable: {rep.applicable_cases}",
        f"failures: {rep.failure_count}",
    ]
    for f in rep.failures:
        lines.append(f"  {f}")
    if rep.name == "lemma51":
        for size, info in rep.details["minima"].items():
            lines.append(f"  |A| = {size}: min |A+4A| = {info['min']}  e.g. {format_set(info['witnesses'][0])}")
    code = EXIT_OK if rep.passed else EXIT_FOUND
    return code, {"lemma": args.lemma, "seed": args.seed, "budget": args.budget, **params}, result, lines, []


def cmd_extremal(args):
    _check_k(args.k)
    try:
        fam = bounds.build_extremal(args.k, args.n, args.h)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    k, a = fam.k, fam.set
    value = len(add_dilated(a, k, a))
    chs = bounds.chs_bound(k, len(a))
    result: dict[str, Any] = {
        "set": a.to_list(),
        "set_size": len(a),
        "sumset_size": value,
        "chs_bound": chs,
        "interval_regime": fam.interval_regime,
        "equality": None,
    }
    lines = [f"A = {format_set(a, ELIDE)}  (|A| = {len(a)})", f"|A+{k}A| = {value}, chs_bound = {chs}"]
    warnings = []
    code = EXIT_OK
    if not fam.interval_regime:
        warnings.append(f"n = {args.n} < k-h = {k - args.h}: no equality is asserted in this regime")
    elif args.check:
        eq = bounds.check_extremal_equality(fam)
        result["equality"] = {"lhs": eq.lhs, "rhs": eq.rhs, "equal": eq.equal, "matches_chs": eq.matches_chs}
        verdict = "equality" if eq.equal else "MISMATCH"
        lines.append(f"{verdict}: {eq.lhs} = {eq.rhs}" if eq.equal else f"{verdict}: {eq.lhs} != {eq.rhs}")
        if not eq.equal:
            code = EXIT_FOUND
    return code, {"k": k, "n": args.n, "h": args.h, "check": args.check}, result, lines, warnings


# -- parser ----------------------------------------------------------------


def _add_set_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--set", help='comma-separated integers, e.g. "0,1,5" (use --set=-3,1 for a leading minus)')
    p.add_argument("--set-file", help="file with one integer per line; # starts a comment")


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--json", action="store_true", help="print one JSON object {command, params, result}")
    p.add_argument("--report", metavar="FILE", help="append a JSONL run record to FILE")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sumsetlab", description="Dilated sumsets A + k.A")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="compute A + k.A")
    p.add_argument("--k", type=int, required=True)
    _add_set_args(p)
    _add_common(p)

    p = sub.add_parser("bound", help="evaluate the lower bounds")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--size", type=int, required=True)
    _add_common(p)

    p = sub.add_parser("decompose", help="normalize and split A into residue classes")
    p.add_argument("--k", type=int, required=True)
    _add_set_args(p)
    _add_common(p)

    p = sub.add_parser("search", help="exhaustive search over canonical sets")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--size", type=int, required=True)
    p.add_argument("--diameter", type=int, required=True)
    p.add_argument("--gcd-one", action=argparse.BooleanOptionalAction, default=True)
    p.add_argument("--reflection", action=argparse.BooleanOptionalAction, default=False)
    p.add_argument("--mode", choices=("min", "minimum", "violations"), default="min")
    p.add_argument("--bound", default="chs", help="chs, factorial or an integer")
    p.add_argument("--workers", type=int, default=None, help="default: $SUMSETLAB_WORKERS or 1")
    p.add_argument("--witness-cap", type=int, default=16)
    _add_common(p)

    p = sub.add_parser("verify", help="check a lemma over small cases")
    p.add_argument("--lemma", required=True)
    p.add_argument("--modulus", type=int, nargs="+")
    p.add_argument("--k", type=int, nargs="+")
    p.add_argument("--diameter", type=int)
    p.add_argument("--max-size", type=int)
    p.add_argument("--random-max-size", type=int)
    p.add_argument("--samples", type=int)
    p.add_argument("--span", type=int)
    p.add_argument("--workers", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--budget", type=int, default=10**8)
    _add_common(p)

    p = sub.add_parser("extremal", help="build k.{0..n} + {0..h-1}")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--h", type=int, required=True)
    p.add_argument("--check", action="store_true")
    _add_common(p)
    return parser


COMMANDS = {
    "compute": cmd_compute,
    "bound": cmd_bound,
    "decompose": cmd_decompose,
    "search": cmd_search,
    "verify": cmd_verify,
    "extremal": cmd_extremal,
}


def append_record(path: str, record: dict) -> None:
    """Append one complete line with a single write so a crash leaves no partial record."""
    line = json.dumps(record, sort_keys=True) + "\n"
    fd = os.open(path, os.O_WRONLY | os.O_CREAT | os.O_APPEND, 0o644)
    try:
        os.write(fd, line.encode())
        os.fsync(fd)
    finally:
        os.close(fd)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    start = time.perf_counter()
    try:
        code, params, result, lines, warnings = COMMANDS[args.command](args)
    except OverflowError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_OVERFLOW
    except (UsageError, ValueError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    elapsed_ms = int((time.perf_counter() - start) * 1000)
    for w in warnings:
        _warn(w)
    if warnings:
        result = {**result, "warnings": warnings}
    if args.json:
        print(json.dumps({"command": args.command, "params": params, "result": result}, sort_keys=True))
    else:
        print("\n".join(lines))
    if args.report:
        record = {
            "timestamp": datetime.now(timezone.utc).isoformat(timespec="seconds").replace("+00:00", "Z"),
            "command": args.command,
            "params": params,
            "result": result,
            "elapsed_ms": elapsed_ms,
        }
        append_record(args.report, record)
    return code


if __name__ == "__main__":
    sys.exit(main())

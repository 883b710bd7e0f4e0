"""Run every registered lemma checker with its default slice and print a summary table.

    python scripts/verify_lemmas.py --seed 7 --samples 2000 --json out.json
"""

from __future__ import annotations

import argparse
import json
import time

from sumsetlab.search import LEMMAS, verify_lemma

# Parameters for a quick full pass; the acceptance suite uses larger ones.
QUICK = {
    "chowla": {"modulus": list(range(4, 11))},
    "stabilizer": {"k": [4, 6, 8, 9, 10, 12]},
    "improved_chowla": {"k": [4, 6, 9]},
    "wo": {"k": [2, 3, 4, 5, 7, 8, 9]},
    "changsui": {"k": [6, 10, 15]},
    "factorial": {"k": [2, 3, 4, 5, 6, 7, 8, 9, 10, 15]},
    "lemma51": {"diameter": 20},
}


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--only", nargs="+", choices=sorted(LEMMAS))
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--samples", type=int, default=2000, help="random cases for sampled checkers")
    ap.add_argument("--json", help="write all reports to this file")
    args = ap.parse_args()
    reports, bad = [], 0
    for name in args.only or sorted(LEMMAS):
        params = dict(QUICK.get(name, {}))
        if name not in ("chowla", "stabilizer", "improved_chowla", "lemma51"):
            params["samples"] = args.samples
        t = time.perf_counter()
        r = verify_lemma(name, params, seed=args.seed)
        bad += r.failure_count
        reports.append(r.to_dict())
        print(
            f"{name:16s} {r.mode:10s} cases {r.cases_checked:>9d}  applicable {r.applicable_cases:>9d}  "
            f"failures {r.failure_count}  ({time.perf_counter() - t:.1f}s)"
        )
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(reports, fh, indent=1, default=str)
    return 1 if bad else 0


if __name__ == "__main__":
    raise SystemExit(main())

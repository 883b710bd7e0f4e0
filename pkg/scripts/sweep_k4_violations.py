"""Hunt for sets with |A+4A| < 5|A|-6, growing the diameter per size.

Every claim printed is relative to the diameter searched.
"""

from __future__ import annotations

import argparse
import os
import time
from dataclasses import dataclass

from sumsetlab.search import SearchSpec, find_violations


@dataclass
class ViolationSweep:
    k: int = 4
    min_size: int = 5
    max_size: int = 9
    diameter: int = 24
    workers: int = int(os.environ.get("SUMSETLAB_WORKERS", "4"))


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    defaults = ViolationSweep()
    for name, val in vars(defaults).items():
        ap.add_argument(f"--{name.replace('_', '-')}", type=int, default=val)
    cfg = ViolationSweep(**vars(ap.parse_args()))
    found = 0
    for size in range(cfg.min_size, cfg.max_size + 1):
        t = time.perf_counter()
        r = find_violations(SearchSpec(cfg.k, size, cfg.diameter, mode="violations", workers=cfg.workers))
        found += len(r.violations)
        print(
            f"|A|={size:2d} diameter<={cfg.diameter}: {r.sets_enumerated:>9d} sets, "
            f"min {r.min_value} vs bound {r.bound_value}, {len(r.violations)} violations "
            f"({time.perf_counter() - t:.1f}s)"
        )
        for v in r.violations[:10]:
            print(f"    {v.set.to_list()}  {v.value} < {v.bound}")
    return 1 if found else 0


if __name__ == "__main__":
    raise SystemExit(main())

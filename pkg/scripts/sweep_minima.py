"""Tabulate min |A+kA| over canonical sets against chs_bound (k+1)|A| - ceil(k(k+2)/4).

Example:
    python scripts/sweep_minima.py --k 2 3 4 5 6 --sizes 2-8 --diameter 20 --workers 4
"""

from __future__ import annotations

import argparse
import json
import os
from dataclasses import asdict, dataclass, field

from sumsetlab.bounds import chs_bound, classify_k
from sumsetlab.search import SearchSpec, min_sumset_size


@dataclass
class SweepConfig:
    ks: list[int] = field(default_factory=lambda: [2, 3, 4, 5, 6])
    sizes: list[int] = field(default_factory=lambda: list(range(2, 9)))
    diameter: int = 20
    workers: int = int(os.environ.get("SUMSETLAB_WORKERS", "1"))
    out: str | None = None


def parse_range(text: str) -> list[int]:
    if "-" in text:
        lo, hi = text.split("-")
        return list(range(int(lo), int(hi) + 1))
    return [int(x) for x in text.split(",")]


def run(cfg: SweepConfig) -> list[dict]:
    rows = []
    for k in cfg.ks:
        for size in cfg.sizes:
            if size - 1 > cfg.diameter:
                continue
            res = min_sumset_size(SearchSpec(k, size, cfg.diameter, workers=cfg.workers))
            chs = chs_bound(k, size)
            rows.append(
                {
                    "k": k,
                    "k_class": classify_k(k),
                    "size": size,
                    "diameter": cfg.diameter,
                    "min": res.min_value,
                    "chs": chs,
                    "gap": res.min_value - chs,
                    "witness": res.witnesses[0].to_list(),
                    "sets": res.sets_enumerated,
                }
            )
            r = rows[-1]
            print(f"k={k:2d} |A|={size:2d}  min={r['min']:4d}  chs={chs:4d}  gap={r['gap']:+d}  e.g. {r['witness']}")
    return rows


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--k", type=int, nargs="+", default=SweepConfig().ks)
    ap.add_argument("--sizes", type=parse_range, default=SweepConfig().sizes)
    ap.add_argument("--diameter", type=int, default=20)
    ap.add_argument("--workers", type=int, default=SweepConfig().workers)
    ap.add_argument("--out", help="write rows as JSON lines")
    a = ap.parse_args()
    cfg = SweepConfig(ks=a.k, sizes=a.sizes, diameter=a.diameter, workers=a.workers, out=a.out)
    rows = run(cfg)
    if cfg.out:
        with open(cfg.out, "w") as fh:
            fh.write(json.dumps({"config": asdict(cfg)}) + "\n")
            for r in rows:
                fh.write(json.dumps(r) + "\n")


if __name__ == "__main__":
    main()

#!/usr/bin/env python3
"""Run the full verification campaign: every registered congruence family over
its production prime range, printing one summary line per job.

Usage:
    python3 scripts/verify_all.py [--workers N] [--seed S] [--quick]

Exits nonzero if any check fails.
"""

import argparse
import os
import sys
import time
from dataclasses import dataclass, replace

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from catcong.congruences import sweep  # noqa: E402


@dataclass(frozen=True)
class SweepJob:
    selector: str
    p_lo: int = 5
    p_hi: int = 500
    samples: int = 25
    exhaustive: bool = False

    def run(self, seed: int, workers: int):
        return sweep(
            self.selector, self.p_lo, self.p_hi,
            samples=self.samples, seed=seed,
            exhaustive=self.exhaustive, workers=workers,
        )


CAMPAIGN = [
    SweepJob("MAIN"),
    SweepJob("FULL"),
    SweepJob("M4"),
    SweepJob("M4QUAD"),
    SweepJob("M4AB"),
    SweepJob("M3"),
    SweepJob("M3CUBIC"),
    SweepJob("M6"),
    SweepJob("M6SEXTIC"),
    SweepJob("TR", p_hi=300, exhaustive=True),
    SweepJob("CAT", p_hi=300, exhaustive=True),
    SweepJob("SC", p_hi=300, exhaustive=True),
    SweepJob("MQL", p_hi=1000),
    SweepJob("MQL2", p_hi=1000),
    SweepJob("MQLS", p_hi=1000),
    SweepJob("M4PT", p_hi=1000),
    SweepJob("M3PT", p_hi=1000),
    SweepJob("M6PT", p_hi=1000),
    SweepJob("LMPT", p_hi=1000),
    SweepJob("LMSPT", p_hi=1000),
    SweepJob("M6PT t=1/108 full s", p_hi=5000),
]


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--workers", type=int, default=min(4, os.cpu_count() or 1))
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--quick", action="store_true",
                    help="cap every range at p <= 100 for a fast smoke run")
    args = ap.parse_args()

    jobs = CAMPAIGN
    if args.quick:
        jobs = [replace(j, p_hi=min(j.p_hi, 100)) for j in jobs]

    width = max(len(j.selector) for j in jobs)
    grand = {"total": 0, "passed": 0, "skipped": 0, "failed": 0}
    for job in jobs:
        t0 = time.time()
        rep = job.run(args.seed, args.workers)
        s = rep.summary
        for k in grand:
            grand[k] += s[k]
        span = "exhaustive" if job.exhaustive else f"samples={job.samples}"
        print(f"{job.selector:{width}}  p<={job.p_hi:<5} {span:<12} "
              f"total={s['total']:<7} skipped={s['skipped']:<5} "
              f"failed={s['failed']:<3} ({time.time() - t0:.1f}s)")
    print("-" * (width + 60))
    print(f"{'ALL':{width}}  total={grand['total']} passed={grand['passed']} "
          f"skipped={grand['skipped']} failed={grand['failed']}")
    return 0 if grand["failed"] == 0 else 1


if __name__ == "__main__":
    sys.exit(main())

#!/usr/bin/env python3
"""Tabulate the cubic-class partition of residues mod p and confirm that the
zero branch of the central-range criterion sum lands exactly on class C0.

Usage:
    python3 scripts/class_census.py [--p-lo 5] [--p-hi 100]
"""

import argparse
import os
import sys
from collections import Counter

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from catcong.congruences import check_tr  # noqa: E402
from catcong.eisenstein import classify_c  # noqa: E402
from catcong.modarith import primes_in  # noqa: E402


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--p-lo", type=int, default=5)
    ap.add_argument("--p-hi", type=int, default=100)
    args = ap.parse_args()

    print(f"{'p':>5} {'|C0|':>5} {'|C1|':>5} {'|C2|':>5} {'excl':>5}  zero-branch=C0")
    bad = 0
    for p in primes_in(args.p_lo, args.p_hi):
        if p == 3:
            continue
        counts = Counter(classify_c(c, p).name for c in range(p))
        concordant = True
        for c in range(p):
            if (c * c + 3) % p == 0:
                continue
            (r,) = check_tr(p, c)
            if not r.passed or (r.rhs == 0) != (r.params["class"] == "C0"):
                concordant = False
        bad += not concordant
        print(f"{p:>5} {counts.get('C0', 0):>5} {counts.get('C1', 0):>5} "
              f"{counts.get('C2', 0):>5} {counts.get('EXCLUDED', 0):>5}  "
              f"{'yes' if concordant else 'NO'}")
    return 0 if bad == 0 else 1


if __name__ == "__main__":
    sys.exit(main())

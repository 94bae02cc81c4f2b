#!/usr/bin/env python3
"""Cross-check the interval propagator against the exhaustive oracle.

Runs both deciders on every catalog covering table that is fully known
and small enough to search, tabulates the verdict pairs, and fails loudly
if the propagator ever claims a contradiction the oracle can satisfy.
"""

import argparse
import sys
import time

from isofloer.catalog import (
    collapse_step,
    enumerate_families,
    minimal_maslov,
    munzner_betti_N,
)
from isofloer.specseq import (
    CONTRADICTION,
    FEASIBLE,
    oracle_narrow_feasible,
    propagate_narrow,
)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--bound", type=int, default=16,
                        help="multiplicity-sum bound (default 16)")
    parser.add_argument("--max-n", type=int, default=16,
                        help="skip coverings above this dimension (default 16)")
    args = parser.parse_args()

    pairs = {}
    unsound = []
    skipped = 0
    for f in enumerate_families(args.bound):
        if f.n > args.max_n or minimal_maslov(f) < 3:
            skipped += 1
            continue
        try:
            table = munzner_betti_N(f)
        except LookupError:
            skipped += 1
            continue
        if not table.fully_known:
            skipped += 1
            continue
        maslov, nu = minimal_maslov(f), collapse_step(f)
        p = propagate_narrow(table, maslov, f.n, nu)
        start = time.perf_counter()
        o = oracle_narrow_feasible(table, maslov, nu)
        elapsed = time.perf_counter() - start
        pairs[(p.kind, o.kind)] = pairs.get((p.kind, o.kind), 0) + 1
        marker = ""
        if p.kind == CONTRADICTION and o.kind == FEASIBLE:
            unsound.append(f)
            marker = "  <-- UNSOUND"
        print(f"({f.g},{f.m1},{f.m2}) n={f.n:>2}: "
              f"propagate={p.kind:<16} oracle={o.kind:<10} {elapsed*1000:7.1f} ms{marker}")

    print()
    print("verdict pairs:")
    for (pk, ok), count in sorted(pairs.items()):
        print(f"  {pk:<16} / {ok:<10} : {count}")
    print(f"skipped {skipped} families (no full table, too large, or Maslov < 3)")

    if unsound:
        print(f"UNSOUND on {len(unsound)} families", file=sys.stderr)
        return 1
    print("no Contradiction/Feasible disagreement: propagator is sound here")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())

#!/usr/bin/env python3
"""Reproduce the full displaceability classification table.

Prints one row per catalog family plus a summary of the unresolved
cases, optionally dumping the full JSON reports for archiving.
"""

import argparse
import json

from isofloer.catalog import enumerate_families
from isofloer.criteria import UNRESOLVED, classify, report_to_json


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--bound", type=int, default=16,
                        help="multiplicity-sum bound (default 16)")
    parser.add_argument("--json", metavar="PATH", default=None,
                        help="also write the JSON reports to PATH")
    args = parser.parse_args()

    reports = [classify(f) for f in enumerate_families(args.bound)]

    print(f"{'g':>3} {'m1':>4} {'m2':>4} {'n':>4}  {'status':<16} justification")
    for report in reports:
        f = report.family
        trail = " -> ".join(step.rule for step in report.justification)
        print(f"{f.g:>3} {f.m1:>4} {f.m2:>4} {f.n:>4}  {report.status:<16} {trail}")

    unresolved = [r.family for r in reports if r.status == UNRESOLVED]
    counts = {}
    for report in reports:
        counts[report.status] = counts.get(report.status, 0) + 1
    print()
    print(f"{len(reports)} families:",
          ", ".join(f"{v} {k}" for k, v in sorted(counts.items())))
    print("unresolved:",
          ", ".join(f"({f.g},{f.m1},{f.m2})" for f in unresolved) or "none")

    if args.json:
        with open(args.json, "w", encoding="utf-8") as handle:
            json.dump([report_to_json(r) for r in reports], handle, indent=2)
        print(f"wrote {len(reports)} reports to {args.json}")


if __name__ == "__main__":
    main()

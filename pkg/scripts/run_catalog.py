#!/usr/bin/env python3
"""Sweep the full identity catalog and print a timing table.

    python scripts/run_catalog.py [--jobs N] [--family PREFIX]
"""

import argparse
import os
import sys
import time

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from cochainforge.catalog.runner import all_ids, run_catalog


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--jobs", type=int, default=2)
    ap.add_argument("--family", default="", help="id prefix filter")
    args = ap.parse_args()
    ids = [i for i in all_ids() if i.startswith(args.family)]
    t0 = time.time()
    reports = run_catalog(ids, jobs=args.jobs)
    total = time.time() - t0
    width = max(len(r.id) for r in reports)
    for r in reports:
        print(f"{r.id:<{width}}  {r.status:<16} {r.seconds:8.2f}s  "
              f"steps={r.steps}")
    bad = [r for r in reports if not r.verified]
    print(f"\n{len(reports)} identities, {len(bad)} not verified, "
          f"{total:.1f}s wall")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())

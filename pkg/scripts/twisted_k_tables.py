#!/usr/bin/env python3
"""Print twisted K-group tables for the bundled models over a range of
twists.

    python scripts/twisted_k_tables.py [--max-h 8]
"""

import argparse
import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from cochainforge.ahss.engine import converge
from cochainforge.ahss.model import CohomologyModel

FIX = os.path.join(os.path.dirname(__file__), "..", "src", "cochainforge",
                   "fixtures")


def table(name, twists):
    model = CohomologyModel.load(os.path.join(FIX, name))
    print(f"== {model.name} "
          f"(H^* = {[str(model.group(p)) for p in range(model.top + 1)]})")
    for h in twists:
        rep = converge(model.with_twist([h]))
        for cand in rep.candidates:
            label = f" [{cand.label}]" if len(rep.candidates) > 1 else ""
            print(f"  h={h:>2}{label}: K0 = {cand.k_str(0):<18} "
                  f"K1 = {cand.k_str(1)}")
    print()


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-h", type=int, default=6)
    args = ap.parse_args()
    rng = range(0, args.max_h + 1)
    table("s3_model.json", rng)
    table("t3_model.json", rng)
    table("lens_model.json", rng)
    table("su3.json", [h for h in rng if h % 2 == 1])
    table("su3_even.json", [h for h in rng if h % 2 == 0 and h > 0])


if __name__ == "__main__":
    main()

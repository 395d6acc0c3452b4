#!/usr/bin/env python3
"""Recompute the (n=2, m=6) facet data from scratch and compare or rewrite
the embedded golden file.

Usage:
    python scripts/regen_golden_facets.py           # verify only
    python scripts/regen_golden_facets.py --write   # rewrite src/sunlr/data/facets_2_6.json

Pipeline: enumerate all 4096 subset tuples, keep the minimal wall
candidates, drop redundant inequalities by exact LP, drop the trivial
(simple-root) facets, and reduce modulo the polygon symmetries.
"""

import argparse
import json
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from sunlr.horn import computed_facets_2_6, verify_facets_2_6  # noqa: E402


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--write", action="store_true", help="rewrite the golden file")
    args = parser.parse_args()

    report = verify_facets_2_6()
    print(json.dumps(report, indent=2, sort_keys=True))
    if args.write:
        computed = computed_facets_2_6()
        golden = {
            "version": computed["version"],
            "n": 2,
            "m": 6,
            "symmetry": "rotations by two flags and the parity-preserving reflections",
            "facets": computed["facets"],
        }
        target = Path(__file__).resolve().parent.parent / "src" / "sunlr" / "data" / "facets_2_6.json"
        target.write_text(json.dumps(golden, indent=1, sort_keys=True) + "\n")
        print(f"wrote {target}")
    return 0 if report["passed"] else 1


if __name__ == "__main__":
    sys.exit(main())

#!/usr/bin/env python3
"""Exhaustive agreement sweep over all four evaluation routes.

For every tuple of partitions in the requested box, compares the chain
sum, the glued-hive count, the quiver weight-space dimension, and LP
positivity.  Any disagreement is a bug and aborts with the witness.

Usage: python scripts/oracle_sweep.py [n] [m] [max_entry]
"""

import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from sunlr.generalized import f_sun  # noqa: E402
from sunlr.hive import count_sun_hives, positivity  # noqa: E402
from sunlr.partitions import iter_partition_tuples  # noqa: E402
from sunlr.quiver import build_sun_quiver, dim_si_sun, weight_sigma1  # noqa: E402


def main():
    n = int(sys.argv[1]) if len(sys.argv) > 1 else 2
    m = int(sys.argv[2]) if len(sys.argv) > 2 else 4
    max_entry = int(sys.argv[3]) if len(sys.argv) > 3 else 2
    Q = build_sun_quiver(n, m // 2)
    started = time.time()
    checked = 0
    nonzero = 0
    for lams in iter_partition_tuples(n, max_entry, m):
        value = f_sun(lams, n)
        hives = count_sun_hives(lams, n)
        weight_space = dim_si_sun(Q, weight_sigma1(lams, n))
        lp = positivity(lams, n, m)
        if not (value == hives == weight_space and lp == (value > 0)):
            print(f"DISAGREEMENT at {lams}: chain={value} hives={hives} "
                  f"weight={weight_space} lp={lp}")
            return 1
        checked += 1
        nonzero += value > 0
    print(f"n={n} m={m} entries<={max_entry}: {checked} tuples agree "
          f"({nonzero} nonzero) in {time.time()-started:.1f}s")
    return 0


if __name__ == "__main__":
    sys.exit(main())

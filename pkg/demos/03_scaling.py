"""Time the three trackers on growing horizons and fit log-log slopes.

Takes about a minute; pass a larger top exponent to go further.
"""

import sys

from localheat.harness import exponents, format_bench, run_bench

top = int(sys.argv[1]) if len(sys.argv) > 1 else 17

rows = run_bench([2**k for k in range(13, top + 1)], engines=("dsu", "tree"), repeats=1)
rows += run_bench([2**k for k in range(10, 14)], engines=("naive",), repeats=1)
print(format_bench(rows))

k = exponents(rows)
print(f"\ndsu grows like T^{k['dsu']:.2f}, tree like T^{k['tree']:.2f}, "
      f"naive like T^{k['naive']:.2f}")

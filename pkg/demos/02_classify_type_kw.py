"""Classify the type-(k, w) families for small k and compare with d(k, w).

Run: python3 demos/02_classify_type_kw.py [kmax]
"""

import sys

from corank2 import bigraded as bg

kmax = int(sys.argv[1]) if len(sys.argv) > 1 else 10
print(" k   w   d(k,w)  oracle  family  frame")
for k in range(3, kmax + 1):
    for w in range(1, 2 * k, 2):
        fam = bg.solve_family(k, w)
        if fam.empty and bg.d_kw(k, w) < -1:
            continue
        frame = "-"
        if not fam.empty:
            frame = str(bg.assemble_frame(fam.normalized_c).dim)
        print(f"{k:2d} {w:3d} {bg.d_kw(k, w):6d} {fam.oracle_dim:7d} {fam.family_dim:7d}  {frame:>5}")

print("\nk = 8 has exactly these nonempty families:",
      [w for w in range(1, 16, 2) if not bg.solve_family(8, w).empty])

f = bg.solve_family(3, 1)
print("\nthe (3, 1) point:", f.normalized_c)

"""Read the integer invariants w and i off the frame algebras.

Run: python3 demos/04_invariants.py
"""

from corank2 import bigraded as bg
from corank2.invariants import FrameAlgebra, dim_A_mod_H, invariant_report, r_invariant

for k, w in ((3, 1), (5, 3), (8, 1), (8, 3), (9, 5)):
    f = FrameAlgebra.from_cmatrix(bg.solve_family(k, w).normalized_c)
    rep = invariant_report(f)
    print(f"(k, w) = ({k}, {w}): w = {rep['w']}, i = {rep['i']}, r = {r_invariant(f)}, "
          f"dim A_w/H = {dim_A_mod_H(f)}, L dims {rep['flagL_dims']}")

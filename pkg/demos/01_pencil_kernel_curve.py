"""Kernel curve and Kronecker index of the symbol pencil, then of a damaged copy.

Run: python3 demos/01_pencil_kernel_curve.py
"""

from fractions import Fraction

from corank2.exact import ratstr
from corank2.pencil import SkewPencil, g1_check, kronecker_index, symbol_pencil, xp_polynomial

k = 3
P = symbol_pencil(k)
X = xp_polynomial(P)
print(f"symbol pencil, k = {k}: size {P.size}")
for j, b in enumerate(X.coeffs):
    print(f"  coefficient of p1^{k - j} p2^{j}:", [ratstr(v) for v in b])
print("  kronecker index:", kronecker_index(P))
print("  G1 report:", g1_check(P).to_dict())

# Remove the pairing (x3, y1) from A2: x3 becomes a constant kernel vector.
A1, A2 = [r[:] for r in P.A1], [r[:] for r in P.A2]
p, q = k, k + 1
A2[p][q] = A2[q][p] = Fraction(0)
Q = SkewPencil(k, A1, A2)
print("\nafter zeroing the (x3, y1) pairing")
print("  kronecker index:", kronecker_index(Q))
print("  G1 report:", g1_check(Q).to_dict())

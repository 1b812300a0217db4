"""Build m_k from sl2 projections for k = 1 mod 4 and match it to the (k, (k+1)/2) family.

Run: python3 demos/03_sl2_models.py
"""

from corank2 import bigraded as bg
from corank2.liealg import degree_zero_derivations, jacobi_residual
from corank2.sl2rep import build_mk, decompose, extract_c, irreducible, wedge

for k in (5, 9):
    print(f"k = {k}: second exterior power of V{k} =", decompose(wedge(irreducible(k), 2)))
    mk = build_mk(k)
    res, _ = jacobi_residual(mk)
    der, _ = degree_zero_derivations(mk)
    c = extract_c(mk)
    ok, lam = bg.compare_projective(bg.solve_family(k, (k + 1) // 2).normalized_c, c)
    print(f"  dim m_k = {mk.dim}, Jacobi residual {res}, degree-zero derivations {der}")
    print(f"  matches the family point: {ok} (scale {lam})")

try:
    build_mk(7)
except ValueError as exc:
    print("\nk = 7:", exc)

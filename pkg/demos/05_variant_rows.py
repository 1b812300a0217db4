"""Alternative forms of several rows and identities, checked against the oracle.

Each pair shows a form that fails next to the one that holds.

Run: python3 demos/05_variant_rows.py
"""

from corank2 import bigraded as bg
from corank2.liealg import model_table

c = bg.CMatrix(3, 1, model_table(3))
x = bg.x_from_c(c)
dot = lambda r: sum(a * b for a, b in zip(r, x))

print("pair relations on the k=3 model")
print("  unadjusted:", [str(v) for v in bg.pair_relation_residuals(c, corrected=False)])
print("  corrected: ", [str(v) for v in bg.pair_relation_residuals(c, corrected=True)])

print("extra odd-k row on the k=3 model")
for variant in ("printed", "corrected", "shifted"):
    print(f"  {variant:9s}", dot(bg.system5a(3, 1, variant)))

print("alternating binomial sum, (l, s, m) = (1, 1, 1)")
print("  sign (-1)^j:    ", bg.ident2_sides(1, 1, 1, printed=True))
print("  sign (-1)^(l-j):", bg.ident2_sides(1, 1, 1))

print("symmetric binomial sum, (mu, omega, w, y) = (2, 3, 1, 3)")
print("  shift by w:    ", bg.ident3_sides(2, 3, 1, 3, printed=True))
print("  shift by omega:", bg.ident3_sides(2, 3, 1, 3))

print("system7y rank at (6, 3)")
for y in (2, 0, 1, "-5/2"):
    print(f"  y = {y:>4}: rank/unknowns = {bg.system7y_rank(6, 3, y)}")

f = bg.solve_family(5, 3).normalized_c
try:
    bg.assemble_frame(f, cE="bare")
except bg.JacobiError as exc:
    print("[c, E] = -2a alone:", exc)
print("[c, E] = -2a + k b: frame dim", bg.assemble_frame(f).dim)

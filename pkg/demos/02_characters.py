"""Character tables from class-sum structure constants.

Conjugacy class sums commute, so their multiplication matrices share an
eigenbasis.  One random combination of them separates the eigenvectors, each
of which is a central character; degrees follow from the norm.
"""

import numpy as np

from quatmckay import build_group, character_table

g = build_group("2T")
t = character_table(g)
np.set_printoptions(precision=3, suppress=True, linewidth=120)
print("class sizes", t.class_sizes.tolist())
for deg, par, row in zip(t.degrees, t.parities, t.values):
    print(f"deg {deg} parity {par:+d}  {np.round(row, 3)}")

print("sum of squared degrees:", int((t.degrees ** 2).sum()), "= |2T| =", g.order)
gram = np.array([[t.inner_product(a, b) for b in t.values] for a in t.values])
print("rows orthonormal:", np.allclose(gram, np.eye(len(t))))

"""Finite subgroups of SU(2) as sets of unit quaternions.

Every finite subgroup of SU(2) is cyclic, binary dihedral, or one of the
three binary polyhedral groups.  This script builds each family, checks the
orders and counts conjugacy classes.
"""

import numpy as np

from quatmckay import groups, quat

print("Hamilton: i*j =", quat.qmul([0, 1, 0, 0], [0, 0, 1, 0]))

for g in [groups.cyclic(6), groups.binary_dihedral(3), groups.binary_tetrahedral(),
          groups.binary_octahedral(), groups.binary_icosahedral()]:
    part = groups.conjugacy_classes(g)
    print(f"{g.name:>6}: order {g.order:4d}, {len(part)} classes, sizes {part.sizes.tolist()}")

# The 120 icosians are well separated, so a 1e-6 grid gives each its own key.
e = groups.binary_icosahedral().elements[:, :4]
d = np.abs(e[:, None] - e[None]).max(axis=2)
np.fill_diagonal(d, np.inf)
print(f"smallest coordinate distance between icosians: {d.min():.4f}")

# Subgroups of SU(2) x SU(2): direct products, diagonals, and anything a
# generator set closes up to.
p = groups.product(groups.binary_tetrahedral(), groups.binary_icosahedral())
print("2T x 2I has order", p.order)
w = quat.from_angle(np.pi / 3)
print("closure of (e^{i pi/3}, e^{i pi/3}) has order", groups.from_generators([np.concatenate([w, w])]).order)

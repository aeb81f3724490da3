"""Partitions into many parts under the slow-Triangle map.

Run:  python3 demos/04_triangle_map.py
"""

from partition_dynamics.partitions import Partition
from partition_dynamics.tables import triangle_orbit_table
from partition_dynamics.triangle import multiplicity_lemmas, tri_inv_D, tri_inv_D_range, tri_orbit

for root in (Partition((11, 9, 4), (1, 0, 0)), Partition((14, 7, 6, 5), (1, 0, 0, 0))):
    print(f"Orbit of {root}, weight {root.weight}:")
    print(triangle_orbit_table(tri_orbit(root)).render("pretty"))

# Branches 0 and 1 never produce the multiplicity vector [2,1,2] from a root ...
report = multiplicity_lemmas(3, 40)
print(f"[2,1,2] reached by branches 0/1 (n1 <= 40): {(2, 1, 2) in report.allowable}")
print("statement violations:", report.violations)
print("first [k,...,k] vector seen:", report.examples.get("e"))

# ... but the boundary branch D does, one dimension down.
target = Partition((5, 2, 1), (2, 1, 2))
for k in tri_inv_D_range(target):
    print(f"{target} is the D-image of {tri_inv_D(target, k)}")

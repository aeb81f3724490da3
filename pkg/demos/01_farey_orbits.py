"""Walk one fraction through the Farey map and watch partitions appear.

Run:  python3 demos/01_farey_orbits.py
"""

from fractions import Fraction

from partition_dynamics.cfrac import cf_expand, convergents, mirror
from partition_dynamics.extended_farey import ef_orbit, root_of
from partition_dynamics.farey import binary_sequence, depth, matrix_of
from partition_dynamics.tables import farey_orbit_table, generation_table

x = Fraction(8, 19)
print(f"x = {x}")
print("  digits      ", cf_expand(x))
print("  convergents ", convergents(cf_expand(x)))
print("  mirror      ", mirror(cf_expand(x)))
print("  sequence    ", binary_sequence(x), " depth", depth(x))
print("  matrix      ", matrix_of(x).tolist())

# Carry multiplicities along: every state is a partition of 19.
orbit = ef_orbit(root_of(19, 8))
print("\nOrbit of (19,8) x [1,0]:")
print(farey_orbit_table(orbit).render("pretty"))

# For a prime n, the fractions r/n with r < n/2 generate all two-part partitions.
print("Generations for n = 11:")
print(generation_table(11).render("pretty"))

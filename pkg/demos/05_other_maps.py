"""Which three-dimensional continued fraction maps keep multiplicities nonnegative?

Run:  python3 demos/05_other_maps.py
"""

from partition_dynamics.mapdef import builtin_mapdef, loads_mapdef
from partition_dynamics.mcf_zoo import cassaigne_step, classify, find_conjugation_failure, map_orbit, monkemeyer_step
from partition_dynamics.partitions import Partition
from partition_dynamics.tables import zoo_orbit_table

lam = Partition((7, 5, 4), (3, 2, 4))
print(f"{lam} (weight {lam.weight})")
print("  Monkemeyer ->", monkemeyer_step(lam))
print("  Cassaigne  ->", cassaigne_step(lam))

for name in ("monkemeyer", "cassaigne", "triangle", "t12e12", "t13_12_12", "t132_12_e"):
    v = classify(name, 60)
    extra = "" if v.partition_safe else f"  first failure from root {v.counterexample['root']['parts']}"
    print(f"{name:<11} safe={v.partition_safe}{extra}")

rows = map_orbit(builtin_mapdef("t12e12"), (11, 9, 4), (1, 0, 0))
print()
print(zoo_orbit_table("t12e12", rows).render("pretty"))
print("conjugation fails for T(12,e,12) at", find_conjugation_failure("t12e12", 20))

# Any map can be described in TOML and classified the same way.  Here the
# triangle map is written out by hand with its branch labels swapped.
custom = loads_mapdef("""
name = "triangle_relabelled"
dim = 3

[[branch]]
label = "A"
when = [1, -1, -1]
parts = [[1, 0, -1], [0, 1, 0], [0, 0, 1]]
mults = [[1, 0, 0], [0, 1, 0], [1, 0, 1]]

[[branch]]
label = "B"
when = [-1, 1, 1]
parts = [[0, 1, 0], [0, 0, 1], [1, -1, 0]]
mults = [[1, 1, 0], [0, 0, 1], [1, 0, 0]]
""")
print("\ncustom map preserves weight:", all(b.weight_preserving() for b in custom.branches))
print("custom map safe:", classify(custom, 40).partition_safe)

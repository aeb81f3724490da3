"""Count partitions of n with exactly two distinct part sizes, four ways.

Run:  python3 demos/02_counting_two_part_partitions.py
"""

from sympy import isprime

from partition_dynamics.counting import count_report, orbit_cover_decomposition
from partition_dynamics.tables import count_table

reports = [count_report(n) for n in range(2, 21)]
print(count_table(reports).render("pretty"))

# The Farey orbits of reduced fractions alone miss partitions unless n is prime or 4.
complete = [r.n for r in reports if r.farey_complete]
print("Farey-complete n up to 20:", complete)
print("primes and 4 up to 20:   ", [n for n in range(2, 21) if isprime(n) or n == 4])

# Scaling roots (n/e, r/e) x [e, 0] fills the gaps exactly once.
n = 12
cover = orbit_cover_decomposition(n)
print(f"\nOrbit cover of n = {n}:")
for entry in cover:
    if entry.partitions:
        shown = ", ".join(str(p) for p in entry.partitions)
        print(f"  r={entry.r:2d} e={entry.e}  root {entry.root}:  {shown}")
print("total", sum(len(e.partitions) for e in cover))

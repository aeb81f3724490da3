"""Conjugate partitions and the time reversal hidden in Farey orbits.

Run:  python3 demos/03_conjugation_and_palindromes.py
"""

from partition_dynamics.extended_farey import (
    ef_orbit,
    orbit_of_fraction,
    palindrome_v2_apply,
    reversed_partner,
    root_of,
)
from partition_dynamics.partitions import Partition, conjugate, render_shape, young_shape

lam = Partition((5, 3, 2), (3, 2, 1))
print(f"{lam} and its conjugate {conjugate(lam)}")
for a, b in zip(render_shape(young_shape(lam)).splitlines() + [""], render_shape(young_shape(conjugate(lam))).splitlines()):
    print(f"  {a:<12}{b}")

# Reversing the binary sequence of r/n gives a partner whose orbit, read
# backwards, consists of the conjugates of the orbit of r/n.
r, n = 2, 11
partner = reversed_partner(r, n)
print(f"\npartner of {r}/{n} is {partner}")
for p, q in zip(orbit_of_fraction(r, n), reversed(orbit_of_fraction(partner.numerator, n))):
    print(f"  {str(p):<18} conj -> {str(conjugate(p)):<18} partner: {q}")

# Running the same word backwards from the conjugate of the endpoint lands on
# the conjugate of the root.
orbit = ef_orbit(root_of(19, 8))
back = palindrome_v2_apply(orbit.final, orbit.word)
print(f"\nword {orbit.word}: backwards from conj({orbit.final}) gives {back}, canonical {back.canonical()}")

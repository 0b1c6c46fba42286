"""From a Gamma(3) matrix to its invariants, and from invariants back to a
canonical representative of the Gamma_inf(3)-orbit.

Run: python demos/03_orbits.py
"""

import random

from eisenorbit import case_of, check_conditions, invariants, random_gamma3, representative, same_orbit
from eisenorbit.eisenstein import parse
from eisenorbit.gamma import InvariantTuple, random_gamma_inf3

rng = random.Random(2028)
A, word = random_gamma3(rng, max_length=8)
t = invariants(A)
print("random word:", [(i, j, str(c)) for i, j, c in word])
print("invariants :", t, "| violated conditions:", check_conditions(t) or "none")

# multiplying on the left by Gamma_inf(3) does not move the invariants
C = random_gamma_inf3(rng)
print("Inv(C A) == Inv(A):", invariants(C @ A) == t)

X, dec = representative(t)
print("\nrepresentative (", case_of(t), "):", X)
print("same orbit as A:", same_orbit(X, A))
print("left form is", dec.cell, "with Gamma_inf(3) factor", dec.C)

# a tuple written down by hand
t = InvariantTuple(*map(parse, ["-3+6w", "-3", "-2-3w", "-6+3w", "3-6w", "4+3w"]))
X, _ = representative(t)
print("\nhand tuple", t, "->", X)
print("Inv(X) == tuple:", invariants(X) == t)

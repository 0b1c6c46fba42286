"""A tour of Z[w]: products, norms, division, gcds and the two normal forms.

Run: python demos/01_arithmetic.py
"""

from eisenorbit.eisenstein import UNITS, EisensteinInt, extended_gcd, gcd, mod3, residue_mod, unit_normalize

w = EisensteinInt(0, 1)
x = EisensteinInt(7, 3)
y = EisensteinInt(2, -1)

print("w^2     =", w * w)          # -1 - w
print("x * y   =", x * y)
print("N(x)    =", x.norm())

# Euclidean division rounds each coordinate of x/y to the nearest integer
q, r = divmod(x, y)
print(f"{x} = ({q})({y}) + ({r}),  N(r) = {r.norm()} < N(y) = {y.norm()}")

# 3 ramifies: 3 = -w^2 (1 - w)^2, and 1 - w is an associate of 2 + w
print("gcd(3, 2+w) =", gcd(3, EisensteinInt(2, 1)))
g, s, t = extended_gcd(EisensteinInt(12, 5), EisensteinInt(-4, 9))
print(f"Bezout: ({s})(12+5w) + ({t})(-4+9w) = {g}")

# every nonzero element has exactly one associate with 0 <= b < a
z = EisensteinInt(-5, -8)
print("associates of", z, ":", [str(u * z) for u in UNITS])
u, n = unit_normalize(z)
print(f"unit-normal form: {z} = ({u}) * ({n})")

print("residue of 17+4w mod 3+w:", residue_mod(EisensteinInt(17, 4), EisensteinInt(3, 1)))
print("reduction mod 3 of -4+8w:", mod3(EisensteinInt(-4, 8)))

"""Cell decompositions of a unimodular matrix, both left and right.

Run: python demos/02_decompose.py
"""

from eisenorbit import Mat3, classify_cell, decompose_left, decompose_right, left_cell
from eisenorbit.serialize import decomposition_to_json, dumps

A = Mat3([[4, -3, -12], [-3, 4, 15], [-6, 3, 13]])
print("A =", A)
print("cell of A:", classify_cell(A), "| cell indexing its left form:", left_cell(A))

left = decompose_left(A)
print("\nA = C u d phi1(y3) phi2(y2) phi1(y1) with")
print(dumps(decomposition_to_json(left)))
assert left.recompose() == A

right = decompose_right(A)
print("\nA = phi2(y1^-1) phi1(y2^-1) phi2(y3^-1) d u C with")
print(dumps(decomposition_to_json(right)))
assert right.recompose() == A
print("\nboth forms multiply back to A")

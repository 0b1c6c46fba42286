"""Steinberg reduction of a pair (a, b) over Z[w].

The canonical matrices live in the transversal ``Y``: the identity together
with every SL2 matrix ``[[p, q], [r, s]]`` whose lower-left entry ``r`` is
nonzero and unit-normal and whose upper-left entry ``p`` is the canonical
residue of itself modulo ``r``.
"""

from __future__ import annotations

from .eisenstein import (
    EisensteinInt,
    as_eisenstein,
    exact_div,
    extended_gcd,
    gcd,
    residue_mod,
    unit_normalize,
)
from .matrices import Mat2

__all__ = ["YMatrix", "is_y_matrix", "y_membership", "reduce_pair", "y_from_bottom_row", "SWAP"]


def is_y_matrix(m: Mat2) -> bool:
    """Membership test for the transversal Y."""
    if m.det() != 1:
        return False
    if m.is_identity():
        return True
    (p, _), (r, _) = m.rows
    if not r or unit_normalize(r).normal != r:
        return False
    return residue_mod(p, r) == p


y_membership = is_y_matrix


class YMatrix(Mat2):
    """A Mat2 certified to lie in Y; construction fails otherwise."""

    __slots__ = ()

    def __init__(self, rows) -> None:
        super().__init__(rows)
        if not is_y_matrix(self):
            raise ValueError(f"{Mat2(self.rows)!r} is not in the transversal Y")


SWAP = YMatrix([[0, -1], [1, 0]])


def y_from_bottom_row(r, s) -> tuple[YMatrix, EisensteinInt]:
    """Complete a coprime row ``(r, s)``, ``r != 0``, to a matrix in Y.

    The row is first rescaled by the unit ``v`` making ``r`` unit-normal;
    returns the matrix and ``v`` so that the bottom row is ``(r, s) / v``.
    """
    r, s = as_eisenstein(r), as_eisenstein(s)
    if not r:
        raise ValueError("lower-left entry must be nonzero")
    v, r_n = unit_normalize(r)
    s_n = s * v.conj()
    g, x, y = extended_gcd(s_n, r_n)
    if g != 1:
        raise ValueError(f"row ({r}, {s}) is not coprime")
    # x*s + y*r = 1, so (p, q) = (x, -y) gives p*s - q*r = 1
    p, q = x, -y
    p_v = residue_mod(p, r_n)
    shift = exact_div(p - p_v, r_n)
    q_v = q - s_n * shift
    return YMatrix([[p_v, q_v], [r_n, s_n]]), v


def reduce_pair(a, b) -> tuple[YMatrix, EisensteinInt]:
    """Return ``(y, g)`` with ``y @ (a, b)^T == (g, 0)^T`` and ``y`` in Y.

    ``g`` is an associate of gcd(a, b); which associate is determined by the
    canonical choice of ``y`` and is returned so callers can track units.
    """
    a, b = as_eisenstein(a), as_eisenstein(b)
    if not a and not b:
        raise ValueError("cannot reduce the zero column")
    if not b:
        return YMatrix.identity(), a
    if not a:
        return SWAP, -b
    g0 = gcd(a, b)
    y, _ = y_from_bottom_row(exact_div(-b, g0), exact_div(a, g0))
    (p, q), _ = y.rows
    g = p * a + q * b
    return y, g


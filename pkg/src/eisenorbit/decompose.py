"""Bruhat-like cell decompositions of SL3(Z[w]).

Every determinant-one matrix factors uniquely as

    A = phi2(y1^-1) phi1(y2^-1) phi2(y3^-1) d u C          (right form)

with ``y1, y2, y3`` in the transversal Y, ``d`` a diagonal unit matrix of
determinant one, ``u`` upper unipotent with entries in {0,1,2}+{0,1,2}w and
``C`` in Gamma_inf(3). Applying the same construction to ``upsilon1(A)``
gives the left form

    A = C u d phi1(y3) phi2(y2) phi1(y1)

which is what orbit representatives of Gamma_inf(3) \\ Gamma(3) use.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .eisenstein import ONE, EisensteinInt, as_eisenstein, is_unit, mod3, unit_inverse
from .gamma import InternalConsistencyError, in_gamma_inf3
from .matrices import Mat2, Mat3, NotUnimodularError, diag, phi1, phi2, upsilon1
from .steinberg import YMatrix, is_y_matrix, reduce_pair

__all__ = [
    "CellTag",
    "DiagonalUnit",
    "UnipotentMod3",
    "RightDecomposition",
    "LeftDecomposition",
    "classify_cell",
    "left_cell",
    "decompose_right",
    "decompose_left",
    "recompose",
    "split_upper_unipotent",
    "factor_shape_ok",
    "factors_canonical",
]

_RESIDUES = frozenset(EisensteinInt(a, b) for a in range(3) for b in range(3))


class CellTag(str, enum.Enum):
    DELTA2 = "Delta2"
    DELTA10 = "Delta10"
    DELTA11 = "Delta11"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class DiagonalUnit:
    """``diag(i, j, k)`` with unit entries and ``i*j*k == 1``."""

    i: EisensteinInt
    j: EisensteinInt
    k: EisensteinInt

    def __post_init__(self):
        for name in ("i", "j", "k"):
            object.__setattr__(self, name, as_eisenstein(getattr(self, name)))
        if not (is_unit(self.i) and is_unit(self.j) and is_unit(self.k)):
            raise ValueError(f"diagonal entries must be units: {self}")
        if self.i * self.j * self.k != 1:
            raise ValueError(f"diagonal units must multiply to 1: {self}")

    @classmethod
    def identity(cls) -> DiagonalUnit:
        return cls(ONE, ONE, ONE)

    @classmethod
    def from_matrix(cls, m: Mat3) -> DiagonalUnit:
        if any(m[r, c] for r in range(3) for c in range(3) if r != c):
            raise ValueError(f"not diagonal: {m!r}")
        return cls(m[0, 0], m[1, 1], m[2, 2])

    @property
    def matrix(self) -> Mat3:
        return diag(self.i, self.j, self.k)


@dataclass(frozen=True)
class UnipotentMod3:
    """``[[1, alpha, beta], [0, 1, gamma], [0, 0, 1]]``, entries reduced mod 3."""

    alpha: EisensteinInt
    beta: EisensteinInt
    gamma: EisensteinInt

    def __post_init__(self):
        for name in ("alpha", "beta", "gamma"):
            value = as_eisenstein(getattr(self, name))
            if value not in _RESIDUES:
                raise ValueError(f"{name} = {value} is not in {{0,1,2}} + {{0,1,2}}w")
            object.__setattr__(self, name, value)

    @classmethod
    def identity(cls) -> UnipotentMod3:
        return cls(0, 0, 0)

    @classmethod
    def from_matrix(cls, m: Mat3) -> UnipotentMod3:
        if not m.is_upper_unipotent():
            raise ValueError(f"not upper unipotent: {m!r}")
        return cls(m[0, 1], m[0, 2], m[1, 2])

    @property
    def matrix(self) -> Mat3:
        return Mat3([[1, self.alpha, self.beta], [0, 1, self.gamma], [0, 0, 1]])


@dataclass(frozen=True)
class RightDecomposition:
    y1: YMatrix
    y2: YMatrix
    y3: YMatrix
    d: DiagonalUnit
    u: UnipotentMod3
    C: Mat3
    cell: CellTag

    def recompose(self) -> Mat3:
        return (
            phi2(self.y1.inverse())
            @ phi1(self.y2.inverse())
            @ phi2(self.y3.inverse())
            @ self.d.matrix
            @ self.u.matrix
            @ self.C
        )


@dataclass(frozen=True)
class LeftDecomposition:
    C: Mat3
    u: UnipotentMod3
    d: DiagonalUnit
    y3: YMatrix
    y2: YMatrix
    y1: YMatrix
    cell: CellTag

    def recompose(self) -> Mat3:
        return (
            self.C
            @ self.u.matrix
            @ self.d.matrix
            @ phi1(self.y3)
            @ phi2(self.y2)
            @ phi1(self.y1)
        )


def recompose(dec: RightDecomposition | LeftDecomposition) -> Mat3:
    return dec.recompose()


def _require_unimodular(A: Mat3) -> None:
    if A.det() != 1:
        raise NotUnimodularError(f"det = {A.det()}, expected 1")


def classify_cell(A: Mat3) -> CellTag:
    """Cell of ``A`` read off the first column and the (3,1) entry of lambda2(A)."""
    _require_unimodular(A)
    if A[1, 0] * A[2, 1] - A[1, 1] * A[2, 0]:
        return CellTag.DELTA11
    if A[1, 0] or A[2, 0]:
        return CellTag.DELTA10
    return CellTag.DELTA2


def left_cell(A: Mat3) -> CellTag:
    """Cell indexing the left form of ``A``, i.e. the cell of upsilon1(A)."""
    return classify_cell(upsilon1(A))


def _shape_cell(y2: Mat2, y3: Mat2) -> CellTag:
    if y2.is_identity():
        return CellTag.DELTA2
    if y3.is_identity():
        return CellTag.DELTA10
    return CellTag.DELTA11


def split_upper_unipotent(N: Mat3) -> tuple[UnipotentMod3, Mat3]:
    """Write an upper unipotent ``N`` as ``u @ C`` with u reduced mod 3.

    ``C`` lands in Gamma_inf(3) once the strictly-upper entries are reduced.
    """
    x, y, z = N[0, 1], N[0, 2], N[1, 2]
    alpha = mod3(x)
    gamma = mod3(z)
    beta = mod3(y - alpha * (z - gamma))
    C = Mat3([[1, x - alpha, y - alpha * (z - gamma) - beta], [0, 1, z - gamma], [0, 0, 1]])
    return UnipotentMod3(alpha, beta, gamma), C


def decompose_right(A: Mat3) -> RightDecomposition:
    _require_unimodular(A)

    # first column: clear (d, g), then (a, gcd(d, g))
    if A[1, 0] or A[2, 0]:
        y1, g1 = reduce_pair(A[1, 0], A[2, 0])
    else:
        y1, g1 = YMatrix.identity(), A[1, 0]
    B = phi2(y1) @ A
    y2, p = reduce_pair(B[0, 0], g1)
    B = phi1(y2) @ B
    if not is_unit(p):
        raise InternalConsistencyError(f"first column gcd {p} is not a unit")

    # second column below the diagonal
    y3, q = reduce_pair(B[1, 1], B[2, 1])
    T = phi2(y3) @ B
    r = T[2, 2]
    if T[1, 0] or T[2, 0] or T[2, 1] or p * q * r != 1:
        raise InternalConsistencyError(f"reduction did not triangularise: {T!r}")

    d = DiagonalUnit(p, q, r)
    N = diag(unit_inverse(p), unit_inverse(q), unit_inverse(r)) @ T
    u, C = split_upper_unipotent(N)
    if not in_gamma_inf3(C):
        raise InternalConsistencyError(f"unipotent remainder not in Gamma_inf(3): {C!r}")

    dec = RightDecomposition(y1, y2, y3, d, u, C, _shape_cell(y2, y3))
    if dec.cell != classify_cell(A):
        raise InternalConsistencyError(f"factor shape {dec.cell} disagrees with cell {classify_cell(A)}")
    return dec


def _split_upsilon_of_u(u: UnipotentMod3) -> tuple[Mat3, UnipotentMod3]:
    # upsilon1(u) = [[1, -z, y], [0, 1, -x], [0, 0, 1]] for u = [[1, x, y], [0, 1, z], ...];
    # split it as K @ L with K in Gamma_inf(3), L reduced mod 3
    x, y, z = u.alpha, u.beta, u.gamma
    L12, L13, L23 = mod3(-z), mod3(y), mod3(-x)
    m = _div3(-z - L12)
    n = _div3(y - L13)
    p = _div3(-x - L23)
    K = Mat3([[1, 3 * m, 3 * m * x + 9 * m * p + 3 * n], [0, 1, 3 * p], [0, 0, 1]])
    L = UnipotentMod3(L12, L13, L23)
    if not in_gamma_inf3(K) or K @ L.matrix != upsilon1(u.matrix):
        raise InternalConsistencyError(f"K L split failed for {u}")
    return K, L


def _div3(x: EisensteinInt) -> EisensteinInt:
    if x.a % 3 or x.b % 3:
        raise InternalConsistencyError(f"{x} is not divisible by 3")
    return EisensteinInt(x.a // 3, x.b // 3)


def decompose_left(A: Mat3) -> LeftDecomposition:
    _require_unimodular(A)
    right = decompose_right(upsilon1(A))
    K, L = _split_upsilon_of_u(right.u)
    d = DiagonalUnit.from_matrix(upsilon1(right.d.matrix))
    dec = LeftDecomposition(upsilon1(right.C) @ K, L, d, right.y3, right.y2, right.y1, right.cell)
    if dec.recompose() != A:
        raise InternalConsistencyError(f"left decomposition does not recompose to {A!r}")
    return dec


def factor_shape_ok(dec: RightDecomposition | LeftDecomposition) -> bool:
    """Whether the identity / non-identity pattern of the y's matches the cell."""
    if dec.cell is CellTag.DELTA2:
        return dec.y1.is_identity() and dec.y2.is_identity()
    if dec.cell is CellTag.DELTA10:
        return not dec.y2.is_identity() and dec.y3.is_identity()
    return not dec.y2.is_identity() and not dec.y3.is_identity()


def factors_canonical(dec: RightDecomposition | LeftDecomposition) -> bool:
    """Every factor lies in its declared set."""
    return (
        all(is_y_matrix(y) for y in (dec.y1, dec.y2, dec.y3))
        and in_gamma_inf3(dec.C)
        and factor_shape_ok(dec)
    )

"""Explicit orbit representatives for Gamma_inf(3) \\ Gamma(3).

Given a tuple satisfying I1-I4, ``representative`` builds a matrix ``X`` in
Gamma(3) whose invariants are exactly that tuple. Outside the degenerate
case A1 = B1 = A2 = 0 the matrix is ``X = V W`` with

    W = d phi1(y3) phi2(y2) phi1(y1),    V = W^-1 reduced entrywise mod 3,

so ``X = I3 . V . d . phi1(y3) phi2(y2) phi1(y1)`` is already its own left
decomposition.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .decompose import CellTag, DiagonalUnit, LeftDecomposition, UnipotentMod3, decompose_left
from .eisenstein import (
    EisensteinInt,
    exact_div,
    extended_gcd,
    gcd,
    is_unit,
    mod3,
    unit_inverse,
    unit_normalize,
)
from .gamma import (
    InternalConsistencyError,
    InvalidTupleError,
    InvariantTuple,
    check_conditions,
    in_gamma3,
    invariants,
)
from .matrices import Mat2, Mat3, lambda2, phi1, phi2
from .steinberg import YMatrix, y_from_bottom_row

__all__ = ["CaseTag", "CaseData", "case_of", "case_data", "closed_form_w", "representative"]


class CaseTag(str, enum.Enum):
    CASE1 = "Case1"
    CASE2 = "Case2"
    CASE3 = "Case3"
    CASE4 = "Case4"
    CASE5 = "Case5"

    def __str__(self) -> str:
        return self.value


def _validate(t: InvariantTuple) -> None:
    violated = check_conditions(t)
    if violated:
        raise InvalidTupleError(violated)


def case_of(t: InvariantTuple) -> CaseTag:
    _validate(t)
    if t.A1:
        return CaseTag.CASE1 if t.A2 else CaseTag.CASE2
    if t.B1:
        return CaseTag.CASE3 if t.A2 else CaseTag.CASE4
    if t.A2:
        raise InternalConsistencyError(f"A1 = B1 = 0 forces A2 = 0, got {t}")
    return CaseTag.CASE5


@dataclass(frozen=True)
class CaseData:
    """Everything the construction of W needs, for cases 1 to 4."""

    case: CaseTag
    y1: YMatrix
    y2: YMatrix
    y3: YMatrix
    alpha: EisensteinInt
    beta: EisensteinInt
    gamma: EisensteinInt

    @property
    def d(self) -> DiagonalUnit:
        return DiagonalUnit(self.gamma, self.beta, self.alpha)

    def W(self) -> Mat3:
        return self.d.matrix @ phi1(self.y3) @ phi2(self.y2) @ phi1(self.y1)


def case_data(t: InvariantTuple) -> CaseData:
    case = case_of(t)
    if case is CaseTag.CASE5:
        raise ValueError("case 5 tuples are not built from W = d phi1(y3) phi2(y2) phi1(y1)")
    A1, B1, C1, A2, B2, C2 = t

    # G: the associate of gcd(A1, B1) with A1 / G unit-normal (G = B1 when A1 = 0)
    if A1:
        g0 = gcd(A1, B1)
        y1, v = y_from_bottom_row(exact_div(A1, g0), exact_div(B1, g0))
        G = g0 * v
    else:
        y1, G = YMatrix.identity(), B1
    (p1, q1), _ = y1.rows

    alpha, r2 = unit_normalize(G)
    s2 = unit_inverse(alpha) * C1
    y2, v2 = y_from_bottom_row(r2, s2)
    if v2 != 1:
        raise InternalConsistencyError(f"r2 = {r2} was expected to be unit-normal")

    if A2:
        beta, r3 = unit_normalize(exact_div(A2, G))
        gamma = unit_inverse(alpha * beta)
        y3, v3 = y_from_bottom_row(r3, gamma * (p1 * C2 - q1 * B2))
        if v3 != 1:
            raise InternalConsistencyError(f"r3 = {r3} was expected to be unit-normal")
    else:
        ab = p1 * C2 - q1 * B2
        if not is_unit(ab):
            raise InternalConsistencyError(f"p1*C2 - q1*B2 = {ab} should be a unit when A2 = 0")
        beta = unit_inverse(alpha) * ab
        gamma = unit_inverse(ab)
        y3 = YMatrix.identity()

    return CaseData(case, y1, y2, y3, alpha, beta, gamma)


def closed_form_w(data: CaseData) -> Mat3:
    """W written out entry by entry in terms of the y's and the units."""
    (p1, q1), (r1, s1) = data.y1.rows
    (p2, q2), (r2, s2) = data.y2.rows
    (p3, q3), (r3, s3) = data.y3.rows
    al, be, ga = data.alpha, data.beta, data.gamma
    return Mat3(
        [
            [ga * (p1 * p3 + p2 * q3 * r1), ga * (p2 * q3 * s1 + p3 * q1), ga * q2 * q3],
            [be * (p1 * r3 + p2 * r1 * s3), be * (p2 * s1 * s3 + q1 * r3), be * q2 * s3],
            [al * r1 * r2, al * r2 * s1, al * s2],
        ]
    )


def _case5(t: InvariantTuple) -> Mat3:
    B2, C2 = t.B2, t.C2
    if t.C1 != 1:
        raise InternalConsistencyError(f"C1 must be 1 when A1 = B1 = 0, got {t.C1}")
    g, a, b = extended_gcd(C2, -B2)
    if g != 1:
        raise InternalConsistencyError(f"gcd(B2, C2) = {g}, expected 1")
    return phi1(Mat2([[a - b * B2, b - b * C2], [B2, C2]]))


def representative(t: InvariantTuple) -> tuple[Mat3, LeftDecomposition]:
    """Build ``X`` in Gamma(3) with ``invariants(X) == t`` and its left form."""
    case = case_of(t)
    if case is CaseTag.CASE5:
        X = _case5(t)
        dec = decompose_left(X)
    else:
        data = case_data(t)
        W = data.W()
        V = W.inverse().map(mod3)
        u = UnipotentMod3.from_matrix(V)
        X = V @ W
        cell = CellTag.DELTA11 if case in (CaseTag.CASE1, CaseTag.CASE3) else CellTag.DELTA10
        dec = LeftDecomposition(Mat3.identity(), u, data.d, data.y3, data.y2, data.y1, cell)
        if W.row(2) != (t.A1, t.B1, t.C1) or lambda2(W).row(2) != (t.A2, t.B2, t.C2):
            raise InternalConsistencyError(f"W does not carry the invariants {t}")

    if not in_gamma3(X) or invariants(X) != t:
        raise InternalConsistencyError(f"representative of {t} failed its self-check")
    if dec.recompose() != X:
        raise InternalConsistencyError("representative decomposition does not recompose")
    return X, dec


"""Exact 2x2 and 3x3 matrices over Z[w].

Besides products and determinants this provides the compound matrix
``lambda2`` (all 2x2 minors, in the fixed row/column order used for the
orbit invariants), the first adjugate ``upsilon1``, the involution ``iota``
and the block embeddings ``phi1`` / ``phi2`` of SL2 into SL3.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .eisenstein import ONE, ZERO, EisensteinInt, as_eisenstein

__all__ = [
    "Mat2",
    "Mat3",
    "NotUnimodularError",
    "identity2",
    "identity3",
    "diag",
    "lambda2",
    "upsilon1",
    "iota",
    "phi1",
    "phi2",
]


class NotUnimodularError(ValueError):
    """Raised when an operation needs a determinant-one matrix."""


class _SquareMatrix:
    n = 0
    __slots__ = ("_rows",)

    def __init__(self, rows: Iterable[Iterable]) -> None:
        rows = tuple(tuple(as_eisenstein(x) for x in row) for row in rows)
        if len(rows) != self.n or any(len(r) != self.n for r in rows):
            raise ValueError(f"expected a {self.n}x{self.n} array, got {rows!r}")
        self._rows = rows

    @classmethod
    def identity(cls):
        return cls([[ONE if i == j else ZERO for j in range(cls.n)] for i in range(cls.n)])

    @property
    def rows(self) -> tuple[tuple[EisensteinInt, ...], ...]:
        return self._rows

    def __getitem__(self, ij: tuple[int, int]) -> EisensteinInt:
        i, j = ij
        return self._rows[i][j]

    def row(self, i: int) -> tuple[EisensteinInt, ...]:
        return self._rows[i]

    def column(self, j: int) -> tuple[EisensteinInt, ...]:
        return tuple(r[j] for r in self._rows)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, _SquareMatrix):
            return self.n == other.n and self._rows == other._rows
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.n, self._rows))

    def __repr__(self) -> str:
        body = ", ".join("[" + ", ".join(str(x) for x in r) + "]" for r in self._rows)
        return f"{type(self).__name__}([{body}])"

    def _plain(self, rows):
        return (Mat2 if self.n == 2 else Mat3)(rows)

    def __matmul__(self, other):
        if not isinstance(other, _SquareMatrix):
            return NotImplemented
        if other.n != self.n:
            raise ValueError("dimension mismatch")
        cols = list(zip(*other._rows))
        return self._plain(
            [[sum((x * y for x, y in zip(r, c)), ZERO) for c in cols] for r in self._rows]
        )

    def scale(self, k) -> _SquareMatrix:
        k = as_eisenstein(k)
        return self._plain([[k * x for x in r] for r in self._rows])

    def __add__(self, other):
        if not isinstance(other, _SquareMatrix) or other.n != self.n:
            return NotImplemented
        return self._plain(
            [[x + y for x, y in zip(r, s)] for r, s in zip(self._rows, other._rows)]
        )

    def __sub__(self, other):
        if not isinstance(other, _SquareMatrix) or other.n != self.n:
            return NotImplemented
        return self._plain(
            [[x - y for x, y in zip(r, s)] for r, s in zip(self._rows, other._rows)]
        )

    def __neg__(self):
        return self._plain([[-x for x in r] for r in self._rows])

    def transpose(self):
        return self._plain(list(zip(*self._rows)))

    def map(self, f):
        """Apply ``f`` entrywise."""
        return self._plain([[f(x) for x in r] for r in self._rows])

    def is_identity(self) -> bool:
        return all(
            self._rows[i][j] == (1 if i == j else 0) for i in range(self.n) for j in range(self.n)
        )

    def is_upper_unipotent(self) -> bool:
        return all(
            self._rows[i][j] == (1 if i == j else 0)
            for i in range(self.n)
            for j in range(i + 1)
        )

    def __iter__(self):
        return iter(self._rows)


class Mat2(_SquareMatrix):
    """A 2x2 matrix ``[[p, q], [r, s]]`` over Z[w]."""

    n = 2
    __slots__ = ()

    def det(self) -> EisensteinInt:
        (p, q), (r, s) = self._rows
        return p * s - q * r

    def inverse(self) -> Mat2:
        if self.det() != 1:
            raise NotUnimodularError(f"det = {self.det()}, expected 1")
        (p, q), (r, s) = self._rows
        return Mat2([[s, -q], [-r, p]])


class Mat3(_SquareMatrix):
    n = 3
    __slots__ = ()

    def det(self) -> EisensteinInt:
        (a, b, c), (d, e, f), (g, h, i) = self._rows
        return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)

    def adjugate(self) -> Mat3:
        """Transpose of the cofactor matrix, so ``A @ adj(A) = det(A) I``."""
        (a, b, c), (d, e, f), (g, h, i) = self._rows
        return Mat3(
            [
                [e * i - f * h, c * h - b * i, b * f - c * e],
                [f * g - d * i, a * i - c * g, c * d - a * f],
                [d * h - e * g, b * g - a * h, a * e - b * d],
            ]
        )

    def inverse(self) -> Mat3:
        if self.det() != 1:
            raise NotUnimodularError(f"det = {self.det()}, expected 1")
        return self.adjugate()


def identity2() -> Mat2:
    return Mat2.identity()


def identity3() -> Mat3:
    return Mat3.identity()


def diag(*entries) -> Mat2 | Mat3:
    n = len(entries)
    cls = {2: Mat2, 3: Mat3}[n]
    return cls([[entries[i] if i == j else 0 for j in range(n)] for i in range(n)])


def lambda2(A: Mat3) -> Mat3:
    """Second compound matrix of ``A``.

    Rows are indexed by the row pairs (1,2), (1,3), (2,3) and columns by the
    column pairs (1,2), (1,3), (2,3); the bottom row holds the Lambda^2
    invariants.
    """
    (a, b, c), (d, e, f), (g, h, i) = A.rows
    return Mat3(
        [
            [a * e - b * d, a * f - c * d, b * f - e * c],
            [a * h - b * g, a * i - c * g, b * i - h * c],
            [d * h - e * g, d * i - f * g, e * i - f * h],
        ]
    )


def upsilon1(A: Mat3) -> Mat3:
    """First adjugate: ``lambda2(A) @ upsilon1(A) == det(A) * I``."""
    (a, b, c), (d, e, f), (g, h, i) = A.rows
    return Mat3([[i, -f, c], [-h, e, -b], [g, -d, a]])


_J = Mat3([[0, 0, 1], [0, 1, 0], [1, 0, 0]])


def iota(A: Mat3) -> Mat3:
    """The involution ``J (A^-1)^T J``, J the antidiagonal permutation."""
    return _J @ A.inverse().transpose() @ _J


def phi1(y: Mat2) -> Mat3:
    """Embed ``y`` in the upper-left 2x2 block."""
    (p, q), (r, s) = y.rows
    return Mat3([[p, q, 0], [r, s, 0], [0, 0, 1]])


def phi2(y: Mat2) -> Mat3:
    """Embed ``y`` in the lower-right 2x2 block."""
    (p, q), (r, s) = y.rows
    return Mat3([[1, 0, 0], [0, p, q], [0, r, s]])


def as_mat3(rows: Sequence[Sequence]) -> Mat3:
    return rows if isinstance(rows, Mat3) else Mat3(rows)

"""The congruence subgroup Gamma(3) of SL3(Z[w]) and its orbit invariants.

For ``A`` in Gamma(3) the invariants are the bottom row of ``A`` and the
bottom row of ``lambda2(A)``. Two matrices lie in the same left
Gamma_inf(3)-orbit exactly when their invariants agree.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, fields

from .eisenstein import EisensteinInt, as_eisenstein, divides, gcd_many
from .matrices import Mat3, lambda2

__all__ = [
    "InvariantTuple",
    "NotInGamma3Error",
    "InvalidTupleError",
    "InternalConsistencyError",
    "congruent_mod3",
    "in_gamma3",
    "in_gamma_inf3",
    "gamma3_violations",
    "invariants",
    "check_conditions",
    "same_orbit",
    "elementary",
    "random_element",
    "random_gamma3",
    "random_gamma_inf3",
]


class NotInGamma3Error(ValueError):
    pass


class InvalidTupleError(ValueError):
    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("invariant conditions violated: " + ", ".join(self.violations))


class InternalConsistencyError(RuntimeError):
    """Two computations that must agree did not; indicates a bug."""


@dataclass(frozen=True)
class InvariantTuple:
    A1: EisensteinInt
    B1: EisensteinInt
    C1: EisensteinInt
    A2: EisensteinInt
    B2: EisensteinInt
    C2: EisensteinInt

    def __post_init__(self):
        for f in fields(self):
            object.__setattr__(self, f.name, as_eisenstein(getattr(self, f.name)))

    @classmethod
    def from_sequence(cls, values) -> InvariantTuple:
        values = list(values)
        if len(values) != 6:
            raise ValueError(f"an invariant tuple has 6 entries, got {len(values)}")
        return cls(*values)

    def as_tuple(self) -> tuple[EisensteinInt, ...]:
        return (self.A1, self.B1, self.C1, self.A2, self.B2, self.C2)

    def __iter__(self):
        return iter(self.as_tuple())

    def __str__(self) -> str:
        return "(" + ", ".join(str(x) for x in self) + ")"


def congruent_mod3(x, y) -> bool:
    return divides(3, as_eisenstein(x) - as_eisenstein(y))


def gamma3_violations(A: Mat3) -> list[str]:
    """Human-readable reasons ``A`` fails to be in Gamma(3); empty if it is."""
    problems = []
    det = A.det()
    if det != 1:
        problems.append(f"det = {det}, expected 1")
    for i in range(3):
        for j in range(3):
            target = 1 if i == j else 0
            if not congruent_mod3(A[i, j], target):
                problems.append(f"entry ({i + 1},{j + 1}) = {A[i, j]} is not congruent to {target} mod 3")
    return problems


def in_gamma3(A: Mat3) -> bool:
    return not gamma3_violations(A)


def in_gamma_inf3(A: Mat3) -> bool:
    return A.is_upper_unipotent() and in_gamma3(A)


def invariants(A: Mat3) -> InvariantTuple:
    problems = gamma3_violations(A)
    if problems:
        raise NotInGamma3Error("; ".join(problems))
    return InvariantTuple(*A.row(2), *lambda2(A).row(2))


def check_conditions(t: InvariantTuple) -> list[str]:
    """Labels of the violated conditions among I1-I4."""
    A1, B1, C1, A2, B2, C2 = t
    violated = []
    if not all(divides(3, x) for x in (A1, A2, B1, B2)):
        violated.append("I1")
    if not (congruent_mod3(C1, 1) and congruent_mod3(C2, 1)):
        violated.append("I2")
    if gcd_many(A1, B1, C1) != 1 or gcd_many(A2, B2, C2) != 1:
        violated.append("I3")
    if A1 * C2 - B1 * B2 + C1 * A2:
        violated.append("I4")
    return violated


def same_orbit(A: Mat3, B: Mat3) -> bool:
    """Whether ``Gamma_inf(3) A == Gamma_inf(3) B``.

    Computed both from the invariants and from ``B A^-1``; a disagreement
    raises InternalConsistencyError.
    """
    by_invariants = invariants(A) == invariants(B)
    by_quotient = in_gamma_inf3(B @ A.inverse())
    if by_invariants != by_quotient:
        raise InternalConsistencyError(
            f"orbit tests disagree for {A!r} and {B!r}: "
            f"invariants say {by_invariants}, B A^-1 says {by_quotient}"
        )
    return by_invariants


def elementary(i: int, j: int, t) -> Mat3:
    """``I + t e_ij`` (0-based indices, i != j)."""
    if i == j:
        raise ValueError("elementary matrices need i != j")
    rows = [[1 if r == c else 0 for c in range(3)] for r in range(3)]
    rows[i][j] = t
    return Mat3(rows)


_OFF_DIAGONAL = [(i, j) for i in range(3) for j in range(3) if i != j]


def random_element(rng: random.Random, bound: int = 2) -> EisensteinInt:
    return EisensteinInt(rng.randint(-bound, bound), rng.randint(-bound, bound))


def random_gamma3(rng: random.Random, max_length: int = 12, positions=None, bound: int = 2):
    """A random word in the generators ``I + 3t e_ij``.

    Returns ``(matrix, word)`` where ``word`` lists ``(i, j, t)`` triples so
    the sample can be replayed. ``positions`` restricts the (i, j) used.
    """
    positions = positions or _OFF_DIAGONAL
    length = rng.randint(0, max_length)
    word = []
    M = Mat3.identity()
    for _ in range(length):
        i, j = rng.choice(positions)
        t = random_element(rng, bound)
        word.append((i, j, t))
        M = M @ elementary(i, j, 3 * t)
    return M, word


def random_gamma_inf3(rng: random.Random, bound: int = 3) -> Mat3:
    x, y, z = (3 * random_element(rng, bound) for _ in range(3))
    return Mat3([[1, x, y], [0, 1, z], [0, 0, 1]])

import random

import pytest

from eisenorbit.eisenstein import EisensteinInt as E, parse
from eisenorbit.gamma import (
    InternalConsistencyError,
    InvariantTuple,
    NotInGamma3Error,
    check_conditions,
    elementary,
    gamma3_violations,
    in_gamma3,
    in_gamma_inf3,
    invariants,
    random_gamma3,
    random_gamma_inf3,
    same_orbit,
)
from eisenorbit.matrices import Mat3, identity3
from oracles import corpus

A_EX = Mat3([[4, -3, -12], [-3, 4, 15], [-6, 3, 13]])
X_GOLDEN = Mat3(
    [
        [parse("-11-3w"), parse("-3-3w"), parse("-3w")],
        [parse("-24-33w"), parse("-2-12w"), parse("12+3w")],
        [parse("-3+6w"), -3, parse("-2-3w")],
    ]
)
T_GOLDEN = InvariantTuple(
    parse("-3+6w"), -3, parse("-2-3w"), parse("-6+3w"), parse("3-6w"), parse("4+3w")
)


@pytest.fixture(scope="module")
def matrices():
    return [m for m, _ in corpus()]


def test_membership_examples():
    assert in_gamma3(identity3()) and in_gamma_inf3(identity3())
    assert in_gamma3(A_EX) and not in_gamma_inf3(A_EX)
    e = elementary(0, 1, 3)
    assert in_gamma3(e) and in_gamma_inf3(e)
    assert not in_gamma3(elementary(0, 1, 1))
    assert not in_gamma_inf3(elementary(1, 0, 3))


def test_violation_messages_name_the_entry():
    problems = gamma3_violations(elementary(1, 2, 1))
    assert problems == ["entry (2,3) = 1+0*w is not congruent to 0 mod 3"]
    assert any("det" in p for p in gamma3_violations(Mat3([[4, 0, 0], [0, 1, 0], [0, 0, 1]])))


def test_invariants_examples():
    assert invariants(identity3()).as_tuple() == (0, 0, 1, 0, 0, 1)
    assert invariants(A_EX).as_tuple() == (-6, 3, 13, 15, 51, 7)
    assert invariants(X_GOLDEN) == T_GOLDEN
    with pytest.raises(NotInGamma3Error):
        invariants(elementary(0, 1, 1))


def test_check_conditions_examples():
    assert check_conditions(InvariantTuple(0, 0, 1, 0, 0, 1)) == []
    assert check_conditions(T_GOLDEN) == []
    assert check_conditions(invariants(A_EX)) == []
    # (1, 0, 1, 0, 0, 1) fails I1, and since 1*1 - 0 + 0 = 1 it also fails I4
    assert check_conditions(InvariantTuple(1, 0, 1, 0, 0, 1)) == ["I1", "I4"]
    assert check_conditions(InvariantTuple(3, 3, 1, 3, 3, 1)) == ["I4"]
    assert check_conditions(InvariantTuple(0, 0, 2, 0, 0, 1)) == ["I2", "I3"]
    assert check_conditions(InvariantTuple(0, 0, 4, 0, 0, 1)) == ["I3"]


def test_tuple_type():
    t = InvariantTuple.from_sequence([0, 0, 1, 0, 0, 1])
    assert list(t) == [0, 0, 1, 0, 0, 1]
    assert str(t) == "(0+0*w, 0+0*w, 1+0*w, 0+0*w, 0+0*w, 1+0*w)"
    with pytest.raises(ValueError):
        InvariantTuple.from_sequence([0, 0, 1])


def test_conditions_hold_on_corpus(matrices):
    for A in matrices:
        assert check_conditions(invariants(A)) == []


def test_i4_is_a_laplace_identity():
    rng = random.Random(2)
    for _ in range(300):
        rows = [[E(rng.randint(-9, 9), rng.randint(-9, 9)) for _ in range(3)] for _ in range(3)]
        (a, b, c), (d, e, f), (g, h, i) = rows
        A1, B1, C1 = g, h, i
        A2, B2, C2 = d * h - e * g, d * i - f * g, e * i - f * h
        assert A1 * C2 - B1 * B2 + C1 * A2 == 0


def test_left_multiplication_invariance(matrices):
    rng = random.Random(4)
    for A in matrices:
        C = random_gamma_inf3(rng)
        assert in_gamma_inf3(C)
        assert invariants(C @ A) == invariants(A)
        assert same_orbit(C @ A, A)


def test_same_orbit_examples():
    assert same_orbit(A_EX, A_EX)
    assert not same_orbit(identity3(), X_GOLDEN)
    assert not same_orbit(A_EX, X_GOLDEN)


def test_same_orbit_distinct_invariants(matrices):
    rng = random.Random(8)
    checked = 0
    while checked < 200:
        A, B = rng.choice(matrices), rng.choice(matrices)
        if invariants(A) == invariants(B):
            continue
        assert same_orbit(A, B) is False
        checked += 1


def test_same_orbit_raises_on_disagreement(monkeypatch):
    import eisenorbit.gamma as g

    monkeypatch.setattr(g, "in_gamma_inf3", lambda A: False)
    with pytest.raises(InternalConsistencyError):
        g.same_orbit(A_EX, A_EX)


def test_random_gamma3_replays():
    rng = random.Random(99)
    M, word = random_gamma3(rng)
    replay = identity3()
    for i, j, t in word:
        replay = replay @ elementary(i, j, 3 * t)
    assert replay == M and in_gamma3(M)

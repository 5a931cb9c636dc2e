import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dunwoody import perm
from dunwoody.errors import DomainError, EnumerationTooLarge
from dunwoody.perm import (
    IDENTITY,
    SHIFT,
    TRANSPOSITION,
    ShiftedPermutation,
    apply,
    compose,
    enumerate_H_i,
    in_H_i,
    inverse,
    support,
    transposition,
)

from helpers import random_shifted

t2 = transposition(-2, -1)
s2 = transposition(-3, -2)


def test_apply_examples():
    assert apply(SHIFT, 0) == 1
    assert apply(TRANSPOSITION, 0) == 1
    assert apply(transposition(-3, -2), -3) == -2


def test_compose_examples():
    assert compose(TRANSPOSITION, TRANSPOSITION) == IDENTITY
    # frozen from the pointwise oracle on [-10, 10]
    assert compose(compose(SHIFT, TRANSPOSITION), inverse(SHIFT)) == ShiftedPermutation.from_mapping({1: 2, 2: 1})
    three_cycle = ShiftedPermutation.from_mapping({-3: -1, -1: -2, -2: -3})
    assert compose(t2, s2) == three_cycle
    assert str(three_cycle) == "(-3 -1 -2)"


def test_inverse_examples():
    assert inverse(IDENTITY) == IDENTITY
    assert inverse(SHIFT) == ShiftedPermutation(-1)
    assert inverse(ShiftedPermutation.cycle(-3, -1, -2)) == ShiftedPermutation.cycle(-3, -2, -1)


def test_support_examples():
    assert support(t2) == {-2, -1}
    assert support(IDENTITY) == frozenset()
    assert support(compose(t2, s2)) == {-3, -2, -1}
    with pytest.raises(DomainError, match="infinite support"):
        support(SHIFT)


def test_in_H_i_examples():
    assert in_H_i(TRANSPOSITION, 1)
    assert not in_H_i(SHIFT, 5)
    assert not in_H_i(s2, 2)
    assert in_H_i(s2, 3)


@pytest.mark.parametrize("i, count", [(0, 1), (1, 6), (2, 120), (3, 5040)])
def test_enumerate_H_i_counts(i, count):
    elems = list(enumerate_H_i(i))
    assert len(elems) == count
    assert len(set(elems)) == count
    assert all(in_H_i(h, i) for h in elems)


def test_enumerate_H_0_is_identity():
    assert list(enumerate_H_i(0)) == [IDENTITY]


def test_enumeration_cap():
    with pytest.raises(EnumerationTooLarge):
        enumerate_H_i(4)
    assert sum(1 for _ in enumerate_H_i(4, cap=4)) == 362880


def test_canonical_form_drops_fixed_points():
    a = ShiftedPermutation.from_mapping({0: 1, 1: 0, 5: 5})
    assert a == TRANSPOSITION
    assert a.finite_part.pairs == ((0, 1), (1, 0))


def test_from_mapping_rejects_non_bijection():
    with pytest.raises(DomainError):
        ShiftedPermutation.from_mapping({0: 1, 1: 1})
    with pytest.raises(DomainError):
        ShiftedPermutation.from_mapping({0: 1})


def test_group_axioms_sampled():
    rng = random.Random(1)
    for _ in range(10_000):
        a, b, c = (random_shifted(rng) for _ in range(3))
        assert compose(compose(a, b), c) == compose(a, compose(b, c))
        assert compose(a, IDENTITY) == a == compose(IDENTITY, a)
        assert compose(a, inverse(a)) == IDENTITY == compose(inverse(a), a)


def test_compose_is_pointwise_sampled():
    rng = random.Random(2)
    for _ in range(2_000):
        a, b = random_shifted(rng), random_shifted(rng)
        ab = compose(a, b)
        for j in range(-20, 21):
            assert apply(ab, j) == apply(a, apply(b, j))


def test_H_omega_closed():
    rng = random.Random(3)
    for _ in range(200):
        h = random_shifted(rng, max_shift=0)
        for g in enumerate_H_i(2):
            assert compose(g, h).shift == 0


@pytest.mark.parametrize("j", range(-10, 11))
def test_shift_conjugation_translates(j):
    assert compose(compose(SHIFT, transposition(j, j + 1)), inverse(SHIFT)) == transposition(j + 1, j + 2)


def test_generators_reach_window():
    # (j j+1) = s^j (0 1) s^-j, so H contains every finitary permutation
    for j in range(-5, 5):
        conj = compose(compose(perm.shift(j), TRANSPOSITION), perm.shift(-j))
        assert conj == transposition(j, j + 1)


@st.composite
def shifted(draw):
    pts = draw(st.lists(st.integers(-6, 6), unique=True, max_size=8))
    image = draw(st.permutations(pts))
    return ShiftedPermutation.from_mapping(dict(zip(pts, image)), draw(st.integers(-4, 4)))


@settings(max_examples=300)
@given(shifted(), shifted(), st.integers(-30, 30))
def test_compose_pointwise_property(a, b, j):
    assert apply(compose(a, b), j) == apply(a, apply(b, j))


@settings(max_examples=300)
@given(shifted())
def test_equality_is_structural(a):
    b = ShiftedPermutation.from_mapping(a.finite_part.as_dict(), a.shift)
    assert a == b and hash(a) == hash(b)
    assert (a == IDENTITY) == all(apply(a, j) == j for j in range(-40, 41))

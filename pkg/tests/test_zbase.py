from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from derived_lie.abgroup import FgAbGroup, GradedAbGroup, Z
from derived_lie.errors import UnsupportedDegree
from derived_lie.oracle import simplicial_derived
from derived_lie.zbase import lie_z, prime_power, superlie_z


def vector_space(p: int, degrees: dict[int, int]) -> GradedAbGroup:
    return GradedAbGroup({d: FgAbGroup(0, (p,) * k) for d, k in degrees.items()})


def test_lie_8_2():
    expected = {6: 2, 8: 2, 9: 2} | {d: 1 for d in (5, 7, 10, 11, 12, 13, 15)}
    assert lie_z(8, 2) == vector_space(2, expected)


def test_lie_9_2():
    assert lie_z(9, 2) == vector_space(3, {d: 1 for d in (8, 9, 12, 13, 17)})


def test_superlie_9_2():
    assert superlie_z(9, 2) == vector_space(3, {4: 1, 5: 1, 9: 1})


@pytest.mark.parametrize("m", [6, 10, 12])
@pytest.mark.parametrize("n", [2, 4, 6])
def test_non_prime_power_vanishes_in_even_dims(m, n):
    assert lie_z(m, n).is_zero()


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_superlie_16_equals_lie_16(n):
    assert superlie_z(16, n) == lie_z(16, n)


def test_superlie_3_2_by_two_routes():
    # decalage: L^3 on Z[3] is the super-Lie functor on Z[2] raised by 3
    assert superlie_z(3, 2) == lie_z(3, 3).shift(-3)
    assert superlie_z(3, 2) == vector_space(3, {3: 1})


def test_literal_reading_moves_odd_prime_words():
    assert superlie_z(9, 2, literal=True) == superlie_z(9, 2).shift(8)


def test_weight_one():
    assert lie_z(1, 5) == GradedAbGroup.concentrated(5, Z)
    assert superlie_z(1, 0) == GradedAbGroup.concentrated(0, Z)


def test_degree_zero():
    assert lie_z(4, 0).is_zero()
    assert superlie_z(2, 0) == GradedAbGroup.concentrated(0, Z)


@pytest.mark.parametrize("n", [0, 1, 2])
def test_quadratic_case_matches_simplicial_model(n):
    assert lie_z(2, n) == simplicial_derived("Lambda2", 0, n, cap=6)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([2, 3, 4, 5, 8, 9]), st.integers(1, 4), st.integers(0, 30))
def test_degree_cap_is_a_truncation(m, n, cap):
    assert lie_z(m, n, cap) == lie_z(m, n).truncate(hi=cap)


@settings(max_examples=30, deadline=None)
@given(st.sampled_from([3, 5, 9, 25, 27]), st.sampled_from([2, 4]))
def test_odd_suspension(m, n):
    # odd weight: the next odd dimension is a plain suspension
    assert lie_z(m, n + 1) == lie_z(m, n).shift(1)


@pytest.mark.parametrize("m, expected", [(8, (2, 3)), (9, (3, 2)), (6, None), (1, None), (7, (7, 1))])
def test_prime_power(m, expected):
    assert prime_power(m) == expected


def test_only_p_torsion_for_prime_powers():
    for m, p in ((4, 2), (9, 3), (5, 5), (25, 5)):
        g = lie_z(m, 2)
        assert g
        assert all(grp.primes() == [p] for _, grp in g.items())


def test_unsupported_super_degree():
    with pytest.raises(UnsupportedDegree):
        superlie_z(12, 2)


def test_bad_input():
    with pytest.raises(ValueError):
        lie_z(0, 2)

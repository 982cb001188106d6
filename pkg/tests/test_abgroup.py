from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from derived_lie.abgroup import (
    ChainComplex,
    FgAbGroup,
    GradedAbGroup,
    IntMatrix,
    NotPrimeError,
    Z,
    direct_sum,
    ext,
    graded_homology,
    hom,
    homology,
    mod_p,
    p_part,
    smith_normal_form,
    tensor,
    tor,
)

small_ints = st.integers(min_value=-6, max_value=6)


def matrices(max_dim: int = 4):
    return st.integers(1, max_dim).flatmap(
        lambda r: st.integers(1, max_dim).flatmap(
            lambda c: st.lists(st.lists(small_ints, min_size=c, max_size=c), min_size=r, max_size=r)
        )
    )


def cyclic(n: int) -> FgAbGroup:
    return FgAbGroup.cyclic(n)


def test_snf_example():
    m = IntMatrix.from_rows([[2, 4], [6, 8]])
    d, u, v = smith_normal_form(m)
    assert d.to_lists() == [[2, 0], [0, 4]]
    assert (u @ m @ v).to_lists() == d.to_lists()


@pytest.mark.parametrize(
    "rows, diag",
    [
        ([[1, 0, 0], [0, 1, 0], [0, 0, 1]], [1, 1, 1]),
        ([[0, 0, 0], [0, 0, 0]], []),
        ([[6]], [6]),
        ([[4, 6]], [2]),
    ],
)
def test_snf_small(rows, diag):
    d, _, _ = smith_normal_form(IntMatrix.from_rows(rows))
    got = [d.entries[i][i] for i in range(min(d.rows, d.cols)) if d.entries[i][i]]
    assert got == diag


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_snf_is_a_unimodular_diagonalisation(rows):
    m = IntMatrix.from_rows(rows)
    d, u, v = smith_normal_form(m)
    assert (u @ m @ v).to_lists() == d.to_lists()
    diag = [d.entries[i][i] for i in range(min(d.rows, d.cols))]
    nonzero = [x for x in diag if x]
    assert all(x > 0 for x in nonzero)
    assert all(b % a == 0 for a, b in zip(nonzero, nonzero[1:]))
    # off-diagonal entries vanish
    assert all(d.entries[i][j] == 0 for i in range(d.rows) for j in range(d.cols) if i != j)
    # unimodularity: U and V have SNF equal to the identity
    for w in (u, v):
        dw, _, _ = smith_normal_form(w)
        assert [dw.entries[i][i] for i in range(dw.rows)] == [1] * dw.rows


def _one_map(k: int) -> ChainComplex:
    return ChainComplex({0: 1, 1: 1}, {1: IntMatrix.from_rows([[k]])})


def test_one_map_complex():
    c = _one_map(3)
    assert homology(c, 1) == FgAbGroup()
    assert homology(c, 0) == cyclic(3)


def test_acyclic_complex():
    assert graded_homology(_one_map(1)).is_zero()


@pytest.mark.parametrize("k", [1, 2, 3, 5])
def test_two_step_complex(k):
    # Z --(0,2k)--> Z^2 --(k,0)--> Z, shifted up by one
    c = ChainComplex(
        {1: 1, 2: 2, 3: 1},
        {3: IntMatrix.from_rows([[0], [2 * k]]), 2: IntMatrix.from_rows([[k, 0]])},
    )
    assert homology(c, 2) == cyclic(2 * k)
    assert homology(c, 1) == cyclic(k)
    assert homology(c, 3) == FgAbGroup()


def test_complex_rejects_nonzero_composite():
    with pytest.raises(ValueError):
        ChainComplex({0: 1, 1: 1, 2: 1}, {2: IntMatrix.from_rows([[1]]), 1: IntMatrix.from_rows([[1]])})


def test_group_arithmetic_examples():
    assert tensor(cyclic(4), cyclic(6)) == cyclic(2)
    assert tor(Z * 2, cyclic(7)) == FgAbGroup()
    assert p_part(FgAbGroup.from_orders([0, 12]), 3) == cyclic(3)
    assert mod_p(FgAbGroup.from_orders([0, 4, 3]), 2) == FgAbGroup.from_orders([2, 2])
    assert direct_sum([cyclic(2), Z, cyclic(3)]) == FgAbGroup.from_orders([0, 6])


def test_canonical_form():
    g = FgAbGroup.from_orders([12, 18, 0])
    assert g.free_rank == 1
    assert g.torsion == (2, 4, 3, 9)
    assert g.invariant_factors() == [6, 36]
    assert str(FgAbGroup.from_orders([2, 2, 3])) == "(Z/2)^2 + Z/3"


def test_not_prime():
    with pytest.raises(NotPrimeError):
        p_part(cyclic(4), 4)


def test_prime_power_validation():
    with pytest.raises(ValueError):
        FgAbGroup(0, (6,))
    with pytest.raises(ValueError):
        FgAbGroup(-1)


orders = st.lists(st.sampled_from([0, 2, 3, 4, 5, 6, 8, 9, 12, 27]), max_size=4)


@settings(max_examples=80, deadline=None)
@given(orders, orders)
def test_tensor_tor_hom_ext_symmetries(a, b):
    g, h = FgAbGroup.from_orders(a), FgAbGroup.from_orders(b)
    assert tensor(g, h) == tensor(h, g)
    assert tor(g, h) == tor(h, g)
    # for finite groups Hom and Ext are both (non-canonically) the tensor/Tor groups
    if not g.free_rank and not h.free_rank:
        assert hom(g, h) == tor(g, h)
        assert ext(g, h) == tensor(g, h)


@settings(max_examples=60, deadline=None)
@given(orders, orders, orders)
def test_tensor_distributes(a, b, c):
    g, h, k = (FgAbGroup.from_orders(x) for x in (a, b, c))
    assert tensor(g, h + k) == tensor(g, h) + tensor(g, k)


def test_tensor_against_presentation():
    # Z/m (x) Z/n is presented by the 1x2 matrix [m n]
    for m in range(1, 13):
        for n in range(1, 13):
            d, _, _ = smith_normal_form(IntMatrix.from_rows([[m, n]]))
            assert tensor(cyclic(m), cyclic(n)) == cyclic(d.entries[0][0])


def test_graded_group_behaviour():
    g = GradedAbGroup({1: cyclic(2), 2: FgAbGroup(), 3: Z})
    assert g.degrees() == [1, 3]
    assert g.shift(2)[5] == Z
    assert (g + g)[1] == FgAbGroup.from_orders([2, 2])
    assert g.derived_mod_p(2) == GradedAbGroup({1: cyclic(2), 2: cyclic(2), 3: cyclic(2)})
    assert g.p_part(2) == GradedAbGroup({1: cyclic(2)})

from __future__ import annotations

import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from derived_lie.abgroup import FgAbGroup
from derived_lie.curtis import (
    FREE,
    CellDiff,
    Unavailable,
    barratt_sequence,
    bifunctor_e1,
    e1_page,
)


@pytest.fixture(scope="module")
def srp2_page():
    return e1_page(FgAbGroup.cyclic(2), 2, range(1, 9), 8)


@pytest.mark.parametrize(
    "cell, text", [((1, 1), "Z/2"), ((2, 2), "Z/4"), ((4, 6), "Z/4"), ((8, 7), "(Z/2)^4"), ((1, 0), "0")]
)
def test_suspended_projective_plane(srp2_page, cell, text):
    assert srp2_page.render_cell(*cell) == text


@settings(max_examples=15, deadline=None)
@given(st.sampled_from([2, 3, 4, 6]), st.integers(2, 4))
def test_first_column_is_the_group(k, n):
    # E^1_{1,q} is A concentrated in q = n - 1
    page = e1_page(FgAbGroup.cyclic(k), n, [1], 6)
    for q in range(7):
        expected = FgAbGroup.cyclic(k) if q == n - 1 else FgAbGroup()
        assert page.cell(1, q) == expected


@pytest.mark.parametrize("p", [2, 3])
def test_local_page_has_only_p_torsion(p):
    page = e1_page(FgAbGroup.cyclic(6), 3, range(1, 7), 8, p=p)
    for r in page.r_values:
        for q in page.q_values:
            g = page.cell(r, q)
            assert not g or g.primes() == [p]


def test_symbolic_moore_page():
    page = e1_page(FREE, 3, range(1, 7), 10)
    assert page.render_cell(1, 2) == "A"
    assert page.render_cell(5, 9) == "A⊗Z/5"
    assert page.render_cell(6, 9) == "L^3(A)⊗Z/2"


def test_symbolic_three_local_cell():
    assert e1_page(FREE, 3, [9], 10, p=3).render_cell(9, 9) == "N^{3;3}(A)"


def test_missing_column_is_marked():
    page = e1_page(FgAbGroup.cyclic(2), 2, [7, 8], 9)
    assert page.unavailable() == [(8, q) for q in range(10)]
    assert isinstance(page.cell(8, 3), Unavailable)
    assert page.render_cell(8, 9) == "?(d_k for weight 8)"
    assert not isinstance(page.cell(7, 3), Unavailable)


def test_bifunctor_cells():
    page = bifunctor_e1(q_max=3, r_max=3)
    assert [t.render() for t in page.cell(1, 1)] == ["Hom(A, B)"]
    assert [t.render() for t in page.cell(2, 2)] == ["Hom(A, Γ2(B))", "Ext(A, L1Γ2(B))"]
    assert [t.render() for t in page.cell(3, 2)] == ["Ext(A, Ls^3(B))"]


def test_barratt_sequence():
    assert barratt_sequence() == "0 → Ext(A, Γ2(B)) → [M(A,2), M(B,2)] → Hom(A, B) → 0"


def test_json_round_trip(srp2_page):
    data = json.loads(srp2_page.to_json())
    assert data["space"] == "M(Z/2,2)"
    assert data["r_values"] == list(range(1, 9))
    for c in data["cells"]:
        g = FgAbGroup(c["free_rank"], tuple(c["torsion"]))
        assert srp2_page.cell(c["r"], c["q"]) == g


def test_text_and_csv(srp2_page):
    text = srp2_page.to_text()
    assert text.splitlines()[0] == "E^1 page for M(Z/2,2)"
    csv_lines = srp2_page.to_csv().splitlines()
    assert len(csv_lines) == 1 + len(srp2_page.q_values)


def test_cell_diff_ok_policy():
    assert CellDiff((1,), "a", "a", "exact", "paper").ok
    assert CellDiff((1,), "a", "b", "mismatch", "seeded").ok
    assert CellDiff((1,), "a", "b", "mismatch", "paper-discrepancy").ok
    assert not CellDiff((1,), "a", "b", "mismatch", "paper").ok


def test_bad_arguments():
    with pytest.raises(ValueError):
        e1_page(FgAbGroup.cyclic(2), 1, [1], 3)
    with pytest.raises(ValueError):
        e1_page("B", 3, [1], 3)
    with pytest.raises(ValueError):
        e1_page(FgAbGroup.cyclic(2), 3, [0], 3)

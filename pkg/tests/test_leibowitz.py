from __future__ import annotations

import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from derived_lie.abgroup import FgAbGroup, GradedAbGroup, graded_homology
from derived_lie.errors import UnsupportedDegree
from derived_lie.leibowitz import (
    SEED_ENV,
    SHAPE_EVEN,
    SHAPE_ODD,
    SHAPES,
    DkProvider,
    compute_dk,
    degree_range,
    dgls_homology,
    load_seeds,
    rank_B,
    rank_L,
    universal_homology,
)
from derived_lie.oracle import GenericDGLS, TwoTermMap, build_dgls


def cyc(*orders: int) -> FgAbGroup:
    return FgAbGroup.from_orders(orders)


@pytest.mark.parametrize(
    "r, k, shape, expected",
    [(3, 1, SHAPE_EVEN, 1), (4, 2, SHAPE_EVEN, 2), (2, 0, SHAPE_EVEN, 0), (2, 1, SHAPE_EVEN, 1)],
)
def test_rank_L_examples(r, k, shape, expected):
    assert rank_L(r, k, shape) == expected


@pytest.mark.parametrize("r", range(1, 8))
@pytest.mark.parametrize("shape", SHAPES)
def test_rank_L_matches_lattice_construction(r, shape):
    deg_a = 0 if shape == SHAPE_EVEN else 1
    c = GenericDGLS(TwoTermMap.scalar(1), deg_a).complex(r)
    for k in degree_range(r, shape):
        assert rank_L(r, k, shape) == c.rank(k), (r, k)


@pytest.mark.parametrize("r", range(1, 8))
@pytest.mark.parametrize("shape", SHAPES)
def test_boundary_ranks_telescope(r, shape):
    for k in degree_range(r, shape):
        assert rank_B(r, k, shape) + rank_B(r, k - 1, shape) == rank_L(r, k, shape)


@pytest.mark.parametrize("r", [2, 3, 5, 7])
def test_prime_weight_complex_is_rationally_acyclic(r):
    euler = sum((-1) ** k * rank_L(r, k, SHAPE_EVEN) for k in degree_range(r, SHAPE_EVEN))
    assert euler == 0


@pytest.mark.parametrize("r", [2, 3, 4])
@pytest.mark.parametrize("shape", SHAPES)
def test_boundary_ranks_match_oracle(r, shape):
    deg_a = 0 if shape == SHAPE_EVEN else 1
    c = GenericDGLS(TwoTermMap.scalar(1), deg_a).complex(r)
    from derived_lie.abgroup import matrix_rank

    for k in degree_range(r, shape):
        d = c.d(k)
        got = matrix_rank(d.entries) if d.rows and d.cols else 0
        assert got == rank_B(r, k - 1, shape)


def test_dgls_homology_examples():
    assert dgls_homology(2, 0, 3, 1) == GradedAbGroup({1: cyc(3)})
    assert dgls_homology(4, 0, 2, 1) == GradedAbGroup({1: cyc(2), 2: cyc(4)})
    assert dgls_homology(3, 1, 3, 1) == GradedAbGroup({4: cyc(9)})


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([2, 3, 4]), st.sampled_from([2, 3, 5]), st.integers(1, 3))
def test_formula_matches_oracle_homology(r, p, f):
    h = graded_homology(build_dgls(r, TwoTermMap.scalar(p**f)))
    assert h.p_part(p) == dgls_homology(r, 0, p, f)


@settings(max_examples=30, deadline=None)
@given(st.sampled_from([2, 3]), st.sampled_from([2, 3, 5]), st.integers(1, 2))
def test_formula_matches_shifted_oracle(r, p, f):
    h = graded_homology(build_dgls(r, TwoTermMap.scalar(p**f), shifted=True))
    assert h.p_part(p) == dgls_homology(r, 1, p, f)


def test_identity_map_gives_d_k():
    assert universal_homology(4, SHAPE_EVEN, 2, 0) == GradedAbGroup({2: cyc(2)})
    assert universal_homology(3, SHAPE_EVEN, 3, 0).is_zero()


def test_dimension_shift():
    base = dgls_homology(3, 0, 3, 1)
    assert dgls_homology(3, 2, 3, 1) == base.shift(6)
    assert dgls_homology(3, 3, 3, 1) == dgls_homology(3, 1, 3, 1).shift(6)


def test_provider_policy():
    p = DkProvider()
    assert p.table(5, SHAPE_EVEN) == {}
    assert p.table(4, SHAPE_EVEN) == compute_dk(4, SHAPE_EVEN)
    assert p.d(6, 2, 2, SHAPE_EVEN) == 1
    with pytest.raises(UnsupportedDegree) as err:
        p.table(8, SHAPE_EVEN)
    assert err.value.missing == "d_k for weight 8"
    with pytest.raises(UnsupportedDegree):
        DkProvider("prime_zero").table(4, SHAPE_EVEN)
    assert DkProvider("oracle").table(8, SHAPE_EVEN) == compute_dk(8, SHAPE_EVEN)
    with pytest.raises(ValueError):
        DkProvider("guess")


@pytest.mark.parametrize("r", [5, 6, 7])
@pytest.mark.parametrize("shape", SHAPES)
def test_seeds_agree_with_oracle(r, shape):
    assert dict(DkProvider("seeded").table(r, shape)) == compute_dk(r, shape)


def test_seed_file_override(tmp_path, monkeypatch):
    path = tmp_path / "seeds.json"
    entries = [{"shape": [1, 0], "r": 6, "degree": 2, "p": 2, "d": 0}]
    path.write_text(json.dumps({"entries": entries}))
    provider = DkProvider.with_seed_file(path)
    assert provider.d(6, 2, 2, SHAPE_EVEN) == 0
    monkeypatch.setenv(SEED_ENV, str(path))
    assert load_seeds()[(SHAPE_EVEN, 6)] == {2: {2: 0}}
    with pytest.raises(UnsupportedDegree):
        provider.table(7, SHAPE_ODD)


def test_bad_shape():
    with pytest.raises(ValueError):
        rank_L(3, 1, (3, 2))

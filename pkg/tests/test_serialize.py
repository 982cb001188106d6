from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from derived_lie.abgroup import FgAbGroup, GradedAbGroup
from derived_lie.engine.ecomplex import e_complex
from derived_lie.engine.serialize import (
    complex_to_record,
    dumps_graded,
    expr_to_records,
    graded_to_records,
    loads_graded,
    record_to_complex,
    records_to_expr,
    records_to_graded,
)
from derived_lie.oracle import TwoTermMap, build_dgls

groups = st.builds(
    lambda free, orders: FgAbGroup.from_orders(orders, free),
    st.integers(0, 3),
    st.lists(st.sampled_from([2, 3, 4, 5, 6, 8, 9, 12]), max_size=4),
)
graded = st.dictionaries(st.integers(-3, 20), groups, max_size=6).map(GradedAbGroup)


@settings(max_examples=60, deadline=None)
@given(graded)
def test_graded_round_trip(g):
    assert records_to_graded(graded_to_records(g)) == g
    assert loads_graded(dumps_graded(g)) == g


def test_record_shape():
    g = GradedAbGroup({2: FgAbGroup.from_orders([12], 1)})
    assert graded_to_records(g) == [{"degree": 2, "free_rank": 1, "torsion": ["2^2", "3^1"]}]


@pytest.mark.parametrize("bad", ["4", "2^0", "p^2", "2^"])
def test_bad_torsion_string(bad):
    with pytest.raises(ValueError):
        records_to_graded([{"degree": 0, "free_rank": 0, "torsion": [bad]}])


def test_bad_records():
    with pytest.raises(ValueError):
        records_to_graded([{"degree": 0, "torsion": []}])
    rec = {"degree": 1, "free_rank": 0, "torsion": []}
    with pytest.raises(ValueError):
        records_to_graded([rec, rec])


@pytest.mark.parametrize("m, n", [(2, 1), (3, 2), (4, 1), (8, 2), (9, 2)])
def test_expr_round_trip(m, n):
    expr = e_complex(m, n, max_degree=20)
    assert records_to_expr(expr_to_records(expr)).counts() == expr.counts()


@pytest.mark.parametrize("m, shifted", [(2, False), (3, True), (4, False)])
def test_complex_round_trip(m, shifted):
    c = build_dgls(m, TwoTermMap.diagonal([2, 3]), shifted=shifted)
    back = record_to_complex(complex_to_record(c))
    assert back.ranks == c.ranks
    assert back.labels == c.labels
    for n in c.degrees():
        assert back.d(n).to_lists() == c.d(n).to_lists()

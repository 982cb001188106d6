from __future__ import annotations

from collections import Counter
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from derived_lie.witt import (
    BasicProduct,
    basic_products,
    cross_products,
    enumerate_basic,
    moebius_count,
    moebius_multicount,
    parity_split,
    super_moebius_count,
)


def necklaces(r: int, m: int) -> int:
    """Aperiodic necklaces of length m over r beads, counted by brute force."""
    seen = set()
    for w in product(range(r), repeat=m):
        rots = {w[i:] + w[:i] for i in range(m)}
        if len(rots) == m:
            seen.add(min(rots))
    return len(seen)


@pytest.mark.parametrize(
    "r, m, expected", [(2, 2, 1), (2, 3, 2), (2, 4, 3), (1, 5, 0), (2, 6, 9), (3, 2, 3), (1, 1, 1)]
)
def test_moebius_count(r, m, expected):
    assert moebius_count(r, m) == expected


@pytest.mark.parametrize("r", [1, 2, 3])
@pytest.mark.parametrize("m", range(1, 8))
def test_moebius_count_is_necklace_count(r, m):
    assert moebius_count(r, m) == necklaces(r, m)


@pytest.mark.parametrize("counts, expected", [((1, 3), 1), ((2, 2), 1), ((3, 0), 0), ((1, 0), 1), ((1, 2), 1)])
def test_moebius_multicount(counts, expected):
    assert moebius_multicount(*counts) == expected


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 3), st.integers(1, 7))
def test_multicount_sums_to_witt(r, m):
    total = sum(
        moebius_multicount(*c) for c in product(range(m + 1), repeat=r) if sum(c) == m
    )
    assert total == moebius_count(r, m)


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 7), st.sampled_from([("B", "A"), ("C", "B", "A")]))
def test_basic_products_counted_by_witt(m, letters):
    products = basic_products(m, letters)
    assert len(products) == moebius_count(len(letters), m)
    assert len(set(products)) == len(products)


def test_basic_product_examples():
    assert enumerate_basic({"A": 1, "B": 2}) == [BasicProduct(("B", "A", "B"))]
    assert basic_products(2) == (BasicProduct(("B", "A")),)
    assert basic_products(1) == (BasicProduct(("B",)), BasicProduct(("A",)))
    assert str(BasicProduct(("B", "A"))) == "B⊗A"


def test_cross_products_are_aperiodic_and_mixed():
    for m in range(2, 7):
        seen = set()
        for b in cross_products(m, ("C", "B", "A")):
            w = b.letters
            assert len(set(w)) > 1
            rots = frozenset(w[i:] + w[:i] for i in range(m))
            assert len(rots) == m
            seen.add(rots)
        # distinct necklaces
        assert len(seen) == len(cross_products(m, ("C", "B", "A")))


def test_enumerate_basic_matches_multicount():
    for a in range(0, 5):
        for b in range(0, 5):
            if a + b >= 2:
                assert len(enumerate_basic({"A": a, "B": b}, ("B", "A"))) == moebius_multicount(a, b)


def test_parity_split():
    products = [BasicProduct(("A", "B", "B")), BasicProduct(("A", "B", "A"))]
    even, odd = parity_split(products, "A")
    assert odd == [BasicProduct(("A", "B", "B"))]
    assert even == [BasicProduct(("A", "B", "A"))]


def test_content():
    assert BasicProduct(("B", "A", "B")).content() == Counter({"B": 2, "A": 1})


@pytest.mark.parametrize("m, expected", [(1, 1), (2, 1), (3, 0), (4, 0)])
def test_super_count_rank_one(m, expected):
    # one odd generator x: x, x^[2], and nothing in weight >= 3
    assert super_moebius_count(1, m) == expected


def test_bad_arguments():
    with pytest.raises(ValueError):
        moebius_count(0, 2)
    with pytest.raises(ValueError):
        moebius_multicount(0, 0)
    with pytest.raises(ValueError):
        enumerate_basic({"A": 1})

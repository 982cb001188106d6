"""Counting and listing basic tensor products for cross-effect decompositions."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from math import factorial, gcd
from typing import Iterable, Iterator, Sequence

from sympy import divisors, mobius

DEFAULT_LETTERS = ("B", "A")  # highest letter first


@dataclass(frozen=True, order=True)
class BasicProduct:
    """A tensor monomial ``letters[0] (x) letters[1] (x) ...``."""

    letters: tuple[str, ...]

    @property
    def weight(self) -> int:
        return len(self.letters)

    def count(self, letter: str) -> int:
        return self.letters.count(letter)

    def content(self) -> Counter:
        return Counter(self.letters)

    def __str__(self) -> str:
        return "⊗".join(self.letters)


def moebius_count(r: int, m: int) -> int:
    """Number of basic products of weight ``m`` in ``r`` letters (Witt's formula)."""
    if r < 1 or m < 1:
        raise ValueError("need r >= 1 and m >= 1")
    total = sum(int(mobius(d)) * r ** (m // d) for d in divisors(m))
    return total // m


@lru_cache(maxsize=None)
def _multicount(counts: tuple[int, ...]) -> int:
    m = sum(counts)
    g = 0
    for c in counts:
        g = gcd(g, c)
    total = 0
    for d in divisors(g):
        mu = int(mobius(d))
        if not mu:
            continue
        term = factorial(m // d)
        for c in counts:
            term //= factorial(c // d)
        total += mu * term
    return total // m


def moebius_multicount(*counts: int) -> int:
    """Number of basic products with ``counts[i]`` entries from the i-th letter."""
    if any(c < 0 for c in counts) or not any(counts):
        raise ValueError("counts must be non-negative and not all zero")
    return _multicount(tuple(counts))


def _lyndon_words(k: int, n: int) -> Iterator[tuple[int, ...]]:
    """Lyndon words of length exactly ``n`` over ``0..k-1`` (Duval's algorithm)."""
    w = [-1]
    while w:
        w[-1] += 1
        m = len(w)
        if m == n:
            yield tuple(w)
        while len(w) < n:
            w.append(w[len(w) - m])
        while w and w[-1] == k - 1:
            w.pop()


def _relabel(word: tuple[int, ...]) -> tuple[int, ...]:
    # x^s y^t is shown as x y^t x^(s-1), i.e. as a left-normed bracket [x, y, .., y, x, .., x]
    s = 0
    while s < len(word) and word[s] == word[0]:
        s += 1
    rest = word[s:]
    if rest and all(c == rest[0] for c in rest):
        return (word[0],) + rest + (word[0],) * (s - 1)
    return word


@lru_cache(maxsize=None)
def _basic(weight: int, letters: tuple[str, ...]) -> tuple[BasicProduct, ...]:
    out = []
    for w in _lyndon_words(len(letters), weight):
        out.append(BasicProduct(tuple(letters[i] for i in _relabel(w))))
    return tuple(sorted(out, key=lambda b: (tuple(letters.index(x) for x in b.letters))))


def basic_products(weight: int, letters: Sequence[str] = DEFAULT_LETTERS) -> tuple[BasicProduct, ...]:
    """All basic products of a given weight over ``letters`` (highest letter first).

    Products of weight one are the letters themselves.
    """
    if weight < 1:
        raise ValueError("weight must be positive")
    return _basic(weight, tuple(letters))


def enumerate_basic(counts: dict[str, int], letters: Sequence[str] | None = None) -> list[BasicProduct]:
    """Basic products with prescribed letter multiplicities."""
    if letters is None:
        letters = tuple(sorted(counts, reverse=True))
    weight = sum(counts.values())
    if weight < 2:
        raise ValueError("total weight must be at least 2")
    target = {x: counts.get(x, 0) for x in letters}
    return [
        b for b in basic_products(weight, letters) if all(b.count(x) == c for x, c in target.items())
    ]


def cross_products(weight: int, letters: Sequence[str] = DEFAULT_LETTERS) -> tuple[BasicProduct, ...]:
    """Basic products that involve at least two distinct letters."""
    return tuple(b for b in basic_products(weight, letters) if len(set(b.letters)) > 1)


def parity_split(
    products: Iterable[BasicProduct], letter: str
) -> tuple[list[BasicProduct], list[BasicProduct]]:
    """Split into products with an even resp. odd number of ``letter`` entries."""
    even, odd = [], []
    for b in products:
        (odd if b.count(letter) % 2 else even).append(b)
    return even, odd


def super_moebius_count(r: int, m: int) -> int:
    """Rank of the degree-``m`` super-Lie functor (with squares) on a free group of rank ``r``."""
    if r < 0 or m < 1:
        raise ValueError("need r >= 0 and m >= 1")
    total = sum(int(mobius(d)) * (-1) ** (m + m // d) * r ** (m // d) for d in divisors(m))
    return total // m

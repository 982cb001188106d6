"""Admissible word sets indexing derived Lie functors of the integers.

For ``p = 2`` a word is a tuple of positive integers.  For an odd prime a word
is a tuple of ``(marker, index)`` letters with marker ``"l"`` (lambda) or ``"m"``
(mu).  Both kinds are plain tuples so they sort lexicographically.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Union

from .abgroup import require_prime

LAMBDA = "l"
MU = "m"

Word2 = tuple[int, ...]
WordP = tuple[tuple[str, int], ...]
Word = Union[Word2, WordP]


@dataclass(frozen=True)
class WordStats:
    d: int
    o: int


def _is_marked(w: Word) -> bool:
    return bool(w) and isinstance(w[0], tuple)


def stats(w: Word, p: int) -> WordStats:
    """Degree contribution ``d`` and odd/lambda count ``o`` of a word."""
    if p == 2:
        return WordStats(sum(w), sum(1 for i in w if i % 2))
    o = sum(1 for mark, _ in w if mark == LAMBDA)
    return WordStats((2 * p - 2) * sum(i for _, i in w) - o, o)


def word_degree(w: Word, p: int) -> int:
    return stats(w, p).d


def format_word(w: Word) -> str:
    if _is_marked(w):
        names = {LAMBDA: "λ", MU: "μ"}
        return "(" + ",".join(f"{names[m]}{i}" for m, i in w) + ")"
    return "(" + ",".join(str(i) for i in w) + ")"


def _check_base(base: int) -> int:
    if base < 2 or base % 2:
        raise ValueError(f"base must be an even integer >= 2, got {base}")
    return base // 2


def _words2(first_bound: int, k: int, terminal: bool, max_d: int | None) -> Iterator[Word2]:
    budget = float("inf") if max_d is None else max_d

    def rec(prefix: tuple[int, ...], bound: int, used: int) -> Iterator[Word2]:
        if len(prefix) == k:
            if not terminal or prefix[-1] % 2:
                yield prefix
            return
        rest = k - len(prefix) - 1  # each later entry adds at least 1
        for i in range(1, bound + 1):
            if used + i + rest > budget:
                break
            yield from rec(prefix + (i,), 2 * i, used + i)

    yield from rec((), first_bound, 0)


def _wordsp(p: int, n: int, k: int, terminal: bool, max_d: int | None) -> Iterator[WordP]:
    budget = float("inf") if max_d is None else max_d
    step = 2 * p - 2

    def rec(prefix: tuple[tuple[str, int], ...], bound: int, used: int) -> Iterator[WordP]:
        if len(prefix) == k:
            if not terminal or prefix[-1][0] == LAMBDA:
                yield prefix
            return
        rest = k - len(prefix) - 1
        for i in range(1, bound + 1):
            for mark in (LAMBDA, MU):
                cost = step * i - (1 if mark == LAMBDA else 0)
                if used + cost + rest * (step - 1) > budget:
                    continue
                nxt = p * i - 1 if mark == LAMBDA else p * i
                yield from rec(prefix + ((mark, i),), nxt, used + cost)

    yield from rec((), n, 0)


@lru_cache(maxsize=None)
def enumerate_w(p: int, base: int, k: int, max_d: int | None = None) -> tuple[Word, ...]:
    """Admissible words of length ``k`` for the even base ``base = 2n``.

    ``max_d`` keeps only words with ``d(w) <= max_d`` and prunes the search.
    """
    require_prime(p)
    n = _check_base(base)
    if k < 1:
        raise ValueError("word length must be positive")
    if p == 2:
        return tuple(sorted(_words2(base, k, True, max_d)))
    return tuple(sorted(_wordsp(p, n, k, True, max_d)))


@lru_cache(maxsize=None)
def enumerate_v(p: int, base: int, k: int, max_d: int | None = None) -> tuple[Word, ...]:
    """Like :func:`enumerate_w` but without the condition on the last entry.

    This is an interpretation: the unrestricted sets are used in places where
    no terminal condition is stated.
    """
    require_prime(p)
    n = _check_base(base)
    if p == 2:
        return tuple(sorted(_words2(base, k, False, max_d)))
    return tuple(sorted(_wordsp(p, n, k, False, max_d)))


def filtration_level(w: Word, base: int, j: int, p: int | None = None) -> bool:
    """Whether ``w`` lies in the j-th filtration piece of its word set."""
    k = len(w)
    if j < 1 or j > k:
        raise ValueError(f"filtration level {j} out of range 1..{k}")
    n = _check_base(base)
    if _is_marked(w):
        if p is None:
            raise ValueError("odd-prime words need p")
        return all(w[t] == (MU, p**t * n) for t in range(j - 1))
    return all(w[t] == 2 ** (t + 1) * n for t in range(j - 1))


def filtration_set(p: int, base: int, k: int, j: int) -> tuple[Word, ...]:
    return tuple(w for w in enumerate_w(p, base, k) if filtration_level(w, base, j, p))


def tilde_threshold(p: int, k: int) -> int:
    """Lower bound ``u(p, k)`` used by the tilde subsets."""
    if p == 2:
        return 2 ** (k - 1)
    return (p ** (k - 1) - 1) // 2


def _last_index(w: Word) -> int:
    last = w[-1]
    return last[1] if isinstance(last, tuple) else last


def tilde_subset(words: tuple[Word, ...] | list[Word], p: int, k: int) -> tuple[Word, ...]:
    """Words whose last index exceeds the tilde threshold (``>=`` for p = 2)."""
    u = tilde_threshold(p, k)
    if p == 2:
        return tuple(w for w in words if _last_index(w) >= u)
    return tuple(w for w in words if _last_index(w) > u)


def tilde_w(p: int, base: int, k: int, max_d: int | None = None) -> tuple[Word, ...]:
    return tilde_subset(enumerate_w(p, base, k, max_d), p, k)


@lru_cache(maxsize=None)
def overline_set(p: int, n: int, k: int, max_d: int | None = None) -> tuple[Word, ...]:
    """Level one minus level two for even ``n``; the full set at ``n - 1`` for odd ``n``."""
    if n < 2:
        raise ValueError("overline sets need n >= 2")
    if n % 2:
        return enumerate_w(p, n - 1, k, max_d)
    full = enumerate_w(p, n, k, max_d)
    if k == 1:
        return full
    return tuple(w for w in full if not filtration_level(w, n, 2, p))


# ---------------------------------------------------------------------------
# generating function


def brute_count(d: int, m: int, n: int) -> int:
    """Number of sequences with ``i_1 <= m``, ``i_{j+1} <= d i_j`` and sum ``n``."""

    @lru_cache(maxsize=None)
    def count(rest: int, bound: int) -> int:
        if rest == 0:
            return 1
        return sum(count(rest - i, d * i) for i in range(1, min(bound, rest) + 1))

    return count(n, m)


class _Series:
    """Truncated integer power series helpers (lists of coefficients)."""

    def __init__(self, order: int) -> None:
        self.order = order

    def zero(self) -> list[int]:
        return [0] * (self.order + 1)

    def monomial(self, e: int, c: int = 1) -> list[int]:
        out = self.zero()
        if e <= self.order:
            out[e] = c
        return out

    def geometric(self, e: int) -> list[int]:
        out = self.zero()
        for i in range(0, self.order + 1, e):
            out[i] = 1
        return out

    def mul(self, a: list[int], b: list[int]) -> list[int]:
        out = self.zero()
        for i, x in enumerate(a):
            if x:
                for j in range(self.order + 1 - i):
                    out[i + j] += x * b[j]
        return out

    def add(self, a: list[int], b: list[int]) -> list[int]:
        return [x + y for x, y in zip(a, b)]

    def inverse(self, a: list[int]) -> list[int]:
        if a[0] != 1:
            raise ValueError("series must start with 1")
        out = self.zero()
        out[0] = 1
        for n in range(1, self.order + 1):
            out[n] = -sum(a[i] * out[n - i] for i in range(1, n + 1))
        return out


def tangora_gf(d: int, m: int, order: int) -> list[int]:
    """Coefficients ``H_1 .. H_order`` of the closed-form generating function.

    Calibrated against :func:`brute_count`: the inner products run over
    ``e(j)`` in both numerator and denominator, and ``a / (1 - b)`` equals
    ``H(q) - 1``.
    """
    if d < 2 or m < 1 or order < 1:
        raise ValueError("need d >= 2, m >= 1, order >= 1")
    s = _Series(order)

    def e(k: int) -> int:
        return (d ** (k + 1) - 1) // (d - 1)

    a = s.zero()
    b = s.zero()
    k = 0
    while e(k) <= order:
        ek = e(k)
        one_minus = s.add(s.monomial(0), s.monomial(m * ek, -1))
        term_a = s.mul(s.mul(s.monomial(ek), one_minus), s.geometric(ek))
        term_b = s.mul(s.monomial(ek), s.geometric(ek))
        for j in range(k):
            factor = s.mul(s.monomial(e(j), -1), s.geometric(e(j)))
            term_a = s.mul(term_a, factor)
            term_b = s.mul(term_b, factor)
        a = s.add(a, term_a)
        b = s.add(b, term_b)
        k += 1
    denom = [1 - b[0]] + [-x for x in b[1:]]
    h = s.mul(a, s.inverse(denom))
    return h[1:]

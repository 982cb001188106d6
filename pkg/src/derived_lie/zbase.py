"""Derived Lie and super-Lie functors of the integers in every dimension.

``lie_z(m, n)`` is the graded group of derived functors of the degree ``m``
Lie functor at ``Z`` placed in dimension ``n``; ``superlie_z`` is the analogue
for the super-Lie functor with squares.  Results are memoized.
"""

from __future__ import annotations

from functools import lru_cache

from sympy import factorint

from .abgroup import FgAbGroup, GradedAbGroup, Z
from .errors import UnsupportedDegree
from .words import enumerate_w, tilde_w, word_degree


def prime_power(m: int) -> tuple[int, int] | None:
    """``(p, k)`` if ``m = p**k`` with ``k >= 1``, else ``None``."""
    if m < 2:
        return None
    f = factorint(m)
    if len(f) != 1:
        return None
    ((p, k),) = f.items()
    return p, k


def _vector_space(p: int, degrees: list[int]) -> GradedAbGroup:
    out: dict[int, FgAbGroup] = {}
    for d in degrees:
        out[d] = out.get(d, FgAbGroup()) + FgAbGroup.cyclic(p)
    return GradedAbGroup(out)


def _minus(bound: int | None, k: int) -> int | None:
    return None if bound is None else bound - k


def _cap(g: GradedAbGroup, bound: int | None) -> GradedAbGroup:
    return g if bound is None else g.truncate(hi=bound)


@lru_cache(maxsize=None)
def lie_z(m: int, n: int, max_degree: int | None = None) -> GradedAbGroup:
    """Homotopy of the derived degree-``m`` Lie functor of ``Z[n]``.

    ``max_degree`` drops everything above that degree and prunes the word search.
    """
    if m < 1 or n < 0:
        raise ValueError("need m >= 1 and n >= 0")
    if max_degree is not None and max_degree < n:
        return GradedAbGroup()
    if m == 1:
        return GradedAbGroup.concentrated(n, Z)
    if n == 0:
        return GradedAbGroup()
    if n % 2 == 0:
        pk = prime_power(m)
        if pk is None:
            return GradedAbGroup()
        p, k = pk
        words = enumerate_w(p, n, k, _minus(max_degree, n))
        return _vector_space(p, [n + word_degree(w, p) for w in words])
    half = n - 1  # n = half + 1 with half even
    if m % 2:
        return lie_z(m, half, _minus(max_degree, 1)).shift(1)
    r = m // 2
    return lie_z(m, half, _minus(max_degree, 1)).shift(1) + lie_z(r, 2 * half + 2, max_degree)


@lru_cache(maxsize=None)
def superlie_z(
    m: int, n: int, literal: bool = False, max_degree: int | None = None
) -> GradedAbGroup:
    """Homotopy of the derived degree-``m`` super-Lie functor of ``Z[n]``.

    For odd prime powers the default degree of a word ``w`` is
    ``n + d(w) - (m - 1)``; ``literal=True`` drops the ``-(m - 1)`` correction.
    """
    if m < 1 or n < 0:
        raise ValueError("need m >= 1 and n >= 0")
    if m == 1:
        return _cap(GradedAbGroup.concentrated(n, Z), max_degree)
    if n == 0:
        return _cap(GradedAbGroup.concentrated(0, Z) if m == 2 else GradedAbGroup(), max_degree)
    if m == 2:
        return lie_z(2, n + 1, _minus(max_degree, -2)).shift(-2)
    pk = prime_power(m)
    if pk is not None and pk[0] == 2:
        return lie_z(m, n, max_degree)
    if m % 2:
        if n % 2:
            return superlie_z(m, n + 1, literal, _minus(max_degree, -1)).shift(-1)
        if pk is None:
            return GradedAbGroup()
        p, k = pk
        offset = 0 if literal else m - 1
        words = tilde_w(p, n, k, _minus(max_degree, n - offset))
        return _vector_space(p, [n + word_degree(w, p) - offset for w in words])
    # m even, not a power of two
    if n % 2:
        return GradedAbGroup()
    r = m // 2
    if r % 2:
        return superlie_z(r, 2 * n, literal, max_degree)
    raise UnsupportedDegree(f"super-Lie degree {m} at Z[{n}]", "a splitting for m = 4r with r odd")

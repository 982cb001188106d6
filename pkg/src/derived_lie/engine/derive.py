"""Homotopy of derived Lie and super-Lie functors on direct sums of shifted cyclic groups."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Literal

from sympy import divisors

from ..abgroup import GradedAbGroup, prime_power_parts
from ..leibowitz import DEFAULT_PROVIDER, DkProvider, dgls_homology
from ..witt import moebius_multicount
from ..zbase import lie_z, superlie_z
from .dobject import FREE, DObject, Piece, derived_tensor, tensor_power

Variant = Literal["lie", "super"]
LIE: Variant = "lie"
SUPER: Variant = "super"


def _check_variant(variant: str) -> Variant:
    if variant not in (LIE, SUPER):
        raise ValueError(f"unknown variant {variant!r}")
    return variant  # type: ignore[return-value]


def cross_variant(variant: Variant, weight: int) -> Variant:
    """Functor carried by a basic product of the given weight in the cross-effect sum."""
    if variant == LIE:
        return LIE
    return SUPER if weight % 2 else LIE


@dataclass(frozen=True)
class CrossTerm:
    """``count`` copies of ``F^d`` applied to a basic product with ``a`` copies of A and ``b`` of B."""

    degree: int
    a: int
    b: int
    count: int
    variant: Variant

    @property
    def weight(self) -> int:
        return self.a + self.b


def cross_effect_expand(variant: str, m: int, letters: int = 2) -> list[CrossTerm]:
    """Mixed terms of ``F^m(A + B)``: one entry per divisor ``d < m`` and letter content.

    Only the two-letter case is needed by the recursion, which peels one summand at a time.
    """
    variant = _check_variant(variant)
    if m < 2:
        raise ValueError("cross-effects need m >= 2")
    if letters != 2:
        raise ValueError("only two-letter expansions are supported")
    out = []
    for d in divisors(m):
        if d == m:
            continue
        w = m // d
        for a in range(1, w):
            count = moebius_multicount(a, w - a)
            if count:
                out.append(CrossTerm(d, a, w - a, count, cross_variant(variant, w)))
    return out


def _base_free(variant: Variant, m: int, shift: int, literal: bool, bound: int | None) -> GradedAbGroup:
    if variant == LIE:
        return lie_z(m, shift, bound)
    return superlie_z(m, shift, literal, bound)


@lru_cache(maxsize=None)
def _derive(
    variant: Variant,
    m: int,
    x: DObject,
    bound: int | None,
    provider: DkProvider,
    literal: bool,
) -> GradedAbGroup:
    if not x:
        return GradedAbGroup()
    low = x.min_shift()
    if bound is not None and low > bound:
        return GradedAbGroup()
    if m == 1:
        return _cap(x.homotopy(), bound)
    if len(x) == 1:
        (piece,) = x.pieces
        if piece.is_free:
            return _base_free(variant, m, piece.shift, literal, bound)
        return _torsion_diagonal(variant, m, piece, bound, provider, literal)
    a, b = x.split_first()
    total = _derive(variant, m, a, bound, provider, literal)
    total = total + _derive(variant, m, b, bound, provider, literal)
    for term in cross_effect_expand(variant, m):
        arg = derived_tensor(tensor_power(a, term.a), tensor_power(b, term.b))
        part = _derive(term.variant, term.degree, arg, bound, provider, literal)
        total = total + _scale(part, term.count)
    return total


def _torsion_diagonal(
    variant: Variant,
    m: int,
    piece: Piece,
    bound: int | None,
    provider: DkProvider,
    literal: bool,
) -> GradedAbGroup:
    p, f = prime_power_parts(piece.order)
    l = piece.shift
    pair = DObject((Piece(FREE, l), Piece(FREE, l + 1)))
    free_part = _derive(variant, m, pair, bound, provider, literal).p_part(p)
    if variant == LIE:
        extra = dgls_homology(m, l, p, f, provider, bound)
    else:
        window = None if bound is None else bound + m
        extra = dgls_homology(m, l + 1, p, f, provider, window).shift(-m)
    return free_part + extra


def _scale(g: GradedAbGroup, k: int) -> GradedAbGroup:
    return GradedAbGroup({d: grp * k for d, grp in g.items()})


def _cap(g: GradedAbGroup, bound: int | None) -> GradedAbGroup:
    return g if bound is None else g.truncate(hi=bound)


def derive(
    variant: str,
    m: int,
    x: DObject,
    n: int = 0,
    *,
    max_degree: int | None = None,
    provider: DkProvider = DEFAULT_PROVIDER,
    literal: bool = False,
) -> GradedAbGroup:
    variant = _check_variant(variant)
    if m < 1 or n < 0:
        raise ValueError("need m >= 1 and n >= 0")
    return _derive(variant, m, x.shift(n), max_degree, provider, literal)


def derive_lie(m: int, x: DObject, n: int = 0, **kw) -> GradedAbGroup:
    """Homotopy groups of the derived degree-``m`` Lie functor of ``x[n]``."""
    return derive(LIE, m, x, n, **kw)


def derive_superlie(m: int, x: DObject, n: int = 0, **kw) -> GradedAbGroup:
    """Homotopy groups of the derived degree-``m`` super-Lie functor of ``x[n]``.

    ``literal=True`` is forwarded to the base case at ``Z[n]``.
    """
    return derive(SUPER, m, x, n, **kw)


def decalage_check(p: int, x: DObject, l: int = 0, provider: DkProvider = DEFAULT_PROVIDER) -> bool:
    """Compare the Lie functor on ``x[l+1]`` with the super-Lie functor on ``x[l]`` shifted by ``p``."""
    lhs = derive_lie(p, x, l + 1, provider=provider)
    rhs = derive_superlie(p, x, l, provider=provider).shift(p)
    return lhs == rhs


def clear_cache() -> None:
    _derive.cache_clear()

"""Formal direct sums of shifted functors modelling derived Lie functors of suspensions."""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from typing import Literal

from sympy import factorint, isprime

from ..abgroup import FgAbGroup, GradedAbGroup, graded_sum, require_prime, tor
from ..errors import UnsupportedDegree
from ..leibowitz import DEFAULT_PROVIDER, DkProvider
from ..witt import enumerate_basic, moebius_count
from ..words import overline_set, tilde_subset, word_degree
from .derive import derive_lie, derive_superlie
from .dobject import DObject, derived_tensor
from .special import special_n_dim, special_ns_dim
from .symbolic import (
    GAMMA2,
    ID,
    LAMBDA2,
    LIE,
    SPECIAL_N,
    SPECIAL_NS,
    SUPER_LIE,
    TORP,
    FunctorAtom,
    FunctorExprGraded,
    Term,
    evaluate_free,
    lie,
    special_n,
    special_ns,
    superlie,
)

DEFAULT_CAP = 64


class UnvalidatedConstructionWarning(UserWarning):
    """Raised for the super-Lie analogue of the complex, which does not match every known value."""


def _check_cap(top: int, max_degree: int | None, cap: int | None) -> None:
    if max_degree is None and cap is not None and top > cap:
        raise ValueError(
            f"unbounded symbolic output up to degree {top} exceeds the cap {cap}; pass max_degree"
        )


def _n_terms(
    m: int,
    base_num: int,
    special,
    arg: tuple[str, ...],
    offset: int,
    tilde: bool,
    max_degree: int | None,
) -> list[Term]:
    """Summands indexed by primes ``p^k || m``, ``i <= k`` and overline words at base ``base_num*m/p^i``."""
    out: list[Term] = []
    for p, k in sorted(factorint(m).items()):
        for i in range(1, k + 1):
            base = base_num * m // p**i
            if base < 2:
                continue
            budget = None if max_degree is None else max_degree - base - offset
            if budget is not None and budget < 0:
                continue
            words = overline_set(p, base, i, budget)
            if tilde:
                words = tilde_subset(words, p, k)
            for w in words:
                out.append(Term(base + word_degree(w, p) + offset, special(m // p**i, p), arg))
    return out


def e_complex(
    m: int,
    n: int,
    *,
    tilde: bool = False,
    arg: tuple[str, ...] = ("A",),
    max_degree: int | None = None,
    cap: int | None = DEFAULT_CAP,
) -> FunctorExprGraded:
    """The formal sum modelling ``L L^m(C[n])`` (or ``L Ls^m(C[n])`` when ``tilde``) for a formal ``C``.

    ``n = 0`` gives the functor itself in degree 0.
    """
    if m < 1 or n < 0:
        raise ValueError("need m >= 1 and n >= 0")
    if m == 1:
        return FunctorExprGraded((Term(n, FunctorAtom(ID), arg),)).truncate(hi=max_degree)
    if n == 0:
        return FunctorExprGraded((Term(0, superlie(m) if tilde else lie(m), arg),))
    _check_cap(n * m, max_degree, cap)
    odd = n % 2 == 1
    if not tilde:
        top = superlie(m) if odd else lie(m)
        special = special_ns if odd else special_n
        terms = _n_terms(m, n, special, arg, 0, False, max_degree)
    elif odd:
        # n = 2k - 1: Lie top term, N terms at base 2km/p^i shifted by -m
        top = lie(m)
        terms = _n_terms(m, n + 1, special_n, arg, -m, True, max_degree)
    else:
        top = superlie(m)
        terms = _n_terms(m, n + 1, special_ns, arg, -m, True, max_degree)
    terms.append(Term(n * m, top, arg))
    return FunctorExprGraded(tuple(terms)).truncate(hi=max_degree)


def theta(m: int, n: int, *, max_degree: int | None = None, cap: int | None = DEFAULT_CAP) -> FunctorExprGraded:
    """The special-functor part of the complex: all summands except the top one."""
    full = e_complex(m, n, max_degree=max_degree, cap=cap)
    top = n * m
    return full.filter(lambda t: not (t.shift == top and t.atom.family in (LIE, SUPER_LIE, LAMBDA2, GAMMA2, ID) and t.modulus is None))


def theta_dims(m: int, r: int, n: int, **kw) -> GradedAbGroup:
    """Theta of ``Z^r`` as a graded group of elementary abelian pieces."""
    return evaluate_free(theta(m, n, **kw), {"A": r})


# ---------------------------------------------------------------------------
# closed formulas for free groups


def intro_prime_formula(p: int, dim: int, *, literal: bool = False) -> FunctorExprGraded:
    """Derived functors of ``L^p`` on ``A[dim]`` for an odd prime ``p``, with Tor and higher terms.

    For odd ``dim = 2n + 1`` the derived super-Lie terms sit at ``dim*p + j``;
    ``literal=True`` uses the printed ``2np + j`` instead.
    """
    require_prime(p)
    if p == 2:
        raise ValueError("the closed formula is stated for odd primes")
    if dim < 0:
        raise ValueError("dimension must be non-negative")
    n, odd = divmod(dim, 2)
    a = ("A",)
    tor_atom = FunctorAtom(TORP, 1, p)
    terms: list[Term] = []
    if not odd:
        top = 2 * n * p
        terms.append(Term(top, lie(p), a))
        if n >= 1:
            terms.append(Term(top, tor_atom, a))
        for j in range(1, p - 1 + 1):
            terms.append(Term(top + j, lie(p), a, None, j))
        for j in range(1, n + 1):
            terms.append(Term(2 * n + 2 * j * (p - 1) - 1, FunctorAtom(ID), a, p))
        for j in range(1, n):
            terms.append(Term(2 * n + 2 * j * (p - 1), tor_atom, a))
        return FunctorExprGraded(tuple(terms))
    base = 2 * n * p if literal else dim * p
    for j in range(p):
        terms.append(Term(base + j, superlie(p), a, None, j))
    for j in range(1, n + 1):
        terms.append(Term(2 * n + 2 * j * (p - 1), FunctorAtom(ID), a, p))
        terms.append(Term(2 * n + 2 * j * (p - 1) + 1, tor_atom, a))
    return FunctorExprGraded(tuple(terms))


def free_part(expr: FunctorExprGraded) -> FunctorExprGraded:
    """Drop the terms that vanish on free groups: Tor terms and higher derived functors."""
    return expr.filter(lambda t: t.derived == 0 and t.atom.family != TORP)


def squarefree_formula(m: int, n: int) -> FunctorExprGraded:
    """Derived functors of ``L^m`` on ``A[2n]`` for squarefree ``m > 1``."""
    if m < 2 or n < 1:
        raise ValueError("need m > 1 and n >= 1")
    f = factorint(m)
    if any(e > 1 for e in f.values()):
        raise ValueError(f"{m} is not squarefree")
    a = ("A",)
    terms = [Term(2 * n * m, lie(m), a)]
    for p in sorted(f):
        for i in range(1, m * n // p + 1):
            terms.append(Term(2 * m * n // p + (2 * p - 2) * i - 1, lie(m // p), a, p))
    return FunctorExprGraded(tuple(terms))


# ---------------------------------------------------------------------------
# evaluation on concrete inputs


@dataclass
class Evaluated:
    expr: FunctorExprGraded
    homotopy: GradedAbGroup
    warnings: list[str] = field(default_factory=list)


def _free_rank_if_free(x: DObject) -> int | None:
    if all(q.is_free and q.shift == 0 for q in x.pieces):
        return len(x.pieces)
    return None


def evaluate_term(t: Term, x: DObject, provider: DkProvider = DEFAULT_PROVIDER) -> GradedAbGroup:
    """Homotopy of one summand with ``x`` substituted for every letter of the argument."""
    arg = DObject.free(1)
    for _ in t.argument:
        arg = derived_tensor(arg, x)
    fam, d, p = t.atom.family, t.atom.degree, t.atom.prime
    if fam == ID:
        g = arg.homotopy()
    elif fam in (LIE, LAMBDA2):
        g = derive_lie(d, arg, provider=provider)
    elif fam in (SUPER_LIE, GAMMA2):
        g = derive_superlie(d, arg, provider=provider)
    elif fam == TORP:
        h = arg.homotopy()
        g = GradedAbGroup({k: tor(v, FgAbGroup.cyclic(p)) for k, v in h.items()})
    elif fam in (SPECIAL_N, SPECIAL_NS):
        r = _free_rank_if_free(arg)
        if r is None:
            raise UnsupportedDegree(
                f"special functor {t.pretty()} on {arg}", "a terminating expansion on torsion input"
            )
        dim = special_n_dim(d, p, r) if fam == SPECIAL_N else special_ns_dim(d, p, r)
        g = GradedAbGroup.concentrated(0, FgAbGroup(0, (p,) * dim))
    else:
        raise UnsupportedDegree(f"functor {fam}", "an evaluation rule")
    if t.derived:
        g = GradedAbGroup.concentrated(0, g[t.derived])
    if t.modulus is not None:
        g = g.derived_mod_p(t.modulus)
    return g.shift(t.shift)


def evaluate(expr: FunctorExprGraded, x: DObject, provider: DkProvider = DEFAULT_PROVIDER) -> GradedAbGroup:
    return graded_sum(evaluate_term(t, x, provider) for t in expr.terms)


def e_complex_on(
    m: int,
    x: DObject,
    n: int,
    *,
    tilde: bool = False,
    provider: DkProvider = DEFAULT_PROVIDER,
) -> Evaluated:
    """Evaluate the complex on a concrete group ``x`` (all pieces in degree 0)."""
    if not x.is_group():
        raise ValueError("the complex takes a group concentrated in degree 0")
    expr = e_complex(m, n, tilde=tilde, cap=None)
    notes = []
    if tilde:
        msg = "unvalidated construction: the super-Lie complex does not reproduce every known value"
        warnings.warn(msg, UnvalidatedConstructionWarning, stacklevel=2)
        notes.append(msg)
    return Evaluated(expr, evaluate(expr, x, provider), notes)


@dataclass(frozen=True)
class TildeMismatch:
    m: int
    n: int
    x: str
    expected: GradedAbGroup
    got: GradedAbGroup


def tilde_check(m: int, x: DObject, n: int, provider: DkProvider = DEFAULT_PROVIDER) -> TildeMismatch | None:
    """Compare the super-Lie complex with the computed derived super-Lie functor; None when they agree."""
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", UnvalidatedConstructionWarning)
        got = e_complex_on(m, x, n, tilde=True, provider=provider).homotopy
    expected = derive_superlie(m, x, n, provider=provider)
    if got == expected:
        return None
    return TildeMismatch(m, n, str(x), expected, got)


# ---------------------------------------------------------------------------
# E^1 page of the filtration spectral sequence for a two-term complex B -> A


Variant = Literal["lie", "super"]


def _derived_symbolic(variant: Variant, d: int, word: tuple[str, ...], s: int, max_degree: int | None) -> FunctorExprGraded:
    return e_complex(d, s, tilde=(variant == "super"), arg=word, max_degree=max_degree, cap=None)


def filtration_e1(variant: Variant, m: int, n: int, *, max_degree: int | None = None) -> dict[tuple[int, int], FunctorExprGraded]:
    """E^1 cells ``(i, q)`` for ``F^m((B -> A)[n])`` with ``F`` the Lie or super-Lie functor.

    Column ``i = mn + m - l`` collects the words with ``l`` letters A; a word of
    weight ``m/d`` contributes the derived degree-``d`` functor in dimension
    ``i/d`` and its degree-``j`` part lands in row ``q = j - i``.
    """
    if variant not in ("lie", "super"):
        raise ValueError(f"unknown variant {variant!r}")
    if m < 2 or n < 0:
        raise ValueError("need m >= 2 and n >= 0")
    cells: dict[tuple[int, int], list[Term]] = {}
    for l in range(m + 1):
        i = m * n + m - l
        for d in range(1, m + 1):
            if m % d or l % d:
                continue
            w = m // d
            if w == 1:
                words = [("A",) if l == m else ("B",)]
            else:
                if l == 0 or l == m:
                    continue
                words = [b.letters for b in enumerate_basic({"A": l // d, "B": (m - l) // d}, ("A", "B"))]
            if i % d:
                raise ValueError(f"column {i} is not divisible by {d}")
            for word in words:
                expr = _derived_symbolic(variant, d, word, i // d, max_degree)
                for t in expr.terms:
                    cells.setdefault((i, t.shift - i), []).append(t)
    return {k: FunctorExprGraded(tuple(v)) for k, v in sorted(cells.items())}

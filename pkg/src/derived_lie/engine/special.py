"""F_p-dimensions of the special functors on free abelian groups."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from ..abgroup import require_prime
from ..errors import UnsupportedDegree
from ..witt import moebius_count, super_moebius_count
from .dobject import DObject
from .derive import derive_lie
from .symbolic import SPECIAL_N, SPECIAL_NS, FunctorAtom

ORACLE_MAX_DEGREE = 4


@dataclass(frozen=True)
class SpecialDim:
    dim: int
    method: str  # "trivial", "hierarchy", "oracle" or "derived"


def _tor_count(d: int, p: int, r: int, dim: int, degree: int) -> int:
    return derive_lie(d, DObject.free(r), dim, max_degree=degree)[degree].p_rank(p)


def _via_derived(d: int, p: int, r: int, shifted: bool) -> int:
    # N^{d;p}(A) is pi_{2d} of the derived Lie functor on A[2] reduced mod p; the
    # super variant is pi_d of the one on A[1]. Free A leaves the top group plus Tor.
    if shifted:
        return moebius_count(r, d) + _tor_count(d, p, r, 2, 2 * d - 1)
    return super_moebius_count(r, d) + _tor_count(d, p, r, 1, d - 1)


@lru_cache(maxsize=None)
def special_n_info(d: int, p: int, r: int, shifted: bool = True, use_oracle: bool = True) -> SpecialDim:
    if d < 1 or r < 0:
        raise ValueError("need d >= 1 and r >= 0")
    require_prime(p)
    if r == 0:
        return SpecialDim(0, "trivial")
    if d == 1:
        return SpecialDim(r, "trivial")
    if shifted and d == p:
        return SpecialDim(moebius_count(r, p) + r, "hierarchy")
    if use_oracle and d <= ORACLE_MAX_DEGREE:
        from ..oracle import special_n_kernel

        return SpecialDim(special_n_kernel(d, p, r, shifted=shifted).dim, "oracle")
    try:
        return SpecialDim(_via_derived(d, p, r, shifted), "derived")
    except UnsupportedDegree as exc:
        raise UnsupportedDegree(f"special functor N^{{{d};{p}}}", exc.missing) from exc


def special_n_dim(d: int, p: int, r: int) -> int:
    """Dimension of ``N^{d;p}(Z^r)``."""
    return special_n_info(d, p, r, True).dim


def special_ns_dim(d: int, p: int, r: int) -> int:
    """Dimension of ``Ns^{d;p}(Z^r)``."""
    return special_n_info(d, p, r, False).dim


def special_atom_dim(atom: FunctorAtom, r: int) -> int:
    assert atom.prime is not None
    if atom.family == SPECIAL_N:
        return special_n_dim(atom.degree, atom.prime, r)
    if atom.family == SPECIAL_NS:
        return special_ns_dim(atom.degree, atom.prime, r)
    raise ValueError(f"{atom.family} is not a special functor")

"""Homology of the universal DG Lie complexes on ``Z --p^f--> Z``.

The homology of the weight ``r`` part of the free DG Lie ring with squares on
a two-term complex is determined by boundary ranks (closed formulas below) and
by the numbers ``d_k``: the p-ranks of the homology when the map is the
identity.  ``d_k`` has no closed form; :class:`DkProvider` supplies it.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from pathlib import Path
from typing import Mapping

from sympy import isprime

from .abgroup import FgAbGroup, GradedAbGroup, require_prime
from .errors import UnsupportedDegree
from .free_dgls import free_dgls_homology
from .witt import moebius_multicount

SHAPE_EVEN = (1, 0)
SHAPE_ODD = (2, 1)
SHAPES = (SHAPE_EVEN, SHAPE_ODD)

SEED_ENV = "DERIVED_LIE_DK_SEEDS"


def _check_shape(shape: tuple[int, int]) -> tuple[int, int]:
    shape = tuple(shape)
    if shape not in SHAPES:
        raise ValueError(f"shape must be (1, 0) or (2, 1), got {shape}")
    return shape


def _m(a: int, b: int) -> int:
    if a < 0 or b < 0 or a + b == 0:
        return 0
    return moebius_multicount(a, b)


@lru_cache(maxsize=None)
def rank_L(r: int, k: int, shape: tuple[int, int] = SHAPE_EVEN) -> int:
    """Rank of the degree ``k`` chain group of the weight ``r`` complex.

    For shape (1, 0) degrees run over ``0..r``; for shape (2, 1) over ``r..2r``.
    """
    shape = _check_shape(shape)
    if shape == SHAPE_EVEN:
        if k < 0 or k > r:
            return 0
        out = _m(k, r - k)
        if r % 2 == 0 and k % 4 == 2:
            out += rank_L(r // 2, k // 2, shape)
        return out
    j = k - r  # number of degree-two generators
    if j < 0 or j > r:
        return 0
    out = _m(j, r - j)
    if r % 2 == 0 and k % 4 == 2:
        out += rank_L(r // 2, k // 2, shape)
    return out


def degree_range(r: int, shape: tuple[int, int]) -> range:
    shape = _check_shape(shape)
    return range(0, r + 1) if shape == SHAPE_EVEN else range(r, 2 * r + 1)


@lru_cache(maxsize=None)
def rank_B(r: int, k: int, shape: tuple[int, int] = SHAPE_EVEN) -> int:
    """Rank of the boundaries inside degree ``k`` of the identity-map complex."""
    rng = degree_range(r, shape)
    if k < rng.start:
        return 0
    if k >= rng.stop:
        return 0
    return rank_L(r, k, shape) - rank_B(r, k - 1, shape)


# ---------------------------------------------------------------------------
# d_k data


def compute_dk(r: int, shape: tuple[int, int]) -> dict[int, dict[int, int]]:
    """p-ranks of the identity-map homology, by degree then prime, via SNF."""
    shape = _check_shape(shape)
    deg_a = 0 if shape == SHAPE_EVEN else 1
    out: dict[int, dict[int, int]] = {}
    for degree, group in free_dgls_homology(deg_a, r, 1).items():
        out[degree] = {p: group.p_rank(p) for p in group.primes()}
    return out


def _default_seed_text() -> str:
    return resources.files("derived_lie").joinpath("data/dk_seeds.json").read_text()


def load_seeds(path: str | os.PathLike | None = None) -> dict[tuple[tuple[int, int], int], dict]:
    """Read seed data keyed by ``(shape, r)``; each value maps degree -> prime -> d_k."""
    if path is None:
        path = os.environ.get(SEED_ENV)
    text = Path(path).read_text() if path else _default_seed_text()
    raw = json.loads(text)
    out: dict[tuple[tuple[int, int], int], dict] = {}
    for entry in raw["entries"]:
        shape = _check_shape(tuple(entry["shape"]))
        key = (shape, int(entry["r"]))
        table = out.setdefault(key, {})
        if "degree" in entry:
            table.setdefault(int(entry["degree"]), {})[int(entry["p"])] = int(entry["d"])
    return out


@dataclass(frozen=True)
class DkProvider:
    """Source of the ``d_k`` numbers.

    ``source`` is one of ``"default"``, ``"prime_zero"``, ``"oracle"`` or ``"seeded"``.
    The default policy uses zeros for prime ``r`` in shape (1, 0), the oracle
    for ``r <= oracle_max_r`` and seeds for ``r <= seeded_max_r``.
    """

    source: str = "default"
    # None means the packaged seed table
    seeds: Mapping[tuple[tuple[int, int], int], Mapping[int, Mapping[int, int]]] | None = None
    oracle_max_r: int = 4
    seeded_max_r: int = 7

    def __post_init__(self) -> None:
        if self.source not in ("default", "prime_zero", "oracle", "seeded"):
            raise ValueError(f"unknown d_k source {self.source!r}")

    def __hash__(self) -> int:
        return hash((self.source, self.oracle_max_r, self.seeded_max_r, id(self.seeds)))

    @classmethod
    def with_seed_file(cls, path: str | os.PathLike | None = None, **kw) -> "DkProvider":
        return cls(seeds=load_seeds(path), **kw)

    def table(self, r: int, shape: tuple[int, int]) -> Mapping[int, Mapping[int, int]]:
        """All ``d_k`` for one ``(r, shape)``: degree -> prime -> rank."""
        shape = _check_shape(shape)
        zero_ok = shape == SHAPE_EVEN and isprime(r)
        if self.source == "prime_zero":
            if zero_ok:
                return {}
            raise UnsupportedDegree(f"r={r}, shape={shape}", "d_k (prime_zero only covers prime r)")
        if self.source == "oracle":
            return _oracle_table(r, shape)
        if self.source == "seeded":
            return self._seeded(r, shape)
        if zero_ok or r == 1:
            return {}
        if r <= self.oracle_max_r:
            return _oracle_table(r, shape)
        if r <= self.seeded_max_r:
            return self._seeded(r, shape)
        raise UnsupportedDegree(f"r={r}, shape={shape}", f"d_k for weight {r}")

    def _seeded(self, r: int, shape: tuple[int, int]) -> Mapping[int, Mapping[int, int]]:
        seeds = self.seeds if self.seeds is not None else _packaged_seeds()
        try:
            return seeds[(shape, r)]
        except KeyError:
            raise UnsupportedDegree(f"r={r}, shape={shape}", "seeded d_k entry") from None

    def d(self, r: int, degree: int, p: int, shape: tuple[int, int]) -> int:
        return self.table(r, shape).get(degree, {}).get(p, 0)


@lru_cache(maxsize=None)
def _oracle_table(r: int, shape: tuple[int, int]) -> dict[int, dict[int, int]]:
    return compute_dk(r, shape)


@lru_cache(maxsize=1)
def _packaged_seeds():
    return load_seeds(None)


DEFAULT_PROVIDER = DkProvider()


# ---------------------------------------------------------------------------
# homology


def shape_for(n: int) -> tuple[tuple[int, int], int]:
    """Shape and shift factor: ``(1, 0)`` with shift ``r n`` for even ``n``, else ``(2, 1)`` with ``r (n - 1)``."""
    if n < 0:
        raise ValueError("dimension must be non-negative")
    if n % 2 == 0:
        return SHAPE_EVEN, n
    return SHAPE_ODD, n - 1


def universal_homology(
    r: int,
    shape: tuple[int, int],
    p: int,
    f: int,
    provider: DkProvider = DEFAULT_PROVIDER,
    max_degree: int | None = None,
) -> GradedAbGroup:
    """p-primary homology of the weight ``r`` complex on ``Z --p^f--> Z`` in the given shape."""
    require_prime(p)
    if f < 0:
        raise ValueError("exponent must be non-negative")
    out: dict[int, FgAbGroup] = {}
    table = None
    for k in degree_range(r, shape):
        if max_degree is not None and k > max_degree:
            break
        mk = rank_B(r, k, shape)
        if mk == 0:
            continue
        if table is None:
            table = provider.table(r, shape)
        dk = table.get(k, {}).get(p, 0)
        if f == 0:
            group = FgAbGroup(0, (p,) * dk)
        else:
            group = FgAbGroup(0, (p ** (f + 1),) * dk + (p**f,) * (mk - dk))
        if not group.is_zero():
            out[k] = group
    return GradedAbGroup(out)


def dgls_homology(
    r: int,
    n: int,
    p: int,
    f: int,
    provider: DkProvider = DEFAULT_PROVIDER,
    max_degree: int | None = None,
) -> GradedAbGroup:
    """p-primary homology of the weight ``r`` complex on ``(Z --p^f--> Z)[n]``."""
    shape, factor = shape_for(n)
    shift = r * factor
    window = None if max_degree is None else max_degree - shift
    return universal_homology(r, shape, p, f, provider, window).shift(shift)

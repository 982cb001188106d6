"""Exact arithmetic for finitely generated abelian groups and integer chain complexes.

Groups are kept in primary canonical form: a free rank plus a sorted tuple of
prime powers.  Smith normal form is computed fraction-free over Python ints.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from math import gcd
from typing import Iterable, Iterator, Mapping, Sequence

from sympy import factorint, isprime


class NotPrimeError(ValueError):
    """Raised when an operation needs a prime and gets something else."""


def require_prime(p: int) -> int:
    if not isinstance(p, int) or not isprime(p):
        raise NotPrimeError(f"{p!r} is not a prime")
    return p


def prime_power_split(n: int) -> list[int]:
    """Split a positive integer into its prime-power factors."""
    if n < 1:
        raise ValueError(f"cannot split {n}")
    return sorted(p**e for p, e in factorint(n).items())


def prime_power_parts(q: int) -> tuple[int, int]:
    """Return (p, k) with q = p**k; raise if q is not a prime power."""
    f = factorint(q)
    if len(f) != 1:
        raise ValueError(f"{q} is not a prime power")
    ((p, k),) = f.items()
    return p, k


def _torsion_key(q: int) -> tuple[int, int]:
    return prime_power_parts(q)


# ---------------------------------------------------------------------------
# groups


@dataclass(frozen=True)
class FgAbGroup:
    """A finitely generated abelian group Z^free_rank + sum of Z/p^k."""

    free_rank: int = 0
    torsion: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.free_rank < 0:
            raise ValueError("negative free rank")
        for q in self.torsion:
            prime_power_parts(q)
        canon = tuple(sorted(self.torsion, key=_torsion_key))
        object.__setattr__(self, "torsion", canon)

    @classmethod
    def from_orders(cls, orders: Iterable[int], free_rank: int = 0) -> "FgAbGroup":
        """Build from arbitrary cyclic orders; 1 is dropped, 0 means a free summand."""
        tors: list[int] = []
        for q in orders:
            if q == 0:
                free_rank += 1
            elif q != 1:
                tors.extend(prime_power_split(abs(q)))
        return cls(free_rank, tuple(tors))

    @classmethod
    def cyclic(cls, n: int) -> "FgAbGroup":
        return cls.from_orders([n])

    def is_zero(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __add__(self, other: "FgAbGroup") -> "FgAbGroup":
        return FgAbGroup(self.free_rank + other.free_rank, self.torsion + other.torsion)

    def __mul__(self, k: int) -> "FgAbGroup":
        return FgAbGroup(self.free_rank * k, self.torsion * k)

    __rmul__ = __mul__

    def order(self) -> int | None:
        if self.free_rank:
            return None
        out = 1
        for q in self.torsion:
            out *= q
        return out

    def primes(self) -> list[int]:
        return sorted({prime_power_parts(q)[0] for q in self.torsion})

    def p_rank(self, p: int) -> int:
        """Number of cyclic p-primary summands."""
        return sum(1 for q in self.torsion if q % p == 0)

    def invariant_factors(self) -> list[int]:
        """Invariant factors d1 | d2 | ... of the torsion part."""
        by_prime: dict[int, list[int]] = {}
        for q in self.torsion:
            p, _ = prime_power_parts(q)
            by_prime.setdefault(p, []).append(q)
        length = max((len(v) for v in by_prime.values()), default=0)
        factors = [1] * length
        for qs in by_prime.values():
            qs = sorted(qs)
            for i, q in enumerate(reversed(qs)):
                factors[length - 1 - i] *= q
        return factors

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        if self.free_rank:
            parts.append("Z" if self.free_rank == 1 else f"Z^{self.free_rank}")
        for q, mult in Counter(self.torsion).items():
            parts.append(f"Z/{q}" if mult == 1 else f"(Z/{q})^{mult}")
        return " + ".join(parts)


ZERO = FgAbGroup()
Z = FgAbGroup(1)


def direct_sum(groups: Iterable[FgAbGroup]) -> FgAbGroup:
    out = ZERO
    for g in groups:
        out = out + g
    return out


def tensor(g: FgAbGroup, h: FgAbGroup) -> FgAbGroup:
    """g (x) h, computed summand by summand."""
    free = g.free_rank * h.free_rank
    tors = list(g.torsion) * h.free_rank + list(h.torsion) * g.free_rank
    for a in g.torsion:
        for b in h.torsion:
            c = gcd(a, b)
            if c > 1:
                tors.append(c)
    return FgAbGroup(free, tuple(tors))


def tor(g: FgAbGroup, h: FgAbGroup) -> FgAbGroup:
    """Tor_1(g, h)."""
    tors = [gcd(a, b) for a in g.torsion for b in h.torsion]
    return FgAbGroup.from_orders(tors)


def hom(g: FgAbGroup, h: FgAbGroup) -> FgAbGroup:
    free = g.free_rank * h.free_rank
    tors = list(h.torsion) * g.free_rank
    tors += [gcd(a, b) for a in g.torsion for b in h.torsion]
    return FgAbGroup.from_orders(tors, free)


def ext(g: FgAbGroup, h: FgAbGroup) -> FgAbGroup:
    """Ext^1(g, h)."""
    tors = list(g.torsion) * h.free_rank
    tors += [gcd(a, b) for a in g.torsion for b in h.torsion]
    return FgAbGroup.from_orders(tors)


def p_part(g: FgAbGroup, p: int) -> FgAbGroup:
    """p-primary torsion of g (free part discarded)."""
    require_prime(p)
    return FgAbGroup(0, tuple(q for q in g.torsion if q % p == 0))


def mod_p(g: FgAbGroup, p: int) -> FgAbGroup:
    """g (x) Z/p."""
    require_prime(p)
    return tensor(g, FgAbGroup.cyclic(p))


# ---------------------------------------------------------------------------
# graded groups


@dataclass(frozen=True)
class GradedAbGroup:
    """Finite map degree -> nonzero FgAbGroup."""

    components: Mapping[int, FgAbGroup] = field(default_factory=dict)

    def __post_init__(self) -> None:
        clean = {int(k): v for k, v in sorted(self.components.items()) if not v.is_zero()}
        object.__setattr__(self, "components", clean)

    def __hash__(self) -> int:
        return hash(tuple(self.components.items()))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GradedAbGroup):
            return NotImplemented
        return self.components == other.components

    def __getitem__(self, degree: int) -> FgAbGroup:
        return self.components.get(degree, ZERO)

    def __iter__(self) -> Iterator[int]:
        return iter(self.components)

    def items(self):
        return self.components.items()

    def degrees(self) -> list[int]:
        return list(self.components)

    def is_zero(self) -> bool:
        return not self.components

    def __bool__(self) -> bool:
        return bool(self.components)

    def __add__(self, other: "GradedAbGroup") -> "GradedAbGroup":
        out = dict(self.components)
        for k, v in other.components.items():
            out[k] = out.get(k, ZERO) + v
        return GradedAbGroup(out)

    def shift(self, s: int) -> "GradedAbGroup":
        return GradedAbGroup({k + s: v for k, v in self.components.items()})

    def p_part(self, p: int) -> "GradedAbGroup":
        return GradedAbGroup({k: p_part(v, p) for k, v in self.components.items()})

    def truncate(self, lo: int | None = None, hi: int | None = None) -> "GradedAbGroup":
        return GradedAbGroup(
            {
                k: v
                for k, v in self.components.items()
                if (lo is None or k >= lo) and (hi is None or k <= hi)
            }
        )

    def derived_mod_p(self, p: int) -> "GradedAbGroup":
        """Homotopy of X (x)^L Z/p for X with these homotopy groups."""
        out: dict[int, FgAbGroup] = {}
        zp = FgAbGroup.cyclic(p)
        for k, v in self.components.items():
            out[k] = out.get(k, ZERO) + tensor(v, zp)
            out[k + 1] = out.get(k + 1, ZERO) + tor(v, zp)
        return GradedAbGroup(out)

    def __str__(self) -> str:
        if not self.components:
            return "0"
        return ", ".join(f"{k}: {v}" for k, v in self.components.items())

    @classmethod
    def concentrated(cls, degree: int, group: FgAbGroup) -> "GradedAbGroup":
        return cls({degree: group})


def graded_sum(parts: Iterable[GradedAbGroup]) -> GradedAbGroup:
    out: dict[int, FgAbGroup] = {}
    for g in parts:
        for k, v in g.components.items():
            out[k] = out.get(k, ZERO) + v
    return GradedAbGroup(out)


# ---------------------------------------------------------------------------
# matrices


@dataclass(frozen=True)
class IntMatrix:
    """Dense integer matrix, rows x cols."""

    rows: int
    cols: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise ValueError("entry count does not match shape")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int | None = None) -> "IntMatrix":
        rows = [tuple(int(x) for x in r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        return cls(len(rows), cols, tuple(rows))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(rows, cols, tuple((0,) * cols for _ in range(rows)))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(n, n, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i][j]

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        cols_o = list(zip(*other.entries)) if other.rows else [()] * other.cols
        out = [
            tuple(sum(a * b for a, b in zip(row, col)) for col in cols_o)
            for row in self.entries
        ]
        return IntMatrix(self.rows, other.cols, tuple(out))

    def transpose(self) -> "IntMatrix":
        return IntMatrix(self.cols, self.rows, tuple(zip(*self.entries)) if self.rows else ())

    def is_zero(self) -> bool:
        return all(x == 0 for r in self.entries for x in r)

    def to_lists(self) -> list[list[int]]:
        return [list(r) for r in self.entries]


def smith_normal_form(m: IntMatrix) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Return (D, U, V) with D = U m V diagonal, d1 | d2 | ..., U and V unimodular."""
    rows, cols = m.rows, m.cols
    a = [list(r) for r in m.entries]
    u = [[int(i == j) for j in range(rows)] for i in range(rows)]
    v = [[int(i == j) for j in range(cols)] for i in range(cols)]

    def swap_rows(i: int, j: int) -> None:
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i: int, j: int) -> None:
        for r in a:
            r[i], r[j] = r[j], r[i]
        for r in v:
            r[i], r[j] = r[j], r[i]

    def add_row(src: int, dst: int, q: int) -> None:
        # row_dst += q * row_src
        ra, rs = a[dst], a[src]
        for k in range(cols):
            ra[k] += q * rs[k]
        ua, us = u[dst], u[src]
        for k in range(rows):
            ua[k] += q * us[k]

    def add_col(src: int, dst: int, q: int) -> None:
        for r in a:
            r[dst] += q * r[src]
        for r in v:
            r[dst] += q * r[src]

    t = 0
    while t < min(rows, cols):
        # smallest nonzero entry in the remaining block
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                x = a[i][j]
                if x and (best is None or abs(x) < best[0]):
                    best = (abs(x), i, j)
                    if best[0] == 1:
                        break
            if best is not None and best[0] == 1:
                break
        if best is None:
            break
        _, i, j = best
        swap_rows(t, i)
        swap_cols(t, j)
        while True:
            done = True
            for i in range(t + 1, rows):
                if a[i][t]:
                    q = a[i][t] // a[t][t]
                    add_row(t, i, -q)
                    if a[i][t]:
                        done = False
            for j in range(t + 1, cols):
                if a[t][j]:
                    q = a[t][j] // a[t][t]
                    add_col(t, j, -q)
                    if a[t][j]:
                        done = False
            if done:
                # enforce divisibility into the rest of the block
                bad = None
                for i in range(t + 1, rows):
                    for j in range(t + 1, cols):
                        if a[i][j] % a[t][t]:
                            bad = i
                            break
                    if bad is not None:
                        break
                if bad is None:
                    break
                add_row(bad, t, 1)
                continue
            # move the smallest entry of row/column t to the pivot
            cand = [(abs(a[i][t]), i, t) for i in range(t, rows) if a[i][t]]
            cand += [(abs(a[t][j]), t, j) for j in range(t, cols) if a[t][j]]
            _, i, j = min(cand)
            swap_rows(t, i)
            swap_cols(t, j)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]
        t += 1
    return (
        IntMatrix.from_rows(a, cols),
        IntMatrix.from_rows(u, rows),
        IntMatrix.from_rows(v, cols),
    )


def elementary_divisors(rows: Sequence[Sequence[int]] | Sequence[Mapping[int, int]]) -> list[int]:
    """Nonzero invariant factors of an integer matrix (no transforms kept).

    Accepts dense rows or sparse rows given as {column: value} dicts.
    """
    work: list[dict[int, int]] = []
    for r in rows:
        if isinstance(r, Mapping):
            d = {k: v for k, v in r.items() if v}
        else:
            d = {k: v for k, v in enumerate(r) if v}
        if d:
            work.append(d)
    diag: list[int] = []
    while work:
        # pick a pivot of minimal absolute value, preferring short rows
        best = None
        for ri, r in enumerate(work):
            for c, x in r.items():
                key = (abs(x), len(r))
                if best is None or key < best[0]:
                    best = (key, ri, c)
            if best is not None and best[0][0] == 1 and best[0][1] <= 2:
                break
        _, ri, c = best
        prow = work.pop(ri)
        pv = prow[c]
        rest: list[dict[int, int]] = []
        remainder_found = False
        for r in work:
            x = r.get(c)
            if x:
                q = x // pv
                for k, y in prow.items():
                    nv = r.get(k, 0) - q * y
                    if nv:
                        r[k] = nv
                    else:
                        r.pop(k, None)
                if r.get(c):
                    remainder_found = True
            if r:
                rest.append(r)
        if remainder_found:
            rest.append(prow)
            work = rest
            continue
        # column c is now clear outside the pivot row; clear the pivot row
        others = {k: y for k, y in prow.items() if k != c}
        if any(y % pv for y in others.values()):
            # column operations: reduce entries of the pivot row by the pivot
            col_rem = {}
            for k, y in others.items():
                q = y // pv
                rem = y - q * pv
                # the column op col_k -= q col_c only touches the pivot row
                if rem:
                    col_rem[k] = rem
            if col_rem:
                newrow = {c: pv}
                newrow.update(col_rem)
                rest.append(newrow)
                work = rest
                continue
        diag.append(abs(pv))
        work = rest
    return _normalize_divisors(diag)


def _normalize_divisors(diag: list[int]) -> list[int]:
    """Turn any diagonal into invariant factors via prime-power regrouping."""
    g = FgAbGroup.from_orders([d for d in diag if d != 1])
    inv = g.invariant_factors()
    return [1] * (len(diag) - len(inv)) + inv


def matrix_rank(rows: Sequence[Sequence[int]] | Sequence[Mapping[int, int]]) -> int:
    return len(elementary_divisors(rows))


# ---------------------------------------------------------------------------
# chain complexes


@dataclass(frozen=True)
class ChainComplex:
    """Bounded complex of free abelian groups with d_n: C_n -> C_{n-1}.

    ``ranks[n]`` is the rank of C_n; ``differentials[n]`` is a rank(n-1) x rank(n)
    matrix.  ``labels`` optionally names the basis of each C_n.
    """

    ranks: Mapping[int, int]
    differentials: Mapping[int, IntMatrix]
    labels: Mapping[int, tuple[str, ...]] = field(default_factory=dict)

    def __post_init__(self) -> None:
        ranks = {int(k): int(v) for k, v in sorted(self.ranks.items())}
        object.__setattr__(self, "ranks", ranks)
        for n, d in self.differentials.items():
            if d.rows != ranks.get(n - 1, 0) or d.cols != ranks.get(n, 0):
                raise ValueError(f"differential d_{n} has shape {d.rows}x{d.cols}")
        for n, d in self.differentials.items():
            below = self.differentials.get(n - 1)
            if below is not None and d.rows and d.cols and below.rows:
                if not (below @ d).is_zero():
                    raise ValueError(f"d_{n - 1} d_{n} != 0")
        for n, names in self.labels.items():
            if len(names) != ranks.get(n, 0):
                raise ValueError(f"label count mismatch in degree {n}")

    def rank(self, n: int) -> int:
        return self.ranks.get(n, 0)

    def d(self, n: int) -> IntMatrix:
        m = self.differentials.get(n)
        if m is None:
            return IntMatrix.zeros(self.rank(n - 1), self.rank(n))
        return m

    def degrees(self) -> list[int]:
        return [n for n, r in self.ranks.items() if r]

    def shift(self, s: int) -> "ChainComplex":
        return ChainComplex(
            {k + s: v for k, v in self.ranks.items()},
            {k + s: v for k, v in self.differentials.items()},
            {k + s: v for k, v in self.labels.items()},
        )

    def tensor_mod_p_ranks(self, p: int) -> dict[int, int]:
        """Dimensions of H_*(C (x) Z/p)."""
        out = {}
        for n in self.degrees():
            r_out = _rank_mod_p(self.d(n), p)
            r_in = _rank_mod_p(self.d(n + 1), p)
            dim = self.rank(n) - r_out - r_in
            if dim:
                out[n] = dim
        return out


def _rank_mod_p(m: IntMatrix, p: int) -> int:
    if not m.rows or not m.cols:
        return 0
    rows = [[x % p for x in r] for r in m.entries]
    rank = 0
    ncols = m.cols
    for c in range(ncols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = pow(rows[rank][c], -1, p)
        rows[rank] = [(x * inv) % p for x in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][c]:
                f = rows[i][c]
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def rank_mod_p(m: IntMatrix, p: int) -> int:
    require_prime(p)
    return _rank_mod_p(m, p)


def homology(c: ChainComplex, n: int) -> FgAbGroup:
    """H_n(c) = ker d_n / im d_{n+1}."""
    rank_n = c.rank(n)
    if not rank_n:
        return ZERO
    out_div = elementary_divisors(c.d(n).entries) if c.d(n).rows else []
    in_div = elementary_divisors(c.d(n + 1).entries) if c.d(n + 1).cols else []
    free = rank_n - len(out_div) - len(in_div)
    return FgAbGroup.from_orders([q for q in in_div if q != 1], free)


def graded_homology(c: ChainComplex) -> GradedAbGroup:
    return GradedAbGroup({n: homology(c, n) for n in c.degrees()})

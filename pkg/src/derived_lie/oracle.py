"""Brute-force chain complexes used as independent ground truth.

Everything here is built from explicit monomial bases and reduced to integer
homology with Smith normal form.  Nothing in this module consults the closed
formulas of the engine, so agreement between the two is a real check.

* :func:`build_dgls` realises the weight ``m`` part of the free DG Lie ring with
  squares on a two-term complex ``B -> A`` inside the tensor ring on bases of
  ``A`` and ``B``.
* :func:`printed_delta` writes down the explicit middle differentials of the
  low-weight complexes on tensor bases, for comparison with the generic ones.
* :func:`koszul_complex`, :func:`dual_de_rham` and :func:`v_functor_dim` work
  with exterior, symmetric and divided powers of ``Z^r``.
* :func:`simplicial_derived` applies a quadratic functor degreewise to the
  Dold-Kan model of a two-term resolution and takes normalized chains.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, combinations_with_replacement, product

from .abgroup import (
    ChainComplex,
    FgAbGroup,
    GradedAbGroup,
    IntMatrix,
    elementary_divisors,
    graded_homology,
    rank_mod_p,
)
from .errors import UnsupportedDegree
from .free_dgls import Vec, Word, _add, _coordinates, _echelon, _product

MAX_KOSZUL_DEGREE = 6
MAX_KOSZUL_RANK = 4
MAX_SIMPLICIAL_CAP = 8


@dataclass(frozen=True)
class TwoTermMap:
    """A map ``f: B -> A`` of free abelian groups, stored as a rank_A x rank_B matrix."""

    rank_B: int
    rank_A: int
    f: IntMatrix

    def __post_init__(self) -> None:
        if self.rank_A < 0 or self.rank_B < 0:
            raise ValueError("ranks must be non-negative")
        if (self.f.rows, self.f.cols) != (self.rank_A, self.rank_B):
            raise ValueError(
                f"f has shape {self.f.rows}x{self.f.cols}, expected {self.rank_A}x{self.rank_B}"
            )

    @classmethod
    def scalar(cls, k: int, rank: int = 1) -> "TwoTermMap":
        """``Z^rank -> Z^rank`` given by ``k`` times the identity."""
        rows = [[k if i == j else 0 for j in range(rank)] for i in range(rank)]
        return cls(rank, rank, IntMatrix.from_rows(rows, rank))

    @classmethod
    def diagonal(cls, entries: list[int]) -> "TwoTermMap":
        n = len(entries)
        rows = [[entries[i] if i == j else 0 for j in range(n)] for i in range(n)]
        return cls(n, n, IntMatrix.from_rows(rows, n))

    @classmethod
    def from_rows(cls, rows: list[list[int]]) -> "TwoTermMap":
        m = IntMatrix.from_rows(rows)
        return cls(m.cols, m.rows, m)

    def cokernel(self) -> FgAbGroup:
        divisors = elementary_divisors(self.f.entries) if self.f.rows and self.f.cols else []
        return FgAbGroup.from_orders([q for q in divisors if q != 1], self.rank_A - len(divisors))


class GenericDGLS:
    """Free DG Lie ring with squares on ``B -> A`` with several generators.

    Letters ``0 .. rank_A-1`` are the basis of ``A`` in degree ``deg_a``; the
    next ``rank_B`` letters are the basis of ``B`` one degree higher.
    """

    def __init__(self, c: TwoTermMap, deg_a: int) -> None:
        self.c = c
        self.deg_a = deg_a
        self._pieces: dict[tuple[int, int], list[Vec]] = {}

    def _letter_degree(self, x: int) -> int:
        return self.deg_a + (x >= self.c.rank_A)

    def degree(self, n_a: int, n_b: int) -> int:
        return n_a * self.deg_a + n_b * (self.deg_a + 1)

    def _order(self, n_a: int, n_b: int) -> list[Word]:
        letters = range(self.c.rank_A + self.c.rank_B)
        ra = self.c.rank_A
        return [
            w for w in product(letters, repeat=n_a + n_b) if sum(x >= ra for x in w) == n_b
        ]

    def _bracket(self, x: Vec, dx: int, y: Vec, dy: int) -> Vec:
        out = _product(x, y)
        sign = -1 if (dx * dy) % 2 == 0 else 1
        for w, coeff in _product(y, x).items():
            _add(out, w, sign * coeff)
        return out

    def piece(self, n_a: int, n_b: int) -> list[Vec]:
        """Echelon lattice basis of the component with ``n_a`` A-letters and ``n_b`` B-letters."""
        key = (n_a, n_b)
        if key in self._pieces:
            return self._pieces[key]
        ra, rb = self.c.rank_A, self.c.rank_B
        if n_a < 0 or n_b < 0 or n_a + n_b == 0:
            basis: list[Vec] = []
        elif n_a + n_b == 1:
            letters = range(ra) if n_a else range(ra, ra + rb)
            basis = [{(x,): 1} for x in letters]
        else:
            span: list[Vec] = []
            for i in range(n_a + 1):
                for j in range(n_b + 1):
                    if i + j == 0 or (i, j) == (n_a, n_b) or (i, j) > (n_a - i, n_b - j):
                        continue
                    dl, dr = self.degree(i, j), self.degree(n_a - i, n_b - j)
                    for x in self.piece(i, j):
                        for y in self.piece(n_a - i, n_b - j):
                            span.append(self._bracket(x, dl, y, dr))
            if n_a % 2 == 0 and n_b % 2 == 0 and self.degree(n_a // 2, n_b // 2) % 2:
                span.extend(_product(x, x) for x in self.piece(n_a // 2, n_b // 2))
            basis = _echelon(span, self._order(n_a, n_b))
        self._pieces[key] = basis
        return basis

    def differential(self, v: Vec) -> Vec:
        """The derivation extending ``d(b_j) = sum_i f[i][j] a_i``."""
        ra = self.c.rank_A
        out: Vec = {}
        for w, coeff in v.items():
            deg = 0
            for pos, x in enumerate(w):
                if x >= ra:
                    sign = -1 if deg % 2 else 1
                    j = x - ra
                    for i in range(ra):
                        fij = self.c.f[i, j]
                        if fij:
                            _add(out, w[:pos] + (i,) + w[pos + 1 :], sign * fij * coeff)
                deg += self._letter_degree(x)
        return out

    def label(self, w: Word) -> str:
        ra = self.c.rank_A
        return "⊗".join(f"a{x + 1}" if x < ra else f"b{x - ra + 1}" for x in w)

    def _pivots(self, basis: list[Vec], order: list[Word]) -> list[Word]:
        return [next(w for w in order if row.get(w)) for row in basis]

    def matrix(self, n_a: int, n_b: int) -> IntMatrix:
        """The differential from piece (n_a, n_b) to piece (n_a + 1, n_b - 1)."""
        src = self.piece(n_a, n_b)
        tgt = self.piece(n_a + 1, n_b - 1)
        pivots = self._pivots(tgt, self._order(n_a + 1, n_b - 1))
        cols = [_coordinates(self.differential(x), tgt, pivots) for x in src]
        rows = tuple(tuple(cols[j][i] for j in range(len(src))) for i in range(len(tgt)))
        return IntMatrix(len(tgt), len(src), rows)

    def complex(self, weight: int) -> ChainComplex:
        ranks: dict[int, int] = {}
        diffs: dict[int, IntMatrix] = {}
        labels: dict[int, tuple[str, ...]] = {}
        for n_b in range(weight + 1):
            n_a = weight - n_b
            basis = self.piece(n_a, n_b)
            deg = self.degree(n_a, n_b)
            ranks[deg] = len(basis)
            pivots = self._pivots(basis, self._order(n_a, n_b))
            labels[deg] = tuple(self.label(w) for w in pivots)
        for n_b in range(1, weight + 1):
            diffs[self.degree(weight - n_b, n_b)] = self.matrix(weight - n_b, n_b)
        return ChainComplex(ranks, diffs, labels)


def _dgls_complex(m: int, c: TwoTermMap, shifted: bool) -> ChainComplex:
    return GenericDGLS(c, 1 if shifted else 0).complex(m)


def build_dgls(m: int, c: TwoTermMap, shifted: bool = False) -> ChainComplex:
    """Weight ``m`` part of the universal DGLS on ``B -> A`` (or its suspension).

    Unshifted, ``A`` sits in degree 0 and ``B`` in degree 1; shifted, both move up
    by one.  Supported for ``m <= 4`` unshifted and ``m <= 3`` shifted.
    """
    if m < 1 or m > 4 or (shifted and m > 3):
        raise UnsupportedDegree(f"build_dgls(m={m}, shifted={shifted})")
    return _dgls_complex(m, c, shifted)


def build_prime_truncated(p: int, c: TwoTermMap) -> ChainComplex:
    """The weight ``p`` complex on ``P -> Q`` representing the derived functor at the cokernel.

    Its homology is ``L_i L^p(coker f)`` for injective ``f``.  Weights 2 and 3
    are fully supported; weight 5 is available for ranks at most 2.
    """
    if p not in (2, 3, 5):
        raise UnsupportedDegree(f"prime truncated complex for p={p}")
    if p == 5 and max(c.rank_A, c.rank_B) > 2:
        raise UnsupportedDegree("prime truncated complex for p=5 above rank 2")
    return _dgls_complex(p, c, False)


# ---------------------------------------------------------------------------
# explicit middle differentials on tensor bases


def _f_of(c: TwoTermMap, j: int) -> list[tuple[int, int]]:
    return [(i, c.f[i, j]) for i in range(c.rank_A) if c.f[i, j]]


def _tensor_index(shape: tuple[int, ...], idx: tuple[int, ...]) -> int:
    out = 0
    for size, i in zip(shape, idx):
        out = out * size + i
    return out


def _gamma2_basis(n: int) -> list[tuple[int, int]]:
    """Basis of Gamma_2(Z^n): (i, i) for gamma_2(e_i), (i, j) with i < j for e_i e_j."""
    return [(i, j) for i in range(n) for j in range(i, n)]


def _gamma2_product(i: int, j: int) -> tuple[tuple[int, int], int]:
    """e_i * e_j in Gamma_2 as (basis element, coefficient)."""
    if i == j:
        return (i, i), 2
    return (min(i, j), max(i, j)), 1


def printed_delta(name: str, c: TwoTermMap) -> IntMatrix:
    """The explicit middle differentials of the weight 3 and 4 complexes.

    ``delta``: B⊗A⊗B -> B⊗A⊗A (weight 3); ``delta_prime``: the same spaces for the
    suspension; ``delta2``: B⊗A⊗B⊗B -> B⊗A⊗A⊗B ⊕ Γ2(B⊗A) and ``delta1``:
    B⊗A⊗A⊗B ⊕ Γ2(B⊗A) -> B⊗A⊗A⊗A (weight 4).
    """
    ra, rb = c.rank_A, c.rank_B
    bab = (rb, ra, rb)
    baa = (rb, ra, ra)
    cols: list[dict[int, int]] = []

    def put(col: dict[int, int], row: int, v: int) -> None:
        col[row] = col.get(row, 0) + v

    if name in ("delta", "delta_prime"):
        for b1, a, b2 in product(range(rb), range(ra), range(rb)):
            col: dict[int, int] = {}
            if name == "delta":
                for i, v in _f_of(c, b2):
                    put(col, _tensor_index(baa, (b1, a, i)), v)
                    put(col, _tensor_index(baa, (b1, i, a)), -v)
                for i, v in _f_of(c, b1):
                    put(col, _tensor_index(baa, (b2, i, a)), v)
            else:
                for i, v in _f_of(c, b1):
                    put(col, _tensor_index(baa, (b2, a, i)), v)
                    put(col, _tensor_index(baa, (b2, i, a)), v)
                for i, v in _f_of(c, b2):
                    put(col, _tensor_index(baa, (b1, a, i)), v)
            cols.append(col)
        n_rows = rb * ra * ra
    elif name == "delta2":
        baab = (rb, ra, ra, rb)
        ba = (rb, ra)
        g2 = _gamma2_basis(rb * ra)
        g2_index = {key: rb * ra * ra * rb + n for n, key in enumerate(g2)}
        for b1, a, b2, b3 in product(range(rb), range(ra), range(rb), range(rb)):
            col = {}
            for i, v in _f_of(c, b1):
                put(col, _tensor_index(baab, (b2, a, i, b3)), v)
                put(col, _tensor_index(baab, (b2, i, a, b3)), -v)
            for i, v in _f_of(c, b2):
                put(col, _tensor_index(baab, (b1, a, i, b3)), -v)
            for i, v in _f_of(c, b3):
                put(col, _tensor_index(baab, (b1, a, i, b2)), v)
                key, mult = _gamma2_product(
                    _tensor_index(ba, (b2, i)), _tensor_index(ba, (b1, a))
                )
                put(col, g2_index[key], mult * v)
            cols.append(col)
        n_rows = rb * ra * ra * rb + len(g2)
    elif name == "delta1":
        baaa = (rb, ra, ra, ra)
        for b1, a1, a2, b2 in product(range(rb), range(ra), range(ra), range(rb)):
            col = {}
            for i, v in _f_of(c, b1):
                put(col, _tensor_index(baaa, (b2, a2, i, a1)), v)
                put(col, _tensor_index(baaa, (b2, a2, a1, i)), -v)
                put(col, _tensor_index(baaa, (b2, i, a1, a2)), -v)
                put(col, _tensor_index(baaa, (b2, a1, i, a2)), v)
            for i, v in _f_of(c, b2):
                put(col, _tensor_index(baaa, (b1, a1, a2, i)), -v)
            cols.append(col)

        # gamma_2(x) -> beta(x, x) with beta(b⊗a, b'⊗a') = b⊗a⊗f(b')⊗a' - b⊗f(b')⊗a⊗a'
        def beta(x: tuple[int, int], y: tuple[int, int], col: dict[int, int]) -> None:
            (b, a), (b2_, a2_) = x, y
            for i, v in _f_of(c, b2_):
                put(col, _tensor_index(baaa, (b, a, i, a2_)), v)
                put(col, _tensor_index(baaa, (b, i, a, a2_)), -v)

        pairs = [(b, a) for b in range(rb) for a in range(ra)]
        for s, t in _gamma2_basis(rb * ra):
            col = {}
            beta(pairs[s], pairs[t], col)
            if s != t:
                beta(pairs[t], pairs[s], col)
            cols.append(col)
        n_rows = rb * ra * ra * ra
    else:
        raise ValueError(f"unknown differential {name!r}")
    rows = [[0] * len(cols) for _ in range(n_rows)]
    for j, col in enumerate(cols):
        for i, v in col.items():
            rows[i][j] = v
    return IntMatrix.from_rows(rows, len(cols))


# source piece (A-letters, B-letters) of each explicit differential
_GENERIC_SOURCE = {
    "delta": (False, (1, 2)),
    "delta_prime": (True, (1, 2)),
    "delta2": (False, (1, 3)),
    "delta1": (False, (2, 2)),
}


def _divisors(m: IntMatrix) -> list[int]:
    return elementary_divisors(m.entries) if m.rows and m.cols else []


@dataclass(frozen=True)
class DeltaComparison:
    name: str
    printed: tuple[int, ...]
    generic: tuple[int, ...]
    printed_shape: tuple[int, int]
    generic_shape: tuple[int, int]

    @property
    def agrees(self) -> bool:
        return self.printed == self.generic and self.printed_shape == self.generic_shape


def compare_printed_delta(name: str, c: TwoTermMap) -> DeltaComparison:
    """Elementary divisors of an explicit differential against the generic construction."""
    shifted, (n_a, n_b) = _GENERIC_SOURCE[name]
    printed = printed_delta(name, c)
    generic = GenericDGLS(c, 1 if shifted else 0).matrix(n_a, n_b)
    return DeltaComparison(
        name,
        tuple(_divisors(printed)),
        tuple(_divisors(generic)),
        (printed.rows, printed.cols),
        (generic.rows, generic.cols),
    )


# ---------------------------------------------------------------------------
# special functor kernels


@dataclass(frozen=True)
class KernelResult:
    """Mod ``p`` kernel of one differential: its dimension and a basis."""

    dim: int
    basis: tuple[tuple[int, ...], ...] = field(default=(), repr=False)


def _kernel_mod_p(m: IntMatrix, p: int) -> list[list[int]]:
    rows = [[x % p for x in r] for r in m.entries]
    ncols = m.cols
    pivots: list[int] = []
    rank = 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][col]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = pow(rows[rank][col], -1, p)
        rows[rank] = [(x * inv) % p for x in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][col]:
                fct = rows[i][col]
                rows[i] = [(x - fct * y) % p for x, y in zip(rows[i], rows[rank])]
        pivots.append(col)
        rank += 1
    free = [j for j in range(ncols) if j not in pivots]
    basis = []
    for j in free:
        v = [0] * ncols
        v[j] = 1
        for r, pc in enumerate(pivots):
            v[pc] = (-rows[r][j]) % p
        basis.append(v)
    return basis


@lru_cache(maxsize=None)
def special_n_kernel(d: int, p: int, r: int, shifted: bool = True) -> KernelResult:
    """Mod ``p`` kernel of the second differential of the weight ``d`` DGLS on ``id: Z^r -> Z^r``.

    Shifted: ``C_{2d-1} -> C_{2d-2}`` of the suspended complex.  Unshifted:
    ``C_{d-1} -> C_{d-2}``.  Both are the top-but-one differential.
    """
    if d < 1 or d > 4:
        raise UnsupportedDegree(f"special functor kernel for d={d}")
    if r == 0:
        return KernelResult(0)
    c = TwoTermMap.scalar(1, r)
    g = GenericDGLS(c, 1 if shifted else 0)
    if d == 1:
        return KernelResult(r, tuple(tuple(int(i == j) for i in range(r)) for j in range(r)))
    m = g.matrix(1, d - 1)
    if m.rows == 0:
        return KernelResult(m.cols)
    basis = _kernel_mod_p(m, p)
    assert m.cols - rank_mod_p(m, p) == len(basis)
    return KernelResult(len(basis), tuple(tuple(v) for v in basis))


# ---------------------------------------------------------------------------
# Koszul and dual de Rham complexes


def _guard(n: int, r: int) -> None:
    if n > MAX_KOSZUL_DEGREE or r > MAX_KOSZUL_RANK or n < 0 or r < 0:
        raise UnsupportedDegree(f"complex of degree {n} on rank {r}")


def _exterior_symmetric_complex(n: int, r: int, divided: bool) -> ChainComplex:
    """``Λ^i ⊗ SP^{n-i}`` (or ``Γ_{n-i}``) with d(s ∧ ... ⊗ y) = Σ (-1)^k (... ŝ_k ...) ⊗ s_k y."""
    _guard(n, r)
    bases: dict[int, list[tuple[tuple[int, ...], tuple[int, ...]]]] = {}
    for i in range(n + 1):
        bases[i] = [
            (s, y)
            for s in combinations(range(r), i)
            for y in combinations_with_replacement(range(r), n - i)
        ]
    index = {i: {b: k for k, b in enumerate(bs)} for i, bs in bases.items()}
    ranks = {i: len(bs) for i, bs in bases.items()}
    diffs: dict[int, IntMatrix] = {}
    for i in range(1, n + 1):
        rows = [[0] * ranks[i] for _ in range(ranks[i - 1])]
        for col, (s, y) in enumerate(bases[i]):
            for k, x in enumerate(s):
                rest = s[:k] + s[k + 1 :]
                new_y = tuple(sorted(y + (x,)))
                coeff = (-1) ** k
                if divided:
                    coeff *= new_y.count(x)
                rows[index[i - 1][(rest, new_y)]][col] += coeff
        diffs[i] = IntMatrix.from_rows(rows, ranks[i])
    sym = "Γ" if divided else "SP"

    def label(s: tuple[int, ...], y: tuple[int, ...]) -> str:
        left = "∧".join(f"e{x + 1}" for x in s) or "1"
        right = "·".join(f"e{x + 1}" for x in y) or "1"
        return f"{left}⊗{sym}({right})"

    labels = {i: tuple(label(s, y) for s, y in bs) for i, bs in bases.items()}
    return ChainComplex(ranks, diffs, labels)


def koszul_complex(n: int, r: int) -> ChainComplex:
    """``0 -> Λ^n -> Λ^{n-1}⊗A -> ... -> SP^n -> 0`` for ``A = Z^r``; degree i holds Λ^i ⊗ SP^{n-i}."""
    return _exterior_symmetric_complex(n, r, divided=False)


def dual_de_rham(n: int, r: int) -> ChainComplex:
    """``C^n(A)`` with ``C^n_i = Λ^i(A) ⊗ Γ_{n-i}(A)`` for ``A = Z^r``."""
    return _exterior_symmetric_complex(n, r, divided=True)


def v_functor_dim(p: int, k: int, r: int) -> int:
    """Rank of ``V_{p,k}(Z^r)``, the kernel of ``Λ^{p-k}⊗SP^k -> Λ^{p-k-1}⊗SP^{k+1}``."""
    if not 1 <= k <= p - 1:
        raise ValueError("need 1 <= k <= p - 1")
    c = koszul_complex(p, r)
    i = p - k
    return c.rank(i) - len(_divisors(c.d(i)))


# ---------------------------------------------------------------------------
# simplicial models

QUADRATIC_FUNCTORS = ("Lambda2", "Gamma2", "SP2", "Tensor2")


def _surjections(q: int, j: int) -> list[tuple[int, ...]]:
    """Order-preserving surjections [q] -> [j] as value tuples."""
    out = []
    for jumps in combinations(range(1, q + 1), j):
        vals, level = [], 0
        for t in range(q + 1):
            if t in jumps:
                level += 1
            vals.append(level)
        out.append(tuple(vals))
    return out


def _is_degenerate_at(sigma: tuple[int, ...], i: int) -> bool:
    return sigma[i] == sigma[i + 1]


def _dk_basis(q: int, n: int, free: bool) -> list[tuple[int, ...]]:
    tops = [n] if free else [n, n + 1]
    return [s for j in tops if j <= q for s in _surjections(q, j)]


def _dk_face(sigma: tuple[int, ...], i: int, k: int, n: int) -> tuple[tuple[int, ...], int] | None:
    """Face ``d_i`` on the summand indexed by ``sigma``; the resolution is ``Z -k-> Z`` in degrees n+1, n."""
    tau = sigma[:i] + sigma[i + 1 :]
    top = sigma[-1]
    if len(set(tau)) == top + 1:
        return tau, 1
    missing = next(v for v in range(top + 1) if v not in tau)
    if missing != top or top != n + 1:
        return None
    return tau, k


def _monomials(functor: str, basis: list[tuple[int, ...]]) -> list[tuple[int, int]]:
    n = len(basis)
    if functor == "Tensor2":
        return [(a, b) for a in range(n) for b in range(n)]
    if functor == "Lambda2":
        return [(a, b) for a in range(n) for b in range(a + 1, n)]
    return [(a, b) for a in range(n) for b in range(a, n)]


def _apply_pair(functor: str, a: int, ca: int, b: int, cb: int, diagonal: bool) -> tuple[tuple[int, int], int] | None:
    """Image of the monomial on (a, b) when the letters map to ca*a' and cb*b'."""
    if functor == "Tensor2":
        return (a, b), ca * cb
    if functor == "Lambda2":
        if a == b:
            return None
        return ((a, b), ca * cb) if a < b else ((b, a), -ca * cb)
    if functor == "SP2":
        return (min(a, b), max(a, b)), ca * cb
    # Gamma2: gamma_2(x) -> c^2 gamma_2(x'); x y -> c c' x' y' with x x = 2 gamma_2(x)
    if diagonal:
        return (a, a), ca * ca
    if a == b:
        return (a, a), 2 * ca * cb
    return (min(a, b), max(a, b)), ca * cb


def simplicial_derived(functor: str, order: int, n: int, cap: int = 6) -> GradedAbGroup:
    """Homotopy of ``F`` applied to the Dold-Kan model of ``Z/order`` (``Z`` if order is 0) in dimension ``n``.

    Uses the normalized chain complex: the quotient by monomials all of whose
    letters are degenerate at a common position.  Homotopy is returned in
    degrees ``<= cap``.
    """
    if functor not in QUADRATIC_FUNCTORS:
        raise ValueError(f"unknown functor {functor!r}")
    if cap > MAX_SIMPLICIAL_CAP or n > 2 or n < 0:
        raise UnsupportedDegree(f"simplicial model with n={n}, cap={cap}")
    free = order == 0
    top = cap + 1
    bases = {q: _dk_basis(q, n, free) for q in range(top + 1)}
    chains: dict[int, list[tuple[int, int]]] = {}
    index: dict[int, dict[tuple[int, int], int]] = {}
    for q in range(top + 1):
        basis = bases[q]
        keep = []
        for a, b in _monomials(functor, basis):
            if not any(
                _is_degenerate_at(basis[a], i) and _is_degenerate_at(basis[b], i) for i in range(q)
            ):
                keep.append((a, b))
        chains[q] = keep
        index[q] = {m: t for t, m in enumerate(keep)}
    ranks = {q: len(chains[q]) for q in chains}
    diffs: dict[int, IntMatrix] = {}
    for q in range(1, top + 1):
        src_basis, tgt_basis = bases[q], bases[q - 1]
        tgt_pos = {s: t for t, s in enumerate(tgt_basis)}
        rows = [[0] * ranks[q] for _ in range(ranks[q - 1])]
        for col, (a, b) in enumerate(chains[q]):
            for i in range(q + 1):
                fa = _dk_face(src_basis[a], i, order, n)
                fb = _dk_face(src_basis[b], i, order, n)
                if fa is None or fb is None:
                    continue
                image = _apply_pair(
                    functor, tgt_pos[fa[0]], fa[1], tgt_pos[fb[0]], fb[1], diagonal=(a == b)
                )
                if image is None or not image[1]:
                    continue
                row = index[q - 1].get(image[0])
                if row is not None:
                    rows[row][col] += (-1) ** i * image[1]
        diffs[q] = IntMatrix.from_rows(rows, ranks[q])
    h = graded_homology(ChainComplex(ranks, diffs))
    return h.truncate(hi=cap)


# ---------------------------------------------------------------------------
# free graded Lie ring with squares on one odd generator


def free_glrs_rank1_table(max_degree: int) -> dict[int, int]:
    """Ranks of the free GLRS on one generator of degree 1, degree by degree."""
    if max_degree > 8:
        raise UnsupportedDegree(f"free GLRS table to degree {max_degree}")
    g = GenericDGLS(TwoTermMap(0, 1, IntMatrix.zeros(1, 0)), 1)
    return {i: len(g.piece(i, 0)) for i in range(1, max_degree + 1)}


__all__ = [
    "DeltaComparison",
    "GenericDGLS",
    "KernelResult",
    "QUADRATIC_FUNCTORS",
    "TwoTermMap",
    "build_dgls",
    "build_prime_truncated",
    "compare_printed_delta",
    "dual_de_rham",
    "free_glrs_rank1_table",
    "koszul_complex",
    "printed_delta",
    "simplicial_derived",
    "special_n_kernel",
    "v_functor_dim",
]

"""Free differential graded Lie rings with squares on a two-term complex.

The free object on generators ``a`` and ``b`` with ``d(b) = k a`` is realised
inside the tensor ring on ``a, b``.  Degree ``w`` pieces are lattices spanned
by graded brackets of lower pieces together with squares of odd elements; the
differential is the unique derivation extending ``d(b) = k a``.  Everything is
computed over the integers and homology is read off with Smith normal form.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from .abgroup import ChainComplex, FgAbGroup, IntMatrix, homology

Word = tuple[int, ...]  # letters: 0 = a, 1 = b
Vec = dict[Word, int]


def _add(out: Vec, w: Word, c: int) -> None:
    v = out.get(w, 0) + c
    if v:
        out[w] = v
    else:
        out.pop(w, None)


@dataclass(frozen=True)
class TwoTermShape:
    """Degrees of the generators: ``a`` in ``deg_a``, ``b`` in ``deg_a + 1``."""

    deg_a: int

    @property
    def deg_b(self) -> int:
        return self.deg_a + 1

    def degree(self, n_a: int, n_b: int) -> int:
        return n_a * self.deg_a + n_b * self.deg_b

    def word_degree(self, w: Word) -> int:
        return sum(self.deg_b if x else self.deg_a for x in w)


def _product(x: Vec, y: Vec) -> Vec:
    out: Vec = {}
    for u, cu in x.items():
        for v, cv in y.items():
            _add(out, u + v, cu * cv)
    return out


def _bracket(shape: TwoTermShape, x: Vec, dx: int, y: Vec, dy: int) -> Vec:
    out = _product(x, y)
    sign = -1 if (dx * dy) % 2 == 0 else 1
    for w, c in _product(y, x).items():
        _add(out, w, sign * c)
    return out


def _echelon(vectors: list[Vec], order: list[Word]) -> list[Vec]:
    """Integer row echelon basis of the lattice spanned by ``vectors``."""
    rows = [dict(v) for v in vectors if v]
    basis: list[Vec] = []
    for w in order:
        active = [r for r in rows if r.get(w)]
        rest = [r for r in rows if not r.get(w)]
        while len(active) > 1:
            active.sort(key=lambda r: abs(r[w]))
            piv = active[0]
            nxt = [piv]
            for r in active[1:]:
                q = r[w] // piv[w]
                for key, c in piv.items():
                    _add(r, key, -q * c)
                if r.get(w):
                    nxt.append(r)
                elif r:
                    rest.append(r)
            active = nxt
        if active:
            piv = active[0]
            if piv[w] < 0:
                piv = {k: -c for k, c in piv.items()}
            basis.append(piv)
        rows = rest
    return basis


def _coordinates(v: Vec, basis: list[Vec], pivots: list[Word]) -> list[int]:
    v = dict(v)
    coords = []
    for row, w in zip(basis, pivots):
        c = v.get(w, 0)
        if c % row[w]:
            raise ArithmeticError("vector is not in the lattice")
        q = c // row[w]
        coords.append(q)
        if q:
            for key, x in row.items():
                _add(v, key, -q * x)
    if v:
        raise ArithmeticError("vector is not in the lattice")
    return coords


class FreeDGLS:
    """Free DG Lie ring with squares on ``b -> a`` with ``d b = k a``."""

    def __init__(self, deg_a: int, k: int) -> None:
        self.shape = TwoTermShape(deg_a)
        self.k = k
        self._pieces: dict[tuple[int, int], list[Vec]] = {}

    def _order(self, n_a: int, n_b: int) -> list[Word]:
        words = [w for w in product((0, 1), repeat=n_a + n_b) if sum(w) == n_b]
        return sorted(words)

    def piece(self, n_a: int, n_b: int) -> list[Vec]:
        """Echelon lattice basis of the multidegree (n_a, n_b) component."""
        key = (n_a, n_b)
        if key in self._pieces:
            return self._pieces[key]
        weight = n_a + n_b
        if weight == 1:
            basis = [{(1,) if n_b else (0,): 1}]
        else:
            span: list[Vec] = []
            for i in range(n_a + 1):
                for j in range(n_b + 1):
                    if i + j == 0 or (i, j) == (n_a, n_b):
                        continue
                    # each unordered pair once, the other order only differs by sign
                    if (i, j) > (n_a - i, n_b - j):
                        continue
                    left = self.piece(i, j)
                    right = self.piece(n_a - i, n_b - j)
                    dl = self.shape.degree(i, j)
                    dr = self.shape.degree(n_a - i, n_b - j)
                    for x in left:
                        for y in right:
                            span.append(_bracket(self.shape, x, dl, y, dr))
            if n_a % 2 == 0 and n_b % 2 == 0:
                half = self.piece(n_a // 2, n_b // 2)
                if self.shape.degree(n_a // 2, n_b // 2) % 2:
                    span.extend(_product(x, x) for x in half)
            basis = _echelon(span, self._order(n_a, n_b))
        self._pieces[key] = basis
        return basis

    def rank(self, n_a: int, n_b: int) -> int:
        return len(self.piece(n_a, n_b))

    def _differential(self, v: Vec) -> Vec:
        out: Vec = {}
        for w, c in v.items():
            deg = 0
            for pos, letter in enumerate(w):
                if letter == 1:
                    sign = -1 if deg % 2 else 1
                    _add(out, w[:pos] + (0,) + w[pos + 1 :], sign * self.k * c)
                deg += self.shape.deg_b if letter else self.shape.deg_a
        return out

    def complex(self, weight: int) -> ChainComplex:
        """The weight ``weight`` part as a chain complex graded by total degree."""
        ranks: dict[int, int] = {}
        diffs: dict[int, IntMatrix] = {}
        for n_b in range(weight + 1):
            n_a = weight - n_b
            ranks[self.shape.degree(n_a, n_b)] = self.rank(n_a, n_b)
        for n_b in range(1, weight + 1):
            n_a = weight - n_b
            src = self.piece(n_a, n_b)
            tgt = self.piece(n_a + 1, n_b - 1)
            order = self._order(n_a + 1, n_b - 1)
            pivots = [next(w for w in order if row.get(w)) for row in tgt]
            cols = [_coordinates(self._differential(x), tgt, pivots) for x in src]
            rows = [[cols[j][i] for j in range(len(src))] for i in range(len(tgt))]
            deg = self.shape.degree(n_a, n_b)
            diffs[deg] = IntMatrix(len(tgt), len(src), tuple(tuple(r) for r in rows))
        return ChainComplex(ranks, diffs)


@lru_cache(maxsize=None)
def free_dgls_homology(deg_a: int, weight: int, k: int) -> dict[int, FgAbGroup]:
    """Homology of the weight ``weight`` part of the free DGLS on ``b -k-> a``."""
    c = FreeDGLS(deg_a, k).complex(weight)
    out = {}
    for n in c.degrees():
        h = homology(c, n)
        if not h.is_zero():
            out[n] = h
    return out

"""Direct sums of shifted cyclic groups, viewed as chain complexes with zero differential."""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from math import gcd
from typing import Iterable

from ..abgroup import FgAbGroup, GradedAbGroup, prime_power_parts, prime_power_split

FREE = 0  # order value standing for the infinite cyclic group


@dataclass(frozen=True, order=True)
class Piece:
    """One cyclic summand: ``Z`` when ``order == 0``, else ``Z/order``, placed in degree ``shift``."""

    order: int
    shift: int

    def __post_init__(self) -> None:
        if self.shift < 0:
            raise ValueError("shifts must be non-negative")
        if self.order != FREE:
            prime_power_parts(self.order)  # raises unless a prime power > 1

    @property
    def is_free(self) -> bool:
        return self.order == FREE

    @property
    def prime(self) -> int | None:
        return None if self.is_free else prime_power_parts(self.order)[0]

    def __str__(self) -> str:
        base = "Z" if self.is_free else f"Z/{self.order}"
        return base if self.shift == 0 else f"{base}[{self.shift}]"


def _sort_key(piece: Piece) -> tuple[int, int, int]:
    # free pieces first, then torsion by (prime, exponent); shift breaks ties
    if piece.is_free:
        return (0, 0, piece.shift)
    return (1, piece.order, piece.shift)


@dataclass(frozen=True)
class DObject:
    """A finite multiset of :class:`Piece` values in canonical order."""

    pieces: tuple[Piece, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "pieces", tuple(sorted(self.pieces, key=_sort_key)))

    @classmethod
    def of(cls, pieces: Iterable[tuple[int, int] | Piece]) -> "DObject":
        out: list[Piece] = []
        for item in pieces:
            if isinstance(item, Piece):
                out.append(item)
                continue
            order, shift = item
            if order == 1:
                continue
            if order == FREE:
                out.append(Piece(FREE, shift))
            else:
                out.extend(Piece(q, shift) for q in prime_power_split(order))
        return cls(tuple(out))

    @classmethod
    def cyclic(cls, order: int, shift: int = 0) -> "DObject":
        return cls.of([(order, shift)])

    @classmethod
    def free(cls, rank: int, shift: int = 0) -> "DObject":
        return cls.of([(FREE, shift)] * rank)

    @classmethod
    def parse(cls, text: str) -> "DObject":
        """Parse ``Z/6[1] + Z + Z/4`` style input; ``0`` is the empty object."""
        text = text.strip()
        if text in ("", "0"):
            return cls()
        pieces = []
        for term in re.split(r"[+⊕]", text):
            m = re.fullmatch(r"\s*Z(?:/(\d+))?(?:\[(\d+)\])?\s*", term)
            if not m:
                raise ValueError(f"cannot parse summand {term!r}")
            order = int(m.group(1)) if m.group(1) else FREE
            if m.group(1) and order < 1:
                raise ValueError("cyclic order must be positive")
            pieces.append((order, int(m.group(2) or 0)))
        return cls.of(pieces)

    def __bool__(self) -> bool:
        return bool(self.pieces)

    def __len__(self) -> int:
        return len(self.pieces)

    def __add__(self, other: "DObject") -> "DObject":
        return DObject(self.pieces + other.pieces)

    def shift(self, s: int) -> "DObject":
        return DObject(tuple(Piece(q.order, q.shift + s) for q in self.pieces))

    def min_shift(self) -> int | None:
        return min((q.shift for q in self.pieces), default=None)

    def split_first(self) -> tuple["DObject", "DObject"]:
        return DObject(self.pieces[:1]), DObject(self.pieces[1:])

    def homotopy(self) -> GradedAbGroup:
        groups: dict[int, FgAbGroup] = {}
        for q in self.pieces:
            g = FgAbGroup(1) if q.is_free else FgAbGroup.cyclic(q.order)
            groups[q.shift] = groups.get(q.shift, FgAbGroup()) + g
        return GradedAbGroup(groups)

    def is_group(self) -> bool:
        return all(q.shift == 0 for q in self.pieces)

    def __str__(self) -> str:
        if not self.pieces:
            return "0"
        counts = Counter(self.pieces)
        parts = []
        for piece in sorted(counts, key=_sort_key):
            c = counts[piece]
            parts.append(str(piece) if c == 1 else f"{piece}^{c}")
        return " + ".join(parts)


def _tensor_pieces(a: Piece, b: Piece) -> list[Piece]:
    s = a.shift + b.shift
    if a.is_free:
        return [Piece(b.order, s)]
    if b.is_free:
        return [Piece(a.order, s)]
    g = gcd(a.order, b.order)
    if g == 1:
        return []
    return [Piece(g, s), Piece(g, s + 1)]


def derived_tensor(x: DObject, y: DObject) -> DObject:
    """Derived tensor product; cyclic torsion pieces contribute a Tor term one degree up."""
    return DObject(tuple(r for a in x.pieces for b in y.pieces for r in _tensor_pieces(a, b)))


def tensor_power(x: DObject, k: int) -> DObject:
    if k < 0:
        raise ValueError("negative tensor power")
    out = DObject((Piece(FREE, 0),))
    for _ in range(k):
        out = derived_tensor(out, x)
    return out

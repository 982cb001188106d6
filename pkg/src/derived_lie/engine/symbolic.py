"""Formal graded sums of functor atoms applied to tensor words in the letters A and B.

Rendering grammar for one term::

    ['L' j ' '] name '^' degree [';' p] ['⊗Z/' q] '(' word ')' '[' shift ']'

where ``word`` is letters joined by ``⊗``; terms are joined by `` ⊕ `` and the
empty sum renders as ``0``. :func:`parse_expr` inverts :func:`FunctorExprGraded.render`.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass, replace
from math import comb
from typing import Callable, Iterable

from ..abgroup import FgAbGroup, GradedAbGroup, require_prime
from ..witt import moebius_count, super_moebius_count

LIE = "Lie"
SUPER_LIE = "SuperLie"
SPECIAL_N = "SpecialN"
SPECIAL_NS = "SpecialNs"
LAMBDA2 = "Lambda2"
GAMMA2 = "Gamma2"
SPN = "SPn"
MODP = "ModP"
TORP = "TorP"
ID = "Id"

FAMILIES = (LIE, SUPER_LIE, SPECIAL_N, SPECIAL_NS, LAMBDA2, GAMMA2, SPN, MODP, TORP, ID)

_NAMES = {
    LIE: "L",
    SUPER_LIE: "Ls",
    SPECIAL_N: "N",
    SPECIAL_NS: "Ns",
    LAMBDA2: "Lambda",
    GAMMA2: "Gamma",
    SPN: "SP",
    MODP: "Mod",
    TORP: "Tor",
    ID: "Id",
}
_FAMILY_BY_NAME = {v: k for k, v in _NAMES.items()}
_PRIMED = (SPECIAL_N, SPECIAL_NS, MODP, TORP)


@dataclass(frozen=True, order=True)
class FunctorAtom:
    family: str
    degree: int = 1
    prime: int | None = None

    def __post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise ValueError(f"unknown functor family {self.family!r}")
        if self.degree < 1:
            raise ValueError("functor degree must be positive")
        if self.family in _PRIMED:
            if self.prime is None:
                raise ValueError(f"{self.family} needs a prime")
            require_prime(self.prime)
        elif self.prime is not None:
            raise ValueError(f"{self.family} takes no prime")


def lie(d: int) -> FunctorAtom:
    return FunctorAtom(LIE, d)


def superlie(d: int) -> FunctorAtom:
    return FunctorAtom(SUPER_LIE, d)


def special_n(d: int, p: int) -> FunctorAtom:
    return FunctorAtom(SPECIAL_N, d, p)


def special_ns(d: int, p: int) -> FunctorAtom:
    return FunctorAtom(SPECIAL_NS, d, p)


IDENTITY = FunctorAtom(ID)


@dataclass(frozen=True, order=True)
class Term:
    """``L_derived(atom)(argument) ⊗ Z/modulus`` placed in degree ``shift``."""

    shift: int
    atom: FunctorAtom
    argument: tuple[str, ...] = ("A",)
    modulus: int | None = None
    derived: int = 0

    def canonical(self) -> "Term":
        """Canonical atom, and argument letters sorted since tensor factors commute up to isomorphism."""
        atom, modulus = _canonical_atom(self.atom, self.modulus)
        return replace(self, atom=atom, modulus=modulus, argument=tuple(sorted(self.argument)))

    def render(self) -> str:
        a = self.atom
        out = f"L{self.derived} " if self.derived else ""
        out += f"{_NAMES[a.family]}^{a.degree}"
        if a.prime is not None:
            out += f";{a.prime}"
        if self.modulus is not None:
            out += f"⊗Z/{self.modulus}"
        return out + f"({'⊗'.join(self.argument)})[{self.shift}]"

    def pretty(self) -> str:
        """Table-style rendering without the shift."""
        arg = "⊗".join(self.argument)
        a = self.atom
        names = {
            LIE: f"L^{a.degree}",
            SUPER_LIE: f"Ls^{a.degree}",
            SPECIAL_N: f"N^{{{a.degree};{a.prime}}}",
            SPECIAL_NS: f"Ns^{{{a.degree};{a.prime}}}",
            LAMBDA2: "Λ²",
            GAMMA2: "Γ2",
            SPN: f"SP^{a.degree}",
        }
        if a.family == ID:
            body = arg
        elif a.family == TORP:
            body = f"Tor({arg},Z/{a.prime})"
        elif a.family == MODP:
            body = f"{arg}⊗Z/{a.prime}"
        else:
            body = f"{names[a.family]}({arg})"
        if self.derived:
            body = f"L{self.derived}{body}"
        if self.modulus is not None:
            body += f"⊗Z/{self.modulus}"
        return body


def _canonical_atom(atom: FunctorAtom, modulus: int | None) -> tuple[FunctorAtom, int | None]:
    fam, d, p = atom.family, atom.degree, atom.prime
    if fam == MODP:
        return IDENTITY, p
    if fam in (SPECIAL_N, SPECIAL_NS) and modulus is None:
        assert p is not None
        if d == 1:
            return IDENTITY, p
        if d == 2 and p == 2:
            return FunctorAtom(GAMMA2, 2), 2
        if fam == SPECIAL_NS and d == 2:
            return FunctorAtom(GAMMA2, 2), p
        if d % p:
            base = LIE if fam == SPECIAL_N else SUPER_LIE
            return _canonical_atom(FunctorAtom(base, d), p)
        return atom, None
    if fam in (LIE, SUPER_LIE, SPN) and d == 1:
        return IDENTITY, modulus
    if fam == LIE and d == 2:
        return FunctorAtom(LAMBDA2, 2), modulus
    if fam == SUPER_LIE and d == 2:
        return FunctorAtom(GAMMA2, 2), modulus
    return atom, modulus


@dataclass(frozen=True)
class FunctorExprGraded:
    """A multiset of :class:`Term` values kept in canonical sorted order."""

    terms: tuple[Term, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "terms", tuple(sorted(t.canonical() for t in self.terms)))

    @classmethod
    def of(cls, terms: Iterable[Term]) -> "FunctorExprGraded":
        return cls(tuple(terms))

    def __add__(self, other: "FunctorExprGraded") -> "FunctorExprGraded":
        return FunctorExprGraded(self.terms + other.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def shift(self, s: int) -> "FunctorExprGraded":
        return FunctorExprGraded(tuple(replace(t, shift=t.shift + s) for t in self.terms))

    def truncate(self, lo: int | None = None, hi: int | None = None) -> "FunctorExprGraded":
        keep = [
            t for t in self.terms if (lo is None or t.shift >= lo) and (hi is None or t.shift <= hi)
        ]
        return FunctorExprGraded(tuple(keep))

    def filter(self, pred: Callable[[Term], bool]) -> "FunctorExprGraded":
        return FunctorExprGraded(tuple(t for t in self.terms if pred(t)))

    def at(self, degree: int) -> "FunctorExprGraded":
        return self.truncate(degree, degree)

    def degrees(self) -> list[int]:
        return sorted({t.shift for t in self.terms})

    def counts(self) -> Counter:
        return Counter(self.terms)

    def render(self) -> str:
        return " ⊕ ".join(t.render() for t in self.terms) if self.terms else "0"

    def pretty_at(self, degree: int) -> str:
        """Sum of the terms in one degree, shifts omitted, multiplicities as powers."""
        counts = Counter(t.pretty() for t in self.terms if t.shift == degree)
        if not counts:
            return "0"
        return " ⊕ ".join(k if c == 1 else f"({k})^{c}" for k, c in sorted(counts.items()))

    def __str__(self) -> str:
        return self.render()


_TERM = re.compile(
    r"\s*(?:L(?P<derived>\d+)\s+)?(?P<name>[A-Za-z]+)\^(?P<deg>\d+)(?:;(?P<prime>\d+))?"
    r"(?:⊗Z/(?P<mod>\d+))?\((?P<arg>[AB](?:⊗[AB])*)\)\[(?P<shift>-?\d+)\]\s*"
)


def parse_term(text: str) -> Term:
    m = _TERM.fullmatch(text)
    if not m:
        raise ValueError(f"cannot parse term {text!r}")
    name = m.group("name")
    if name not in _FAMILY_BY_NAME:
        raise ValueError(f"unknown functor name {name!r} in {text!r}")
    atom = FunctorAtom(
        _FAMILY_BY_NAME[name],
        int(m.group("deg")),
        int(m.group("prime")) if m.group("prime") else None,
    )
    return Term(
        int(m.group("shift")),
        atom,
        tuple(m.group("arg").split("⊗")),
        int(m.group("mod")) if m.group("mod") else None,
        int(m.group("derived") or 0),
    )


def parse_expr(text: str) -> FunctorExprGraded:
    text = text.strip()
    if text in ("", "0"):
        return FunctorExprGraded()
    return FunctorExprGraded(tuple(parse_term(part) for part in text.split("⊕")))


# ---------------------------------------------------------------------------
# evaluation on free abelian groups


def _word_rank(word: tuple[str, ...], ranks: dict[str, int]) -> int:
    out = 1
    for letter in word:
        out *= ranks[letter]
    return out


def atom_rank(atom: FunctorAtom, r: int) -> int:
    """Rank of the (free) value of a Lie-type atom on a free group of rank ``r``."""
    fam, d = atom.family, atom.degree
    if r == 0:
        return 0
    if fam == ID:
        return r
    if fam == LIE:
        return moebius_count(r, d)
    if fam == SUPER_LIE:
        return super_moebius_count(r, d)
    if fam == LAMBDA2:
        return comb(r, 2)
    if fam == GAMMA2:
        return comb(r + 1, 2)
    if fam == SPN:
        return comb(r + d - 1, d)
    raise ValueError(f"{fam} has no plain rank")


def evaluate_free(
    expr: FunctorExprGraded,
    ranks: dict[str, int],
    special_dim: Callable[[FunctorAtom, int], int] | None = None,
) -> GradedAbGroup:
    """Evaluate every term on free groups of the given ranks.

    Higher derived terms and Tor terms vanish on free input. ``special_dim``
    supplies ``F_p``-dimensions of the special functors.
    """
    out: dict[int, FgAbGroup] = {}
    for t in expr.terms:
        if t.derived or t.atom.family == TORP:
            continue
        r = _word_rank(t.argument, ranks)
        fam = t.atom.family
        if fam in (SPECIAL_N, SPECIAL_NS):
            if special_dim is None:
                from .special import special_atom_dim

                special_dim = special_atom_dim
            dim = special_dim(t.atom, r)
            assert t.atom.prime is not None
            g = FgAbGroup(0, (t.atom.prime,) * dim)
        else:
            rank = atom_rank(t.atom, r)
            g = FgAbGroup(0, (t.modulus,) * rank) if t.modulus else FgAbGroup(rank)
        out[t.shift] = out.get(t.shift, FgAbGroup()) + g
    return GradedAbGroup(out)

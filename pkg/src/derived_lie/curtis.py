"""E^1 pages of the lower central series spectral sequence for Moore spaces.

Only the first page is computed: ``E^1_{r,q} = L_q L^r(A, n-1)`` for the Moore
space ``M(A, n)``. No differentials and no abutment are produced, so every page
here is an E^1 page and nothing more.

Cells come from :func:`engine.derive_lie` when ``A`` is a concrete group and
from the symbolic complex when ``A`` is a formal free group. A cell the engine
cannot compute is kept as an explicit :class:`Unavailable` marker.

The module also holds the bifunctor page for maps between Moore spaces and the
golden-table comparisons for the printed pages.
"""

from __future__ import annotations

import csv
import io
import json
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from typing import Any, Iterable, Mapping, Sequence, Union

from .abgroup import FgAbGroup, ext, hom, prime_power_parts
from .engine.derive import derive_lie
from .engine.dobject import DObject
from .engine.ecomplex import e_complex
from .engine.special import special_ns_dim
from .engine.symbolic import (
    ID,
    LIE,
    SPECIAL_N,
    SPECIAL_NS,
    SUPER_LIE,
    FunctorAtom,
    FunctorExprGraded,
    Term,
    parse_term,
)
from .errors import UnsupportedDegree
from .witt import super_moebius_count

FREE = "A"
"""Sentinel for a formal free argument ``A``."""


@dataclass(frozen=True)
class Unavailable:
    """A cell the engine cannot produce; ``missing`` names the absent datum."""

    missing: str

    def __str__(self) -> str:
        return f"?({self.missing})"


@dataclass(frozen=True)
class BifunctorTerm:
    """``Hom(A, L_j L^r(B,1))`` or ``Ext(A, L_j L^r(B,1))``."""

    kind: str
    r: int
    j: int

    def __post_init__(self) -> None:
        if self.kind not in ("Hom", "Ext"):
            raise ValueError(f"unknown kind {self.kind!r}")

    def inner(self, b: str = "B") -> str:
        """The second argument, rewritten through the low-degree identifications."""
        return _rewrite(self.r, self.j, b)

    def render(self, a: str = "A", b: str = "B") -> str:
        return f"{self.kind}({a}, {self.inner(b)})"


Cell = Union[FgAbGroup, FunctorExprGraded, Unavailable, tuple]


@dataclass(frozen=True)
class E1Page:
    """Cells ``(r, q)`` of an E^1 page; cells not stored are zero."""

    space: str
    r_values: tuple[int, ...]
    q_values: tuple[int, ...]
    entries: Mapping[tuple[int, int], Cell] = field(default_factory=dict)
    prime: int | None = None

    def cell(self, r: int, q: int) -> Cell:
        return self.entries.get((r, q), FgAbGroup())

    def is_zero(self, r: int, q: int) -> bool:
        c = self.cell(r, q)
        return not isinstance(c, Unavailable) and not c

    def unavailable(self) -> list[tuple[int, int]]:
        return [k for k, v in self.entries.items() if isinstance(v, Unavailable)]

    def render_cell(self, r: int, q: int) -> str:
        return render_cell(self.cell(r, q), q)

    def rows(self) -> list[list[str]]:
        """Header row, then one row per ``q`` in decreasing order."""
        out = [["q"] + [f"r={r}" for r in self.r_values]]
        for q in sorted(self.q_values, reverse=True):
            out.append([str(q)] + [self.render_cell(r, q) for r in self.r_values])
        return out

    def to_text(self) -> str:
        rows = self.rows()
        widths = [max(len(row[i]) for row in rows) for i in range(len(rows[0]))]
        title = f"E^1 page for {self.space}" + (f", {self.prime}-primary" if self.prime else "")
        lines = [title]
        for row in rows:
            lines.append("  ".join(c.rjust(w) for c, w in zip(row, widths)).rstrip())
        return "\n".join(lines)

    def to_csv(self) -> str:
        buf = io.StringIO()
        csv.writer(buf, lineterminator="\n").writerows(self.rows())
        return buf.getvalue()

    def to_records(self) -> dict[str, Any]:
        cells = []
        for (r, q), c in sorted(self.entries.items()):
            rec: dict[str, Any] = {"r": r, "q": q}
            rec.update(cell_record(c))
            cells.append(rec)
        return {
            "space": self.space,
            "prime": self.prime,
            "r_values": list(self.r_values),
            "q_values": list(self.q_values),
            "cells": cells,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_records(), ensure_ascii=False)


def render_cell(c: Cell, q: int) -> str:
    if isinstance(c, Unavailable):
        return str(c)
    if isinstance(c, FunctorExprGraded):
        return c.pretty_at(q)
    if isinstance(c, tuple):
        return " ⊕ ".join(t.render() for t in c) if c else "0"
    return str(c)


def cell_record(c: Cell) -> dict[str, Any]:
    if isinstance(c, Unavailable):
        return {"unavailable": c.missing}
    if isinstance(c, FunctorExprGraded):
        return {"terms": [t.render() for t in c.terms]}
    if isinstance(c, tuple):
        return {"summands": [[t.kind, t.r, t.j] for t in c]}
    return {"free_rank": c.free_rank, "torsion": list(c.torsion)}


# ---------------------------------------------------------------------------
# Moore space pages


def _is_p_term(t: Term, p: int) -> bool:
    if t.modulus is not None and prime_power_parts(t.modulus)[0] == p:
        return True
    return t.atom.prime == p


def _as_dobject(a: FgAbGroup | DObject) -> DObject:
    if isinstance(a, DObject):
        return a
    return DObject.of([(q, 0) for q in a.torsion]) + DObject.free(a.free_rank)


def _describe(a: FgAbGroup | DObject | str) -> str:
    return "A" if isinstance(a, str) else str(a)


def e1_page(
    a: FgAbGroup | DObject | str,
    n: int,
    r_list: Iterable[int],
    q_max: int,
    p: int | None = None,
    *,
    q_min: int = 0,
) -> E1Page:
    """The E^1 page ``E^1_{r,q} = L_q L^r(A, n-1)`` of ``M(A, n)``, E^1 only.

    ``a`` is a concrete group or :data:`FREE`. With ``p`` only the
    ``p``-primary part is kept. Cells in a column the engine cannot compute
    are :class:`Unavailable`.
    """
    if n < 2:
        raise ValueError("Moore spaces need n >= 2")
    r_values = tuple(sorted(set(r_list)))
    if not r_values or r_values[0] < 1:
        raise ValueError("filtration indices must be positive")
    q_values = tuple(range(q_min, q_max + 1))
    entries: dict[tuple[int, int], Cell] = {}
    symbolic = isinstance(a, str)
    if symbolic and a != FREE:
        raise ValueError(f"symbolic argument must be {FREE!r}")
    for r in r_values:
        try:
            if symbolic:
                expr = e_complex(r, n - 1, max_degree=q_max)
                if p is not None:
                    expr = expr.filter(lambda t: _is_p_term(t, p))
                for q in q_values:
                    part = expr.at(q)
                    if part:
                        entries[(r, q)] = part
            else:
                g = derive_lie(r, _as_dobject(a), n - 1, max_degree=q_max)
                if p is not None:
                    g = g.p_part(p)
                for q in q_values:
                    if g[q]:
                        entries[(r, q)] = g[q]
        except UnsupportedDegree as err:
            marker = Unavailable(err.missing or str(err))
            for q in q_values:
                entries[(r, q)] = marker
    space = f"M({_describe(a)},{n})"
    return E1Page(space, r_values, q_values, entries, p)


# ---------------------------------------------------------------------------
# bifunctor page


def _rewrite(r: int, j: int, b: str) -> str:
    if r == 1:
        return b
    if r == 2:
        return "Γ2(" + b + ")" if j == 2 else f"L{j - 2}Γ2({b})"
    if _is_odd_prime(r):
        return f"Ls^{r}({b})" if j == r else f"L{j - r}Ls^{r}({b})"
    return f"L{j}L^{r}({b},1)"


def _is_odd_prime(r: int) -> bool:
    return r > 2 and all(r % d for d in range(2, int(r**0.5) + 1))


def _inner_range(r: int) -> range:
    """Degrees ``j`` where ``L_j L^r(B,1)`` can be nonzero."""
    if r == 1:
        return range(1, 2)
    return range(r, 2 * r)


def bifunctor_e1(
    a: FgAbGroup | str = "A",
    b: FgAbGroup | str = "B",
    q_max: int = 4,
    r_max: int = 4,
) -> E1Page:
    """E^1 page for maps ``M(A, q+1) -> M(B, 2)``, built from homology only.

    ``E_{r,q} = Hom(A, L_q L^r(B,1)) ⊕ Ext(A, L_{q+1} L^r(B,1))``. With
    symbolic arguments the cells are tuples of :class:`BifunctorTerm`; with
    concrete groups they are evaluated.
    """
    symbolic = isinstance(a, str) or isinstance(b, str)
    entries: dict[tuple[int, int], Cell] = {}
    for r in range(1, r_max + 1):
        inner = _inner_range(r)
        values = None
        if not symbolic:
            values = derive_lie(r, _as_dobject(b), 1, max_degree=q_max + 1)
        for q in range(1, q_max + 1):
            terms = []
            if q in inner:
                terms.append(BifunctorTerm("Hom", r, q))
            if q + 1 in inner:
                terms.append(BifunctorTerm("Ext", r, q + 1))
            if symbolic:
                if terms:
                    entries[(r, q)] = tuple(terms)
            else:
                assert values is not None
                g = hom(a, values[q]) + ext(a, values[q + 1])
                if g:
                    entries[(r, q)] = g
    space = f"[M({_describe(a) if not isinstance(a, str) else a},q+1), M({b if isinstance(b, str) else b},2)]"
    return E1Page(space, tuple(range(1, r_max + 1)), tuple(range(1, q_max + 1)), entries)


def barratt_sequence(a: str = "A", b: str = "B") -> str:
    """The short exact sequence read off from cells (2,1) and (1,1)."""
    page = bifunctor_e1(a, b, q_max=1, r_max=2)
    (left,) = page.cell(2, 1)
    (right,) = page.cell(1, 1)
    return f"0 → {left.render(a, b)} → [M({a},2), M({b},2)] → {right.render(a, b)} → 0"


# ---------------------------------------------------------------------------
# golden tables


def load_table(name: str) -> dict[str, Any]:
    """A golden table shipped with the package, e.g. ``"srp2"``."""
    path = resources.files("derived_lie") / "data" / f"table_{name.replace('-', '_')}.json"
    return json.loads(path.read_text(encoding="utf-8"))


def _parse_terms(texts: Sequence[str], degree: int) -> FunctorExprGraded:
    return FunctorExprGraded(tuple(parse_term(f"{s}[{degree}]") for s in texts))


@dataclass(frozen=True)
class CellDiff:
    """One compared cell; ``ok`` is False only for an untagged mismatch."""

    key: tuple
    printed: str
    computed: str
    status: str
    tag: str
    note: str = ""

    @property
    def ok(self) -> bool:
        if self.status in ("exact", "subquotient", "printed-subset"):
            return True
        return self.tag != "paper"


def _status(equal: bool) -> str:
    return "exact" if equal else "mismatch"


def compare_srp2() -> list[CellDiff]:
    table = load_table("srp2")
    cells = table["cells"]
    rs = sorted({c["r"] for c in cells})
    qmax = max(c["q"] for c in cells)
    page = e1_page(FgAbGroup.cyclic(2), table["n"], rs, qmax)
    out = []
    for c in cells:
        want = FgAbGroup.from_orders(c["torsion"])
        got = page.cell(c["r"], c["q"])
        out.append(
            CellDiff((c["r"], c["q"]), str(want), render_cell(got, c["q"]), _status(got == want), c["tag"])
        )
    return out


def compare_moore3() -> list[CellDiff]:
    table = load_table("moore3")
    cells = table["cells"]
    rs = sorted({c["r"] for c in cells})
    qmax = max(c["q"] for c in cells)
    page = e1_page(FREE, table["n"], rs, qmax)
    out = []
    for c in cells:
        r, q = c["r"], c["q"]
        want = _parse_terms(c["terms"], q)
        got = page.cell(r, q)
        if not isinstance(got, FunctorExprGraded):
            got_expr = FunctorExprGraded() if isinstance(got, FgAbGroup) and not got else got
        else:
            got_expr = got
        equal = isinstance(got_expr, FunctorExprGraded) and got_expr.counts() == want.counts()
        out.append(CellDiff((r, q), want.pretty_at(q), render_cell(got, q), _status(equal), c["tag"]))
    return out


# ---------------------------------------------------------------------------
# homotopy tables against the E^1 page


def composition_factors(expr: FunctorExprGraded, p: int) -> Counter:
    """Simple ``p``-primary factors of a symbolic sum, shifts dropped.

    ``F⊗Z/p^j`` counts as ``j`` copies of ``F⊗Z/p``. ``N^{p;p}`` splits as
    ``L^p⊗Z/p`` plus ``A⊗Z/p``. ``Ns^{d;p}`` becomes ``Ls^d⊗Z/p`` when the two
    have equal dimension on a free group of rank ``d``.
    """
    out: Counter = Counter()
    for t in expr.terms:
        for key, mult in _factors(t, p):
            out[key] += mult
    return out


def _key(atom: FunctorAtom, t: Term, p: int) -> tuple:
    canon = Term(0, atom, t.argument, p).canonical()
    return (canon.atom, canon.argument, canon.modulus)


def _factors(t: Term, p: int) -> list[tuple[tuple, int]]:
    if t.modulus is not None:
        q, j = prime_power_parts(t.modulus)
        return [(_key(t.atom, t, q), j)] if q == p else []
    a = t.atom
    if a.family == SPECIAL_N and a.prime == p and a.degree == p:
        return [(_key(FunctorAtom(LIE, p), t, p), 1), (_key(FunctorAtom(ID), t, p), 1)]
    if a.family == SPECIAL_NS and a.prime == p and _ns_is_reduction(a.degree, p):
        return [(_key(FunctorAtom(SUPER_LIE, a.degree), t, p), 1)]
    if a.prime == p:
        return [((a, tuple(sorted(t.argument)), None), 1)]
    return []


@lru_cache(maxsize=None)
def _ns_is_reduction(d: int, p: int) -> bool:
    if d > 4:
        return False
    try:
        return special_ns_dim(d, p, d) == super_moebius_count(d, d)
    except UnsupportedDegree:
        return False


def _p_length(g: FgAbGroup, p: int) -> int:
    return sum(prime_power_parts(q)[1] for q in g.torsion if q % p == 0)


def stem_e1(space: str, n: int, k: int, p: int, r_max: int | None = None) -> FgAbGroup | FunctorExprGraded:
    """``p``-primary E^1 total in degree ``q = n+k-1``, summed over ``r``.

    ``space`` is ``"sphere"`` (``A = Z``) or ``"moore"`` (``A`` formal free).
    Only multiples of ``p`` contribute ``p``-torsion.
    """
    q = n + k - 1
    r_max = r_max or p**6
    rs = range(p, r_max + 1, p)
    if space == "sphere":
        page = e1_page(FgAbGroup(1), n, rs, q, p, q_min=q)
        total = FgAbGroup()
        for r in rs:
            c = page.cell(r, q)
            if isinstance(c, Unavailable):
                raise UnsupportedDegree(f"E^1_{{{r},{q}}}", c.missing)
            total = total + c
        return total
    if space == "moore":
        page = e1_page(FREE, n, rs, q, p, q_min=q)
        expr = FunctorExprGraded()
        for r in rs:
            c = page.cell(r, q)
            if isinstance(c, Unavailable):
                raise UnsupportedDegree(f"E^1_{{{r},{q}}}", c.missing)
            if isinstance(c, FunctorExprGraded):
                expr = expr + c
        return expr
    raise ValueError(f"unknown space {space!r}")


def compare_torsion_homotopy() -> list[CellDiff]:
    """Printed homotopy cells against the E^1 total of the same degree.

    ``exact`` means equal; ``subquotient`` means the printed simple factors
    fit inside those of the E^1 total, as a subquotient must.
    """
    table = load_table("torsion3_homotopy")
    p = table["prime"]
    out = []
    for c in table["cells"]:
        n, k, space = c["n"], c["k"], c["space"]
        got = stem_e1(space, n, k, p)
        if space == "sphere":
            want = FgAbGroup.from_orders(c["torsion"])
            assert isinstance(got, FgAbGroup)
            if got == want:
                status = "exact"
            elif _p_length(want, p) <= _p_length(got, p):
                status = "subquotient"
            else:
                status = "mismatch"
            out.append(CellDiff((space, n, k), str(want), str(got), status, c["tag"]))
            continue
        q = n + k - 1
        want_e = _parse_terms(c["terms"], q)
        assert isinstance(got, FunctorExprGraded)
        if want_e.counts() == got.counts():
            status = "exact"
        else:
            fw, fg = composition_factors(want_e, p), composition_factors(got, p)
            status = "subquotient" if not (fw - fg) else "mismatch"
        out.append(
            CellDiff((space, n, k), want_e.pretty_at(q), got.pretty_at(q), status, c["tag"], c.get("note", ""))
        )
    return out


def compare_bifunctor() -> tuple[list[CellDiff], list[tuple[int, int, BifunctorTerm]]]:
    """Printed bifunctor cells must appear in the computed page.

    Returns the per-cell comparison and the computed summands that the
    printed table leaves out.
    """
    table = load_table("bifunctor")
    page = bifunctor_e1(q_max=4, r_max=4)
    diffs, omitted = [], []
    for c in table["cells"]:
        r, q = c["r"], c["q"]
        printed = [BifunctorTerm(kind, rr, j) for kind, rr, j in c["summands"]]
        got = page.cell(r, q)
        got_terms = list(got) if isinstance(got, tuple) else []
        missing = [t for t in printed if t not in got_terms]
        omitted.extend((r, q, t) for t in got_terms if t not in printed)
        status = "exact" if not missing and len(printed) == len(got_terms) else (
            "printed-subset" if not missing else "mismatch"
        )
        diffs.append(
            CellDiff(
                (r, q),
                " ⊕ ".join(t.render() for t in printed) or "0",
                render_cell(got, q),
                status,
                c["tag"],
            )
        )
    return diffs, omitted


__all__ = [
    "FREE",
    "BifunctorTerm",
    "CellDiff",
    "E1Page",
    "Unavailable",
    "barratt_sequence",
    "bifunctor_e1",
    "compare_bifunctor",
    "compare_moore3",
    "compare_srp2",
    "compare_torsion_homotopy",
    "composition_factors",
    "e1_page",
    "load_table",
    "render_cell",
    "stem_e1",
]

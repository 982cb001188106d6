"""JSON-friendly records for graded groups, symbolic expressions and complexes.

A graded group is a list of records ``{"degree": n, "free_rank": r,
"torsion": ["2^2", "3^1"]}``, one per nonzero degree, torsion summands written
as prime powers ``p^k``.
"""

from __future__ import annotations

import json
import re
from typing import Any

from ..abgroup import ChainComplex, FgAbGroup, GradedAbGroup, IntMatrix, prime_power_parts
from .symbolic import FunctorExprGraded, parse_expr

_PRIME_POWER = re.compile(r"^(\d+)\^(\d+)$")


def _torsion_string(q: int) -> str:
    p, k = prime_power_parts(q)
    return f"{p}^{k}"


def group_record(degree: int, g: FgAbGroup) -> dict[str, Any]:
    return {
        "degree": degree,
        "free_rank": g.free_rank,
        "torsion": [_torsion_string(q) for q in g.torsion],
    }


def graded_to_records(g: GradedAbGroup) -> list[dict[str, Any]]:
    return [group_record(n, grp) for n, grp in g.items() if not grp.is_zero()]


def _parse_torsion(text: str) -> int:
    m = _PRIME_POWER.match(text.strip())
    if not m:
        raise ValueError(f"torsion entry {text!r} is not of the form p^k")
    p, k = int(m.group(1)), int(m.group(2))
    if k < 1:
        raise ValueError(f"torsion entry {text!r} has exponent < 1")
    return p**k


def records_to_graded(records: list[dict[str, Any]]) -> GradedAbGroup:
    groups: dict[int, FgAbGroup] = {}
    for rec in records:
        missing = {"degree", "free_rank", "torsion"} - set(rec)
        if missing:
            raise ValueError(f"record lacks fields {sorted(missing)}")
        degree = int(rec["degree"])
        if degree in groups:
            raise ValueError(f"degree {degree} appears twice")
        orders = [_parse_torsion(t) for t in rec["torsion"]]
        groups[degree] = FgAbGroup.from_orders(orders, int(rec["free_rank"]))
    return GradedAbGroup(groups)


def dumps_graded(g: GradedAbGroup) -> str:
    return json.dumps(graded_to_records(g), ensure_ascii=False)


def loads_graded(text: str) -> GradedAbGroup:
    return records_to_graded(json.loads(text))


def expr_to_records(expr: FunctorExprGraded) -> list[dict[str, Any]]:
    """One record per degree; terms rendered in the expression grammar."""
    return [
        {"degree": d, "terms": [t.render() for t in expr.at(d).terms]} for d in expr.degrees()
    ]


def records_to_expr(records: list[dict[str, Any]]) -> FunctorExprGraded:
    terms = []
    for rec in records:
        for text in rec["terms"]:
            terms.extend(parse_expr(text).terms)
    return FunctorExprGraded.of(terms)


def complex_to_record(c: ChainComplex) -> dict[str, Any]:
    """Basis labels and differentials of a complex; matrices as row-major lists."""
    return {
        "ranks": {str(n): r for n, r in c.ranks.items()},
        "labels": {str(n): list(names) for n, names in c.labels.items()},
        "differentials": {str(n): d.to_lists() for n, d in c.differentials.items()},
    }


def record_to_complex(rec: dict[str, Any]) -> ChainComplex:
    ranks = {int(n): int(r) for n, r in rec["ranks"].items()}
    diffs = {}
    for n, rows in rec["differentials"].items():
        deg = int(n)
        diffs[deg] = IntMatrix.from_rows(rows, ranks.get(deg, 0))
    labels = {int(n): tuple(names) for n, names in rec.get("labels", {}).items()}
    return ChainComplex(ranks, diffs, labels)

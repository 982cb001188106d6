"""Command-line front end: words, derived functors, symbolic output, golden tables, oracles.

Exit codes: 0 on success, 1 on a usage or parse error, 2 when a value needs
data the library cannot produce (a missing ``d_k``).
"""

from __future__ import annotations

import csv
import io
import json
import re
import sys
from dataclasses import dataclass
from typing import Any, Callable, Sequence

import click

from .abgroup import ChainComplex, GradedAbGroup, graded_homology
from .curtis import FREE, CellDiff, barratt_sequence, bifunctor_e1, e1_page
from .engine.derive import derive
from .engine.dobject import DObject
from .engine.ecomplex import e_complex
from .engine.serialize import complex_to_record, expr_to_records, graded_to_records
from .errors import UnsupportedDegree
from .leibowitz import SEED_ENV, DkProvider
from .words import (
    brute_count,
    enumerate_w,
    filtration_set,
    format_word,
    overline_set,
    stats,
    tangora_gf,
    tilde_w,
)

EXIT_USAGE = 1
EXIT_UNSUPPORTED = 2

FORMATS = ("text", "csv", "json")


class SpecError(click.UsageError):
    """A parse failure with the offending position marked."""


_SUMMAND = re.compile(r"\s*Z(?:/(\d+))?(?:\[(\d+)\])?\s*")


def parse_dobject_spec(text: str) -> DObject:
    """Parse ``term (('+'|'⊕') term)*`` with ``term = Z[/k][[shift]]``; ``0`` is empty."""
    if text.strip() in ("", "0"):
        return DObject()
    pieces = []
    pos = 0
    for part in re.split(r"([+⊕])", text):
        if part in ("+", "⊕"):
            pos += len(part)
            continue
        m = _SUMMAND.fullmatch(part)
        if not m:
            col = pos + len(part) - len(part.lstrip())
            raise SpecError(f"cannot parse summand at column {col + 1}:\n  {text}\n  {' ' * col}^")
        order = int(m.group(1)) if m.group(1) else 0
        if m.group(1) and order < 1:
            col = pos + part.index("/") + 1
            raise SpecError(f"cyclic order must be positive at column {col + 1}:\n  {text}\n  {' ' * col}^")
        shift = int(m.group(2) or 0)
        if order == 0:
            pieces.append(DObject.free(1, shift))
        else:
            pieces.append(DObject.cyclic(order, shift))
        pos += len(part)
    out = DObject()
    for p in pieces:
        out = out + p
    return out


@dataclass
class Context:
    fmt: str
    provider: DkProvider


def _emit_rows(ctx: Context, header: Sequence[str], rows: list[Sequence[Any]], records: Any) -> None:
    if ctx.fmt == "json":
        click.echo(json.dumps(records, ensure_ascii=False, indent=1))
    elif ctx.fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)
        click.echo(buf.getvalue(), nl=False)
    else:
        table = [list(map(str, header))] + [list(map(str, r)) for r in rows]
        widths = [max(len(r[i]) for r in table) for i in range(len(header))]
        for r in table:
            click.echo("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip())


def _emit_graded(ctx: Context, g: GradedAbGroup) -> None:
    records = graded_to_records(g)
    rows = [(r["degree"], r["free_rank"], " ".join(r["torsion"])) for r in records]
    if ctx.fmt == "text":
        if not records:
            click.echo("0")
        for d, grp in g.items():
            click.echo(f"{d}: {grp}")
        return
    _emit_rows(ctx, ("degree", "free_rank", "torsion"), rows, records)


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
@click.option("--format", "fmt", type=click.Choice(FORMATS), default="text", show_default=True)
@click.option(
    "--seeds",
    type=click.Path(exists=True, dir_okay=False),
    envvar=SEED_ENV,
    help=f"Seed file for the d_k table (also ${SEED_ENV}).",
)
@click.pass_context
def cli(ctx: click.Context, fmt: str, seeds: str | None) -> None:
    """Derived functors of Lie and super-Lie functors."""
    provider = DkProvider.with_seed_file(seeds) if seeds else DkProvider()
    ctx.obj = Context(fmt, provider)


@cli.command()
@click.option("--p", "p", type=int, required=True)
@click.option("--base", type=int, required=True, help="Even base 2n.")
@click.option("--len", "length", type=int, required=True)
@click.option("--filtration", type=int, default=None, help="Keep words of this filtration level.")
@click.option("--tilde", is_flag=True)
@click.option("--overline", is_flag=True)
@click.pass_obj
def words(ctx: Context, p: int, base: int, length: int, filtration: int | None, tilde: bool, overline: bool) -> None:
    """Admissible words with their degree d and odd count o."""
    if sum([filtration is not None, tilde, overline]) > 1:
        raise click.UsageError("--filtration, --tilde and --overline are exclusive")
    if filtration is not None:
        ws = filtration_set(p, base, length, filtration)
    elif tilde:
        ws = tilde_w(p, base, length)
    elif overline:
        ws = overline_set(p, base, length)
    else:
        ws = enumerate_w(p, base, length)
    rows = [(format_word(w), stats(w, p).d, stats(w, p).o) for w in ws]
    records = [{"word": r[0], "d": r[1], "o": r[2]} for r in rows]
    _emit_rows(ctx, ("word", "d", "o"), rows, records)


def _variant_option(f: Callable) -> Callable:
    return click.option("--variant", type=click.Choice(("lie", "super")), default="lie", show_default=True)(f)


@cli.command(name="derive")
@_variant_option
@click.option("--degree", "m", type=int, required=True)
@click.option("--dim", "n", type=int, default=0, show_default=True)
@click.option("--input", "spec", required=True, help="e.g. 'Z/6 + Z[1]'.")
@click.option("--max-degree", type=int, default=None)
@click.option("--p", "p", type=int, default=None, help="Keep only the p-primary part.")
@click.option("--slieofz-literal", is_flag=True, help="Literal degree formula for super-Lie of Z.")
@click.pass_obj
def derive_cmd(
    ctx: Context, variant: str, m: int, n: int, spec: str, max_degree: int | None, p: int | None, slieofz_literal: bool
) -> None:
    """Homotopy groups of the derived functor on a direct sum of shifted cyclic groups."""
    x = parse_dobject_spec(spec)
    g = derive(variant, m, x, n, max_degree=max_degree, provider=ctx.provider, literal=slieofz_literal)
    if p is not None:
        g = g.p_part(p)
    _emit_graded(ctx, g)


@cli.command()
@_variant_option
@click.option("--degree", "m", type=int, required=True)
@click.option("--dim", "n", type=int, required=True)
@click.option("--max-degree", type=int, default=None)
@click.option("--p", "p", type=int, default=None)
@click.pass_obj
def symbolic(ctx: Context, variant: str, m: int, n: int, max_degree: int | None, p: int | None) -> None:
    """Symbolic value on a free argument A."""
    expr = e_complex(m, n, tilde=variant == "super", max_degree=max_degree)
    if p is not None:
        expr = expr.filter(lambda t: (t.modulus is not None and t.modulus % p == 0) or t.atom.prime == p)
    records = expr_to_records(expr)
    rows = [(d, expr.pretty_at(d)) for d in expr.degrees()]
    if ctx.fmt == "text" and not rows:
        click.echo("0")
        return
    _emit_rows(ctx, ("degree", "value"), rows, records)


def _diff_rows(diffs: list[CellDiff]) -> list[tuple]:
    return [
        ("/".join(map(str, d.key)), d.printed, d.computed, d.status, d.tag, "ok" if d.ok else "FAIL")
        for d in diffs
    ]


@cli.command()
@click.option("--name", required=True, help="lie-zk, superlie-zk, appendixA, 3torsion, srp2, moore3, e1-l4, e1-ls3, ...")
@click.option("--only-diffs", is_flag=True, help="Show only cells that are not exact.")
@click.pass_obj
def table(ctx: Context, name: str, only_diffs: bool) -> None:
    """Recompute a golden table and diff it against the shipped data.

    Exits nonzero when an untagged cell differs.
    """
    from .tables import TABLES, run_table

    if name not in TABLES:
        raise click.UsageError(f"unknown table {name!r}; choose from {', '.join(TABLES)}")
    diffs = run_table(name)
    shown = [d for d in diffs if d.status != "exact"] if only_diffs else diffs
    records = [
        {"key": list(d.key), "printed": d.printed, "computed": d.computed, "status": d.status, "tag": d.tag, "ok": d.ok, "note": d.note}
        for d in shown
    ]
    _emit_rows(ctx, ("cell", "printed", "computed", "status", "tag", "ok"), _diff_rows(shown), records)
    failed = [d for d in diffs if not d.ok]
    if ctx.fmt == "text":
        click.echo(f"{name}: {len(diffs)} cells, {len(failed)} untagged differences")
    if failed:
        sys.exit(EXIT_USAGE)


@cli.command()
@click.option("--space", type=click.Choice(("moore", "bifunctor")), default="moore", show_default=True)
@click.option("--input", "spec", default="A", show_default=True, help="'A' for a free argument, else a group spec.")
@click.option("--n", "n", type=int, default=3, show_default=True)
@click.option("--r", "r_list", default="1-8", show_default=True, help="Comma list or range, e.g. 1-8,12,16.")
@click.option("--q-max", type=int, default=10, show_default=True)
@click.option("--p", "p", type=int, default=None)
@click.pass_obj
def curtis(ctx: Context, space: str, spec: str, n: int, r_list: str, q_max: int, p: int | None) -> None:
    """E^1 page of the lower central series spectral sequence (E^1 only, no differentials)."""
    if space == "bifunctor":
        page = bifunctor_e1(q_max=q_max)
    else:
        a = FREE if spec.strip() == "A" else _as_group(parse_dobject_spec(spec))
        page = e1_page(a, n, _parse_ranges(r_list), q_max, p)
    if ctx.fmt == "json":
        click.echo(page.to_json())
    elif ctx.fmt == "csv":
        click.echo(page.to_csv(), nl=False)
    else:
        click.echo(page.to_text())
        if space == "bifunctor":
            click.echo(barratt_sequence())


def _as_group(x: DObject):
    if not x.is_group():
        raise click.UsageError("the Moore space argument must be a group in degree 0")
    return x


def _parse_ranges(text: str) -> list[int]:
    out: list[int] = []
    for part in text.split(","):
        part = part.strip()
        m = re.fullmatch(r"(\d+)(?:-(\d+))?", part)
        if not m:
            raise click.UsageError(f"bad range {part!r}")
        lo = int(m.group(1))
        hi = int(m.group(2) or lo)
        out.extend(range(lo, hi + 1))
    return out


def _parse_ints(text: str) -> list[int]:
    try:
        return [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise click.UsageError(f"expected comma-separated integers, got {text!r}") from None


@cli.command()
@click.option(
    "--complex",
    "kind",
    type=click.Choice(("dgls", "prime", "koszul", "derham", "simplicial", "specialN")),
    required=True,
)
@click.option("--m", "m", type=int, default=2, help="Weight (dgls).")
@click.option("--diag", default="2", show_default=True, help="Diagonal of the map B -> A (dgls, prime).")
@click.option("--shifted", is_flag=True, help="Shifted dgls.")
@click.option("--unshifted", is_flag=True, help="Unshifted special kernel.")
@click.option("--p", "p", type=int, default=2, show_default=True)
@click.option("--n", "n", type=int, default=2, show_default=True)
@click.option("--r", "r", type=int, default=1, show_default=True)
@click.option("--d", "d", type=int, default=2, show_default=True)
@click.option("--functor", type=click.Choice(("Lambda2", "Gamma2", "SP2", "Tensor2")), default="Gamma2")
@click.option("--order", type=int, default=2, show_default=True, help="Cyclic order; 0 means Z (simplicial).")
@click.option("--cap", type=int, default=6, show_default=True)
@click.option("--dump", is_flag=True, help="Also print the complex.")
@click.pass_obj
def oracle(ctx: Context, kind: str, m: int, diag: str, shifted: bool, unshifted: bool, p: int, n: int, r: int, d: int,
           functor: str, order: int, cap: int, dump: bool) -> None:
    """Explicit complexes and their Smith normal form homology."""
    from . import oracle as orc

    if kind == "specialN":
        res = orc.special_n_kernel(d, p, r, shifted=not unshifted)
        _emit_rows(ctx, ("d", "p", "r", "dim"), [(d, p, r, res.dim)], {"d": d, "p": p, "r": r, "dim": res.dim})
        return
    if kind == "simplicial":
        _emit_graded(ctx, orc.simplicial_derived(functor, order, n, cap))
        return
    c: ChainComplex
    if kind == "dgls":
        c = orc.build_dgls(m, orc.TwoTermMap.diagonal(_parse_ints(diag)), shifted=shifted)
    elif kind == "prime":
        c = orc.build_prime_truncated(p, orc.TwoTermMap.diagonal(_parse_ints(diag)))
    elif kind == "koszul":
        c = orc.koszul_complex(n, r)
    else:
        c = orc.dual_de_rham(n, r)
    h = graded_homology(c)
    if dump:
        if ctx.fmt == "json":
            click.echo(json.dumps({"complex": complex_to_record(c), "homology": graded_to_records(h)}, ensure_ascii=False))
            return
        for deg in sorted(c.ranks, reverse=True):
            labels = c.labels.get(deg, ())
            click.echo(f"[{deg}] rank {c.ranks[deg]}: " + ", ".join(labels))
    _emit_graded(ctx, h)


@cli.command()
@click.option("--d", "d", type=int, required=True)
@click.option("--m", "m", type=int, required=True)
@click.option("--n", "n", type=int, required=True, help="Number of coefficients.")
@click.pass_obj
def gf(ctx: Context, d: int, m: int, n: int) -> None:
    """Generating-function coefficients next to a brute-force count."""
    coeffs = tangora_gf(d, m, n)
    rows = [(i, coeffs[i - 1], brute_count(d, m, i), "ok" if coeffs[i - 1] == brute_count(d, m, i) else "DIFF")
            for i in range(1, n + 1)]
    records = [{"n": i, "gf": a, "brute": b} for i, a, b, _ in rows]
    _emit_rows(ctx, ("n", "gf", "brute", "check"), rows, records)


def main(argv: Sequence[str] | None = None) -> int:
    """Entry point; returns the process exit code."""
    try:
        cli.main(args=list(argv) if argv is not None else None, prog_name="derived-lie", standalone_mode=False)
    except UnsupportedDegree as err:
        click.echo(f"error: {err}", err=True)
        return EXIT_UNSUPPORTED
    except click.exceptions.Exit as ex:
        return ex.exit_code
    except click.ClickException as err:
        err.show()
        return EXIT_USAGE
    except click.Abort:
        return EXIT_USAGE
    except ValueError as err:
        click.echo(f"error: {err}", err=True)
        return EXIT_USAGE
    except SystemExit as ex:
        return int(ex.code or 0)
    return 0


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()

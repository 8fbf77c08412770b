"""Command-line interface: ``surftri <command>``."""

from __future__ import annotations

import json
import logging
import sys
from pathlib import Path

import click

from . import catalog, ps_enum
from .generator import Unsupported, enumerate_all, enumerate_irreducible, triangulations
from .isomorphism import canonical_code
from .moves import InvalidSplit, NotAnEdge, NotContractible, contract, contractible_edges, is_irreducible, split
from .triangulation import (
    SURFACES,
    Triangulation,
    TriangulationError,
    degree_sequence,
    format_tri,
    read_tri,
    surface_of,
    write_tri,
)
from .verify import verify_paper


def _load(path: str) -> Triangulation:
    try:
        return read_tri(path)
    except TriangulationError as exc:
        raise click.ClickException(f"{path}: {type(exc).__name__}: {exc}") from exc


def _emit(t: Triangulation, out: str | None, comment: str | None = None) -> None:
    if out:
        write_tri(t, out, comment)
    else:
        click.echo(format_tri(t, comment), nl=False)


def _seq(xs) -> str:
    return ",".join(map(str, xs))


@click.group()
@click.option("-v", "--verbose", is_flag=True, help="Log progress to stderr.")
def main(verbose: bool) -> None:
    """Triangulations of closed surfaces and the Klein bottle catalog."""
    logging.basicConfig(level=logging.DEBUG if verbose else logging.WARNING, format="%(levelname)s %(message)s")


@main.command()
@click.argument("file", type=click.Path(exists=True, dir_okay=False))
def check(file: str) -> None:
    """Validate FILE and print its invariants."""
    t = _load(file)
    s = surface_of(t)
    ce = contractible_edges(t)
    click.echo(f"valid n={t.vertex_count} edges={t.edge_count} faces={t.face_count}")
    click.echo(f"surface={s.name} chi={s.euler_characteristic} orientable={str(s.orientable).lower()}")
    click.echo(f"degrees={_seq(degree_sequence(t))}")
    click.echo(f"irreducible={str(not ce).lower()} contractible_edges={len(ce)}")
    name = catalog.identify(t)
    if name:
        click.echo(f"catalog={name}")


@main.command()
@click.argument("file", type=click.Path(exists=True, dir_okay=False))
def canon(file: str) -> None:
    """Print the canonical code of FILE on one line."""
    click.echo(" ".join(map(str, canonical_code(_load(file)))))


@main.command("contract")
@click.argument("file", type=click.Path(exists=True, dir_okay=False))
@click.argument("a", type=int)
@click.argument("b", type=int)
@click.option("-o", "--out", type=click.Path(dir_okay=False), help="Write here instead of stdout.")
def contract_cmd(file: str, a: int, b: int, out: str | None) -> None:
    """Contract edge A-B of FILE."""
    t = _load(file)
    try:
        _emit(contract(t, (a, b)), out)
    except (NotAnEdge, NotContractible) as exc:
        raise click.ClickException(f"{type(exc).__name__}: {exc}") from exc


@main.command("split")
@click.argument("file", type=click.Path(exists=True, dir_okay=False))
@click.argument("v", type=int)
@click.argument("b", type=int)
@click.argument("d", type=int)
@click.option("-o", "--out", type=click.Path(dir_okay=False), help="Write here instead of stdout.")
def split_cmd(file: str, v: int, b: int, d: int, out: str | None) -> None:
    """Split vertex V of FILE along its neighbours B and D."""
    t = _load(file)
    try:
        _emit(split(t, v, b, d), out)
    except InvalidSplit as exc:
        raise click.ClickException(f"InvalidSplit: {exc}") from exc


# --- catalog ------------------------------------------------------------------


@main.group("catalog")
def catalog_group() -> None:
    """The named triangulations."""


@catalog_group.command("list")
def catalog_list() -> None:
    for name in catalog.ALL_NAMES:
        e = catalog.get(name)
        t = e.triangulation
        click.echo(f"{name}\t{e.kind}\tn={t.vertex_count}\t{_seq(degree_sequence(t))}")


@catalog_group.command("show")
@click.argument("name")
def catalog_show(name: str) -> None:
    """Print entry NAME in .tri format."""
    if name not in catalog.ALL_NAMES:
        raise click.ClickException(f"unknown entry {name!r}; try 'catalog list'")
    e = catalog.get(name)
    comment = f"{name} ({e.kind}) degrees {_seq(e.expected_degree_sequence)}"
    _emit(e.triangulation, None, comment)


def _report(checks, as_json: bool) -> bool:
    ok = True
    for c in checks:
        ok &= c.passed
        if as_json:
            click.echo(json.dumps({"check": c.name, "passed": c.passed, "detail": c.detail}))
        else:
            click.echo(c.line())
    return ok


@catalog_group.command("verify")
@click.option("--json", "as_json", is_flag=True)
def catalog_verify(as_json: bool) -> None:
    """Check validity, surface, irreducibility, degrees and distinctness."""
    if not _report(catalog.verify_catalog(), as_json):
        sys.exit(1)


# --- ps1 --------------------------------------------------------------------


@main.group()
def ps1() -> None:
    """Completions of the partial structure PS1.2."""


@ps1.command("table")
def ps1_table() -> None:
    for c, o in ps_enum.table1().items():
        click.echo(f"{c} -> {o}")


@ps1.command("all")
def ps1_all() -> None:
    for c, o in ps_enum.classify_all().items():
        click.echo(f"{c} -> {o}")


# --- generation ---------------------------------------------------------------


@main.command("enumerate")
@click.option("--surface", type=click.Choice(["sphere", "projective", "klein"]), required=True)
@click.option("--n", "n", type=int, required=True)
@click.option("--irreducible-only", is_flag=True)
@click.option("--jobs", type=click.IntRange(min=1), default=1, show_default=True)
@click.option("--out", type=click.Path(file_okay=False), help="Directory for one .tri file per class.")
@click.option("--long", "long_running", is_flag=True, help="Allow the long-running vertex counts.")
def enumerate_cmd(surface: str, n: int, irreducible_only: bool, jobs: int, out: str | None, long_running: bool) -> None:
    """Generate every triangulation of SURFACE on N vertices."""
    surf = SURFACES[surface]

    def progress(i, k):
        logging.getLogger(__name__).info("task %d/%d", i, k)

    try:
        if irreducible_only:
            codes = enumerate_irreducible(surf, n, jobs=jobs, long_running=long_running, progress=progress)
        else:
            codes = enumerate_all(surf, n, jobs=jobs, long_running=long_running, progress=progress)
    except Unsupported as exc:
        raise click.ClickException(str(exc)) from exc
    tris = triangulations(codes)
    irreducible = sum(1 for t in tris if is_irreducible(t))
    if out:
        d = Path(out)
        d.mkdir(parents=True, exist_ok=True)
        for i, t in enumerate(tris, 1):
            write_tri(t, d / f"{surface}_n{n}_{i:04d}.tri", comment=f"{surface} n={n} class {i}/{len(tris)}")
    click.echo(f"surface={surface} n={n} classes={len(tris)} irreducible={irreducible}")


@main.command("verify-paper")
@click.option("--level", type=click.Choice(["fast", "full"]), default="fast", show_default=True)
@click.option("--jobs", type=click.IntRange(min=1), default=1, show_default=True)
@click.option("--json", "as_json", is_flag=True, help="One JSON object per line.")
def verify_paper_cmd(level: str, jobs: int, as_json: bool) -> None:
    """Re-derive the Klein bottle classification; exit 0 iff every check passes."""

    def progress(label, i, k):
        if level == "full" or i == k:
            click.echo(f"progress {label} {i}/{k}", err=True)

    if not _report(verify_paper(level, jobs, progress), as_json):
        sys.exit(1)


if __name__ == "__main__":
    main()

"""Command-line interface: ``tritile generate|verify|render|table|search``.

Exit codes: 0 success, 1 verification failed, 2 not constructible or bad
tile, 3 a construction failed its own verification, 4 unreadable document,
5 search budget exceeded.
"""
from __future__ import annotations

import csv
import io
import sys
import time
from pathlib import Path

import click

from . import constructions as C
from .document import DocumentError, load, save
from .exactfield import QS3, qs3_sqrt
from .families import family_N_values, smallest_N_table
from .geom import ConvexPolygon, Point
from .render import render_svg
from .search import SearchBudget, SearchStatus, exhaustive_search
from .tiles import TileError, TileShape, Tiling, make_tile
from .verify import verify_tiling

EXIT_FAILED, EXIT_INVALID, EXIT_INTERNAL, EXIT_PARSE, EXIT_BUDGET = 1, 2, 3, 4, 5

FAMILIES = ("equilateral", "isosceles", "arith2", "odd", "arithmetic", "arith-frob", "triple", "trapezoid", "parallelogram")


def _ints(text: str, n: int, what: str) -> tuple[int, ...]:
    try:
        vals = tuple(int(p) for p in text.split(","))
    except ValueError:
        raise click.BadParameter(f"{what} must be {n} comma-separated integers") from None
    if len(vals) != n:
        raise click.BadParameter(f"{what} must be {n} comma-separated integers")
    return vals


def _big_int(text: str) -> int:
    """Accept 1000000, 10^6 or 1e6."""
    t = text.strip().replace("_", "")
    try:
        if "^" in t:
            base, exp = t.split("^")
            return int(base) ** int(exp)
        if "e" in t.lower():
            mant, exp = t.lower().split("e")
            return int(mant) * 10 ** int(exp)
        return int(t)
    except ValueError:
        raise click.BadParameter(f"cannot read {text!r} as an integer") from None


def _shape(tile: str, variant: str) -> TileShape:
    a, b, c = _ints(tile, 3, "--tile")
    try:
        return make_tile(a, b, c, variant)
    except TileError as exc:
        click.echo(f"invalid tile: {exc}", err=True)
        sys.exit(EXIT_INVALID)


def _need(value, flag: str, family: str):
    if value is None:
        click.echo(f"{family} needs {flag}", err=True)
        sys.exit(EXIT_INVALID)
    return value


tile_option = click.option("--tile", required=True, help="Side lengths a,b,c.")
variant_option = click.option(
    "--variant", type=click.Choice(["obtuse", "acute"]), default="obtuse", show_default=True,
    help="obtuse: c faces 2pi/3; acute: c faces pi/3.",
)


@click.group()
@click.version_option(package_name="tritile")
def main() -> None:
    """Exact tilings of polygons by congruent copies of one triangle."""


def _build(family: str, shape: TileShape, o: dict) -> Tiling:
    if family == "equilateral":
        if o["rst"]:
            return C.tile_equilateral(shape, *_ints(o["rst"], 3, "--rst"))
        return C.tile_equilateral(shape, *C.choose_rst(shape, _need(o["m"], "--m or --rst", family)))
    if family == "isosceles":
        return C.tile_isosceles(shape, _need(o["m"], "--m", family), o["swap"])
    if family == "arith2":
        return C.tile_arith2(shape, _need(o["m"], "--m", family), o["swap"])
    if family == "odd":
        return C.tile_odd(shape, _need(o["m"], "--m", family), o["swap"])
    if family == "arithmetic":
        return C.tile_arithmetic(shape, _need(o["m"], "--m", family), o["option"])
    if family in ("arith-frob", "triple"):
        k, k1 = o["k"], o["k1"]
        if k is None and k1 is None and o["m"] is not None:
            w = C.frobenius_decompose(o["m"], shape.b, shape.c)
            if w is None:
                raise C.NotConstructible(f"m = {o['m']} is not in {shape.b}N0 + {shape.c}N0")
            k, k1 = w.k, w.k1
        k, k1 = k or 0, k1 or 0
        if family == "triple":
            return C.tile_triple_angle(shape, k, k1, o["swap"])
        return C.tile_arithmetic_frobenius(shape, k, k1)
    if family == "trapezoid":
        return C.tile_ideal_trapezoid(shape, _need(o["x"], "--x", family), _need(o["ell"], "--ell", family))
    if family == "parallelogram":
        return C.tile_parallelogram(shape, _need(o["horiz"], "--horiz", family))
    raise AssertionError(family)


def _params_text(params: dict) -> str:
    return ",".join(f"{k}={str(v).lower() if isinstance(v, bool) else v}" for k, v in params.items()) or "-"


@main.command()
@click.argument("family", type=click.Choice(FAMILIES))
@tile_option
@variant_option
@click.option("--m", type=int, help="Scale parameter m.")
@click.option("--rst", help="Pinwheel split r,s,t (equilateral).")
@click.option("--k", type=int, help="Multiple of b in m = bk + ck1.")
@click.option("--k1", type=int, help="Multiple of c in m = bk + ck1.")
@click.option("--x", type=int, help="Short side of the ideal trapezoid.")
@click.option("--ell", type=int, help="Lateral side of the ideal trapezoid.")
@click.option("--horiz", type=int, help="Horizontal side of the parallelogram.")
@click.option("--swap", is_flag=True, help="Exchange the roles of a and b.")
@click.option("--option", type=click.Choice(["1", "2"]), default="2", show_default=True, help="Arithmetic variant.")
@click.option("--out", type=click.Path(dir_okay=False), help="Output document (default: <family>.json).")
def generate(family, tile, variant, out, **opts):
    """Build a construction, verify it, and write it as a JSON document."""
    shape = _shape(tile, variant)
    opts["option"] = int(opts["option"])
    try:
        t = _build(family, shape, opts)
    except C.NotConstructible as exc:
        click.echo(f"not constructible: {exc}", err=True)
        sys.exit(EXIT_INVALID)
    report = verify_tiling(t)
    click.echo(
        f"{family} shape={shape.a},{shape.b},{shape.c} params={_params_text(t.params)} "
        f"N={t.count} verified={'yes' if report.passed else 'no'}"
    )
    if not report.passed:
        click.echo(f"internal error: {report.summary()}", err=True)
        sys.exit(EXIT_INTERNAL)
    save(t, out or f"{family}.json")


def _load_or_exit(path: str) -> Tiling:
    try:
        return load(path)
    except DocumentError as exc:
        click.echo(f"cannot read {path}: {exc}", err=True)
        sys.exit(EXIT_PARSE)


@main.command()
@click.argument("path", type=click.Path(dir_okay=False))
@click.option("--max-failures", type=int, default=20, show_default=True, help="Failures to list.")
def verify(path, max_failures):
    """Check a tiling document exactly."""
    t = _load_or_exit(path)
    report = verify_tiling(t)
    click.echo(report.summary())
    for f in report.failures[:max_failures]:
        click.echo(f"  {f}")
    if len(report.failures) > max_failures:
        click.echo(f"  ... {len(report.failures) - max_failures} more")
    sys.exit(0 if report.passed else EXIT_FAILED)


@main.command()
@click.argument("path", type=click.Path(dir_okay=False))
@click.option("--out", type=click.Path(dir_okay=False), help="SVG file (default: PATH with .svg).")
@click.option("--digits", type=click.IntRange(1, 40), default=9, show_default=True, help="Fractional digits.")
@click.option("--force", is_flag=True, help="Render even if verification fails.")
def render(path, out, digits, force):
    """Draw a tiling document as SVG."""
    t = _load_or_exit(path)
    if not force:
        report = verify_tiling(t)
        if not report.passed:
            click.echo(f"refusing to render: {report.summary()} (use --force)", err=True)
            sys.exit(EXIT_FAILED)
    target = Path(out) if out else Path(path).with_suffix(".svg")
    target.write_text(render_svg(t, digits), encoding="utf-8")
    click.echo(f"wrote {target} ({t.count} tiles)")


@main.command()
@tile_option
@variant_option
@click.option("--limit", type=int, help="Also list every N up to this bound.")
@click.option("--csv", "as_csv", is_flag=True, help="CSV instead of aligned text.")
def table(tile, variant, limit, as_csv):
    """Tile-count families and their smallest N."""
    shape = _shape(tile, variant)
    header = ["family", "angles", "N", "m", "smallest_N"]
    if limit:
        header.append(f"N<={limit}")
    rows = []
    for fam, n in smallest_N_table(shape):
        row = [fam.tag, fam.angles, fam.formula, fam.admissible_text(shape), str(n)]
        if limit:
            row.append(" ".join(map(str, family_N_values(shape, fam, limit))) or "-")
        rows.append(row)
    if as_csv:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)
        click.echo(buf.getvalue(), nl=False)
        return
    widths = [max(len(r[i]) for r in [header] + rows) for i in range(len(header))]
    for r in [header] + rows:
        click.echo("  ".join(cell.ljust(widths[i]) for i, cell in enumerate(r)).rstrip())


def _triangle_region(p: int, q: int, r: int) -> ConvexPolygon:
    # base p on the x-axis, side q from the origin, side r from (p, 0)
    x = QS3(p * p + q * q - r * r) / (2 * p)
    y = qs3_sqrt(QS3(q * q) - x * x)
    if y is None or not y:
        raise ValueError(f"triangle {p},{q},{r} has no exact coordinates in Q(sqrt 3)")
    return ConvexPolygon.from_points([Point.of(0, 0), Point.of(p, 0), Point(x, y)])


@main.command()
@tile_option
@variant_option
@click.option("--equilateral", type=int, help="Equilateral triangle of side S.")
@click.option("--trapezoid", help="Ideal trapezoid x,ell.")
@click.option("--parallelogram", help="Parallelogram with sides p,q and a 60 degree angle.")
@click.option("--triangle", help="Triangle with side lengths p,q,r.")
@click.option("--max-tiles", type=int, default=20, show_default=True)
@click.option("--max-nodes", default="10^6", show_default=True, help="Accepts 1000000, 10^6 or 1e6.")
@click.option("--time-limit", type=float, default=60.0, show_default=True, help="Seconds.")
@click.option("--out", type=click.Path(dir_okay=False), help="Write the tiling here when found.")
def search(tile, variant, equilateral, trapezoid, parallelogram, triangle, max_tiles, max_nodes, time_limit, out):
    """Exhaustive search for a tiling of a small region."""
    shape = _shape(tile, variant)
    chosen = [v is not None for v in (equilateral, trapezoid, parallelogram, triangle)]
    if sum(chosen) != 1:
        raise click.UsageError("give exactly one of --equilateral, --trapezoid, --parallelogram, --triangle")
    try:
        if equilateral is not None:
            region = C.equilateral_region(equilateral)
        elif trapezoid is not None:
            region = C.IdealTrapezoid(*_ints(trapezoid, 2, "--trapezoid")).polygon()
        elif parallelogram is not None:
            region = C.parallelogram_region(*_ints(parallelogram, 2, "--parallelogram"))
        else:
            region = _triangle_region(*_ints(triangle, 3, "--triangle"))
    except ValueError as exc:
        if isinstance(exc, click.BadParameter):
            raise
        click.echo(f"invalid region: {exc}", err=True)
        sys.exit(EXIT_INVALID)
    budget = SearchBudget(max_tiles, _big_int(max_nodes), time_limit)
    start = time.monotonic()
    outcome = exhaustive_search(region, shape, budget)
    elapsed = time.monotonic() - start
    st = outcome.status
    if st is SearchStatus.FOUND:
        what = f"{outcome.tiling.count} tiles"
    elif st is SearchStatus.EXHAUSTED_NONE:
        what = f"none ({outcome.reason})"
    else:
        what = f"gave up ({outcome.reason})"
    click.echo(f"{st.value}: {what} nodes={outcome.nodes_explored} elapsed={elapsed:.2f}s")
    if st is SearchStatus.FOUND and out:
        save(outcome.tiling, out)
    if st is SearchStatus.BUDGET_EXCEEDED:
        sys.exit(EXIT_BUDGET)


if __name__ == "__main__":  # pragma: no cover
    main()

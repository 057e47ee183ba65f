#!/usr/bin/env python3
"""
CLI Commands - gauge tools, invariants, feasibility, extremal reports,
chain construction and sweeps.

Documents go to stdout; diagnostics go to stderr. Exit codes: 0 success,
1 infeasible verdict or failed verification (report still emitted), 2 usage
or input errors.
"""

import contextlib
import enum
import sys
from typing import Iterator, List, Optional

import typer
from rich.console import Console
from rich.markup import escape

from ..core import (
    Gauge,
    construct_chain,
    critical_polynomials,
    extremal_area,
    extremal_perimeter,
    feasibility_test,
    find_socles,
    loads_chain,
    make_gauge,
    moments3,
    moments4,
    moments6,
    moments_numeric,
    neighbor_curvatures,
    poristic_range,
    sweep,
    verify_chain,
    yiu_quadratic,
)
from ..core.invariants import ERRATA, Moments
from ..core.serialization import chain_to_dict, dumps, format_number
from ..utils.config import SteinerConfig
from ..utils.logger import get_logger
from ..utils.validators import InputError, SteinerError
from ..visualization import SweepChartGenerator, emit_chain_svg

err_console = Console(stderr=True)
logger = get_logger(__name__)

EXIT_VERDICT = 1
EXIT_USAGE = 2


class OutputFormat(str, enum.Enum):
    json = "json"
    text = "text"


class ChainFormat(str, enum.Enum):
    json = "json"
    svg = "svg"


class Target(str, enum.Enum):
    area = "area"
    perimeter = "perimeter"


@contextlib.contextmanager
def cli_errors() -> Iterator[None]:
    """Turn package errors into a one-line diagnostic and exit code 2"""
    try:
        yield
    except SteinerError as e:
        logger.debug("Command failed", exc_info=True)
        err_console.print(f"[red]Error: {escape(str(e))}[/red]", soft_wrap=True)
        raise typer.Exit(EXIT_USAGE)


def get_config(ctx: typer.Context) -> SteinerConfig:
    return ctx.obj if isinstance(ctx.obj, SteinerConfig) else SteinerConfig()


def emit(document: str) -> None:
    typer.echo(document, nl=not document.endswith("\n"))


def resolve_gauge(outer: float, inner: float, n: int, d: Optional[float]) -> Gauge:
    """Gauge from CLI flags; d follows from the Pedoe relation when omitted"""
    if d is None:
        return make_gauge(outer, inner, n)
    return Gauge(outer, inner, d, n)


def parse_radii(text: str) -> List[float]:
    try:
        return [float(part) for part in text.split(",")]
    except ValueError:
        raise typer.BadParameter(f"expected comma-separated decimals, got {text!r}", param_hint="--radii")


OUTER = typer.Option(..., "--R", help="Radius of the outer Soddy circle")
INNER = typer.Option(..., "--r", help="Radius of the inner Soddy circle")
CHAIN_N = typer.Option(..., "--n", help="Number of circles in the chain")
CHAIN_N4 = typer.Option(4, "--n", help="Number of circles in the chain (extremal problems need 4)")
OFFSET = typer.Option(None, "--d", help="Distance between Soddy centres; derived from R, r, n when omitted")


def gauge_command(
    ctx: typer.Context,
    outer: float = OUTER,
    inner: float = INNER,
    n: int = CHAIN_N,
    d: Optional[float] = OFFSET,
):
    """Validate or derive a gauge (R, r, d, n)."""
    config = get_config(ctx)
    with cli_errors():
        g = resolve_gauge(outer, inner, n, d)
        r_lo, r_hi = g.radius_range()
        emit(dumps({
            "gauge": g.to_dict(),
            "q": g.q,
            "pedoe_residual": g.pedoe_residual,
            "concentric": g.is_concentric,
            "radius_range": [r_lo, r_hi],
        }, config.number_digits))


def _select_moments(g: Gauge, k: int):
    if g.n == 3 and k <= 2:
        return "closed-form", moments3(g).values[:k]
    if g.n == 4 and k <= 3:
        return "closed-form", moments4(g).values[:k]
    if g.n == 6 and k <= 5:
        return "axial-chain", moments6(g).values[:k]
    return "numeric", moments_numeric(g, k).values


def moments_command(
    ctx: typer.Context,
    outer: float = OUTER,
    inner: float = INNER,
    n: int = CHAIN_N,
    d: Optional[float] = OFFSET,
    k: Optional[int] = typer.Option(None, "--k", help="Number of moments (default n-1)"),
    output_format: OutputFormat = typer.Option(OutputFormat.json, "--format", help="json or text"),
):
    """Power sums I_1..I_k of the chain bends."""
    config = get_config(ctx)
    with cli_errors():
        g = resolve_gauge(outer, inner, n, d)
        k = g.n - 1 if k is None else k
        if k < 1:
            raise InputError(f"--k must be >= 1, got {k}")
        source, values = _select_moments(g, k)
        moments = Moments(tuple(values), g.n)

    if output_format is OutputFormat.text:
        lines = [f"I{i} {format_number(v, config.number_digits)}" for i, v in enumerate(moments, 1)]
        lines.append(f"source {source}")
        lines.append(f"invariant {str(moments.is_invariant).lower()}")
        lines.extend(f"note {entry}" for entry in ERRATA)
        emit("\n".join(lines) + "\n")
        return
    emit(dumps({
        "gauge": g.to_dict(),
        "moments": list(moments.values),
        "invariant": moments.is_invariant,
        "source": source,
    }, config.number_digits))


def range_command(
    ctx: typer.Context,
    outer: float = OUTER,
    inner: float = INNER,
    n: int = CHAIN_N,
    d: Optional[float] = OFFSET,
):
    """Smallest and largest radius (and bend) of the poristic family."""
    config = get_config(ctx)
    with cli_errors():
        rng = poristic_range(resolve_gauge(outer, inner, n, d))
    emit(dumps({"r_lo": rng.r_lo, "r_hi": rng.r_hi, "b_lo": rng.b_lo, "b_hi": rng.b_hi}, config.number_digits))


def neighbors_command(
    ctx: typer.Context,
    u: float = typer.Option(..., "--u", help="Radius of a chain circle"),
    outer: float = OUTER,
    inner: float = INNER,
    n: int = CHAIN_N,
    d: Optional[float] = OFFSET,
):
    """Bends of the two neighbours of a circle of radius u."""
    config = get_config(ctx)
    with cli_errors():
        g = resolve_gauge(outer, inner, n, d)
        quadratic = yiu_quadratic(g, u, config.geometry_tol)
        v_minus, v_plus = neighbor_curvatures(g, u, config.geometry_tol, config.discriminant_tol)
    emit(dumps({
        "u": u,
        "v_minus": v_minus,
        "v_plus": v_plus,
        "radii": [1.0 / v_plus, 1.0 / v_minus],
        "quadratic": {"alpha": quadratic.alpha, "beta": quadratic.beta, "gamma": quadratic.gamma},
    }, config.number_digits))


def feasible_command(
    ctx: typer.Context,
    radii: str = typer.Option(..., "--radii", help="Four radii in chain order, e.g. 3,2.4,2,2.4"),
    tol: Optional[float] = typer.Option(None, "--tol", help="Relative tolerance (default from config)"),
    exhibit: bool = typer.Option(False, "--exhibit", help="Attach a realising chain when feasible"),
):
    """Decide whether four radii, in this cyclic order, form a Steiner chain."""
    config = get_config(ctx)
    values = parse_radii(radii)
    with cli_errors():
        report = feasibility_test(
            values, tol if tol is not None else config.feasibility_tol, exhibit, config.discriminant_tol
        )
    doc = report.to_dict()
    doc["radii"] = values
    emit(dumps(doc, config.number_digits))
    if not report.verdict:
        raise typer.Exit(EXIT_VERDICT)


def _extremal_text(result, target: Target, digits: int) -> str:
    label = "A" if target is Target.area else "L"
    lines = [
        f"target {target.value}",
        f"unit {result.unit.value}",
        f"{label}_max {format_number(result.max_value, digits)}",
        f"{label}_min {format_number(result.min_value, digits)}",
    ]
    if target is Target.area:
        lines.append(f"S_max {format_number(result.raw_max, digits)}")
        lines.append(f"S_min {format_number(result.raw_min, digits)}")
    for name, chain in (("argmax", result.argmax), ("argmin", result.argmin)):
        bends = " ".join(format_number(b, digits) for b in chain.bends)
        lines.append(f"{name} {chain.kind.value} {bends}")
    return "\n".join(lines) + "\n"


def extremal_command(
    ctx: typer.Context,
    target: Target = typer.Option(..., "--target", help="area or perimeter"),
    outer: float = OUTER,
    inner: float = INNER,
    n: int = CHAIN_N4,
    d: Optional[float] = OFFSET,
    output_format: OutputFormat = typer.Option(OutputFormat.text, "--format", help="text or json"),
):
    """Maximal and minimal area or perimeter over the poristic 4-chains."""
    config = get_config(ctx)
    with cli_errors():
        g = resolve_gauge(outer, inner, n, d)
        result = extremal_area(g) if target is Target.area else extremal_perimeter(g)
        polys = critical_polynomials(g)
        rng = poristic_range(g)
        p4_roots = polys.roots_in("P4", rng.b_lo, rng.b_hi)
    if p4_roots:
        logger.warning(f"P4 has real roots in the poristic interval: {p4_roots}")

    if output_format is OutputFormat.text:
        emit(_extremal_text(result, target, config.number_digits))
        return
    doc = result.to_dict()
    doc.update({"gauge": g.to_dict(), "target": target.value, "p4_roots_in_range": list(p4_roots)})
    emit(dumps(doc, config.number_digits))


def _construct_check(chain, config: SteinerConfig) -> dict:
    report = verify_chain(chain, config.geometry_tol)
    check = {"verify": report.to_dict()}
    if chain.n == 4:
        inner, outer = find_socles(chain.circles, config.geometry_tol)
        check["socles"] = {"inner": inner.to_dict(), "outer": outer.to_dict()}
        check["feasible"] = feasibility_test(
            chain.radii, config.feasibility_tol, discriminant_tol=config.discriminant_tol
        ).verdict
    return check


def construct_command(
    ctx: typer.Context,
    outer: float = OUTER,
    inner: float = INNER,
    n: int = CHAIN_N,
    d: Optional[float] = OFFSET,
    phase: float = typer.Option(0.0, "--phase", help="Annulus phase of circle 0 (0 gives the axial chain)"),
    output_format: ChainFormat = typer.Option(ChainFormat.json, "--format", help="json or svg"),
    check: bool = typer.Option(False, "--check", help="Verify tangencies and recover the socles"),
):
    """Construct the chain at a given phase and emit it as JSON or SVG."""
    config = get_config(ctx)
    with cli_errors():
        g = resolve_gauge(outer, inner, n, d)
        chain = construct_chain(g, phase)
        checked = _construct_check(chain, config) if check else None

    if output_format is ChainFormat.svg:
        emit(emit_chain_svg(chain, precision=config.svg_precision, margin=config.svg_margin))
    else:
        doc = chain_to_dict(chain)
        if checked is not None:
            doc["check"] = checked
        emit(dumps(doc, config.number_digits))

    if checked is not None:
        ok = checked["verify"]["passed"] and checked.get("feasible", True)
        if not ok:
            raise typer.Exit(EXIT_VERDICT)


def sweep_command(
    ctx: typer.Context,
    outer: float = OUTER,
    inner: float = INNER,
    n: int = CHAIN_N4,
    d: Optional[float] = OFFSET,
    points: Optional[int] = typer.Option(None, "--points", help="Grid size m (default from config)"),
    workers: Optional[int] = typer.Option(None, "--workers", help="Worker threads (default from config)"),
    chart: Optional[str] = typer.Option(None, "--chart", help="Also save a PNG chart of S(t) and L(t)"),
):
    """CSV table of t, S(t), L(t) over the poristic bend range."""
    config = get_config(ctx)
    with cli_errors():
        g = resolve_gauge(outer, inner, n, d)
        table = sweep(g, points or config.sweep_points, workers or config.sweep_workers)
        if chart:
            SweepChartGenerator().generate_sweep_chart(
                table, chart, area=extremal_area(g), perimeter=extremal_perimeter(g)
            )
    emit(table.to_csv(config.number_digits))


def verify_command(
    ctx: typer.Context,
    source: str = typer.Argument("-", help="Chain JSON file, or - for stdin"),
):
    """Check every tangency of a chain document produced by construct."""
    config = get_config(ctx)
    with cli_errors():
        if source == "-":
            text = sys.stdin.read()
        else:
            try:
                with open(source, "r", encoding="utf-8") as f:
                    text = f.read()
            except OSError as e:
                raise InputError(f"Cannot read {source}: {e}") from e
        report = verify_chain(loads_chain(text), config.geometry_tol)
    emit(dumps(report.to_dict(), config.number_digits))
    if not report.passed:
        raise typer.Exit(EXIT_VERDICT)

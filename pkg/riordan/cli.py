"""
Riordan Kit - Command Line
==========================

`riordan` command group over the workbench. Reports go to standard
output; diagnostics and log records go to standard error.

Exit codes:
- 0 success
- 1 usage or parse error
- 2 domain error (non-invertible series, degenerate parameters, ...)
- 3 a requested check failed
"""

from __future__ import annotations

import functools
import logging
from fractions import Fraction
from dataclasses import dataclass
from typing import Any, Callable, List, Optional, Sequence, Tuple

import click
from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator
from rich.console import Console
from rich.logging import RichHandler

from .analysis.export import ReportExporter
from .core.config import CONFIG, Builtin, ExitCode, OutputFormat
from .core.errors import CheckFailed, RiordanError
from .core.params import FamilyParams
from .group.element import IdentityCheck, RiordanElement
from .workbench import RiordanWorkbench

log = logging.getLogger("Riordan.CLI")


# ═══════════════════════════════════════════════════════════════════
#                         RUN CONFIGURATION
# ═══════════════════════════════════════════════════════════════════

class CliConfig(BaseModel):
    """Validated global run parameters."""

    model_config = ConfigDict(frozen=True)

    order: int = Field(default=CONFIG.DEFAULT_ORDER, ge=1)
    rows: int = Field(default=CONFIG.DEFAULT_ROWS, ge=1)
    format: OutputFormat = OutputFormat.TABLE
    verbose: bool = False

    @model_validator(mode="before")
    @classmethod
    def _default_rows_from_order(cls, data: Any) -> Any:
        if isinstance(data, dict) and data.get("rows") is None:
            data = dict(data)
            order = data.get("order")
            if isinstance(order, int) and order >= 1:
                data["rows"] = min(CONFIG.DEFAULT_ROWS, order + 1)
            else:
                data.pop("rows", None)
        return data

    @model_validator(mode="after")
    def _rows_fit_order(self) -> CliConfig:
        # only explicit --rows can exceed the order; the default is clamped
        if self.order < self.rows - 1:
            raise ValueError(f"order {self.order} cannot hold {self.rows} matrix rows")
        return self


class RationalType(click.ParamType):
    """Integer or p/q literal, converted to Fraction."""

    name = "rational"

    def convert(self, value: Any, param, ctx) -> Fraction:
        if isinstance(value, Fraction):
            return value
        try:
            return Fraction(str(value).strip())
        except (ValueError, ZeroDivisionError):
            self.fail(f"{value!r} is not an integer or p/q rational", param, ctx)


class ParamsType(click.ParamType):
    """Comma-separated r,s,t triple."""

    name = "r,s,t"

    def convert(self, value: Any, param, ctx) -> FamilyParams:
        if isinstance(value, FamilyParams):
            return value
        try:
            return FamilyParams.parse(str(value))
        except (ValueError, ZeroDivisionError) as e:
            self.fail(str(e), param, ctx)


RATIONAL = RationalType()
PARAMS = ParamsType()


def _setup_logging(verbose: bool) -> None:
    root = logging.getLogger("Riordan")
    for handler in list(root.handlers):
        if isinstance(handler, RichHandler):
            root.removeHandler(handler)
    handler = RichHandler(console=Console(stderr=True), show_time=False, show_path=False)
    handler.setFormatter(logging.Formatter("%(name)s: %(message)s"))
    root.addHandler(handler)
    root.setLevel(logging.DEBUG if verbose else logging.WARNING)


@dataclass
class Session:
    config: CliConfig
    bench: RiordanWorkbench
    exporter: ReportExporter

    def emit(self, text: str) -> None:
        click.echo(text, nl=False)

    def emit_element(self, element: RiordanElement) -> None:
        self.emit(self.exporter.element(element, self.bench.matrix(element, self.config.rows)))

    def emit_check(self, name: str, result: IdentityCheck) -> None:
        self.emit(self.exporter.check(name, result))
        if not result:
            raise CheckFailed(
                f"{name} check failed: {result.component} differs at x^{result.coefficient_index}"
            )


def _validation_message(error: ValidationError) -> str:
    return "; ".join(e["msg"] for e in error.errors())


def _open_session(ctx: click.Context, **local: Any) -> Session:
    settings = dict(ctx.obj or {})
    for key, value in local.items():
        if value is not None and value is not False:
            settings[key] = value
    try:
        config = CliConfig(**{k: v for k, v in settings.items() if v is not None})
    except ValidationError as e:
        raise click.UsageError(_validation_message(e), ctx=ctx)
    _setup_logging(config.verbose)
    log.debug(f"Run configuration: {config.model_dump()}")
    return Session(config, RiordanWorkbench(config.order), ReportExporter(config.format))


# ═══════════════════════════════════════════════════════════════════
#                         SHARED OPTIONS
# ═══════════════════════════════════════════════════════════════════

_RUN_OPTIONS = (
    click.option("--order", type=int, default=None, help=f"Truncation order [default: {CONFIG.DEFAULT_ORDER}]."),
    click.option("--rows", type=int, default=None, help=f"Matrix rows to print [default: {CONFIG.DEFAULT_ROWS}]."),
    click.option(
        "--format", "format",
        type=click.Choice([f.value for f in OutputFormat]),
        default=None,
        help="Report encoding [default: table].",
    ),
    click.option("--verbose", "-v", is_flag=True, default=False, help="Debug logging on stderr."),
)


def run_options(func: Callable) -> Callable:
    for option in reversed(_RUN_OPTIONS):
        func = option(func)
    return func


def pass_session(func: Callable) -> Callable:
    """Accept the run options on the subcommand too and hand it a Session."""

    @run_options
    @click.pass_context
    @functools.wraps(func)
    def wrapper(ctx: click.Context, order, rows, format, verbose, **kwargs):
        session = _open_session(ctx, order=order, rows=rows, format=format, verbose=verbose)
        return func(session, **kwargs)

    return wrapper


def element_options(func: Callable) -> Callable:
    func = click.option("--f", "f", required=True, help="f(x) expression.")(func)
    return click.option("--g", "g", required=True, help="g(x) expression.")(func)


# \b keeps click from rewrapping the list
_BUILTIN_HELP = "\b\nBuilt-in functions:\n" + "\n".join(
    f"  {b.symbol}(...)  {b.description}" for b in Builtin
)


# ═══════════════════════════════════════════════════════════════════
#                            COMMANDS
# ═══════════════════════════════════════════════════════════════════

@click.group(name=CONFIG.PROGRAM_NAME, context_settings={"help_option_names": ["-h", "--help"]})
@run_options
@click.version_option(CONFIG.VERSION, prog_name=CONFIG.PROGRAM_NAME)
@click.pass_context
def cli(ctx: click.Context, order, rows, format, verbose):
    """Exact Riordan group arithmetic, involutions and their analysis."""
    ctx.obj = {"order": order, "rows": rows, "format": format, "verbose": verbose}


@cli.command("eval", epilog=_BUILTIN_HELP)
@click.argument("expression")
@pass_session
def eval_cmd(session: Session, expression: str):
    """Expand EXPRESSION as a power series."""
    session.emit(session.exporter.series(session.bench.series(expression)))


@cli.command("product")
@click.option("--g1", required=True, help="g of the left factor.")
@click.option("--f1", required=True, help="f of the left factor.")
@click.option("--g2", required=True, help="g of the right factor.")
@click.option("--f2", required=True, help="f of the right factor.")
@pass_session
def product_cmd(session: Session, g1: str, f1: str, g2: str, f2: str):
    """Matrix of (g1, f1) * (g2, f2)."""
    bench = session.bench
    session.emit_element(bench.product(bench.element(g1, f1), bench.element(g2, f2)))


@cli.command("inverse")
@element_options
@pass_session
def inverse_cmd(session: Session, g: str, f: str):
    """Matrix of (g, f)^-1."""
    session.emit_element(session.bench.inverse(session.bench.element(g, f)))


@cli.command("matrix")
@element_options
@pass_session
def matrix_cmd(session: Session, g: str, f: str):
    """Matrix of (g, f)."""
    session.emit_element(session.bench.element(g, f))


@cli.command("row-sums")
@element_options
@pass_session
def row_sums_cmd(session: Session, g: str, f: str):
    """Row sums of the matrix of (g, f)."""
    sums = session.bench.row_sums(session.bench.element(g, f), session.config.rows)
    session.emit(session.exporter.values("row_sums", sums))


@cli.command("check-involution")
@element_options
@pass_session
def check_involution_cmd(session: Session, g: str, f: str):
    """Check (g, f)^2 = (1, x); exit 3 when it fails."""
    session.emit_check("involution", session.bench.check_involution(g, f))


@cli.command("check-pseudo")
@element_options
@pass_session
def check_pseudo_cmd(session: Session, g: str, f: str):
    """Check that (g, -f) is an involution; exit 3 when it fails."""
    session.emit_check("pseudo-involution", session.bench.check_pseudo_involution(g, f))


@cli.command("construct")
@element_options
@click.option("--pg", default="1", show_default=True, help="g of the pseudo-involution P.")
@click.option("--pf", default="x", show_default=True, help="f of the pseudo-involution P.")
@click.option("--unchecked", is_flag=True, help="Skip the pseudo-involution check on P.")
@pass_session
def construct_cmd(session: Session, g: str, f: str, pg: str, pf: str, unchecked: bool):
    """Involution (g, f)^-1 * P * (g(-x), f(-x))."""
    session.emit_element(session.bench.construct(g, f, pg, pf, unchecked))


@cli.command("family")
@click.option("--r", "r", type=RATIONAL, required=True)
@click.option("--s", "s", type=RATIONAL, required=True)
@click.option("--t", "t", type=RATIONAL, required=True)
@pass_session
def family_cmd(session: Session, r: Fraction, s: Fraction, t: Fraction):
    """Three-parameter involution at (r, s, t)."""
    session.emit_element(session.bench.family(FamilyParams(r, s, t)))


@cli.command("corollary")
@click.option("--r", "r", type=RATIONAL, required=True)
@click.option("--t", "t", type=RATIONAL, required=True)
@pass_session
def corollary_cmd(session: Session, r: Fraction, t: Fraction):
    """The s = 0 involution at (r, t)."""
    session.emit_element(session.bench.corollary(r, t))


@cli.command("chebyshev")
@click.option("--r", "r", type=RATIONAL, required=True)
@click.option("--s", "s", type=RATIONAL, required=True)
@click.option("--a", "a", type=RATIONAL, required=True)
@click.option("--b", "b", type=RATIONAL, required=True)
@pass_session
def chebyshev_cmd(session: Session, r: Fraction, s: Fraction, a: Fraction, b: Fraction):
    """Coefficient array of the generalised Chebyshev polynomials."""
    element, _ = session.bench.chebyshev(r, s, a, b)
    session.emit_element(element)


@cli.command("ortho")
@click.option("--r", "r", type=RATIONAL, required=True)
@click.option("--s", "s", type=RATIONAL, required=True)
@pass_session
def ortho_cmd(session: Session, r: Fraction, s: Fraction):
    """Coefficient array of the (r, s) orthogonal polynomials."""
    element, _ = session.bench.ortho(r, s)
    session.emit_element(element)


@cli.command("jfraction")
@click.option("--g", "g", required=True, help="Series with constant term 1.")
@click.option("--depth", type=click.IntRange(min=1), default=CONFIG.DEFAULT_JFRACTION_DEPTH, show_default=True)
@pass_session
def jfraction_cmd(session: Session, g: str, depth: int):
    """Jacobi continued fraction of g."""
    session.emit(session.exporter.jfraction(session.bench.jfraction(g, depth)))


@cli.command("bseq")
@click.option("--f", "f", required=True, help="f with f(0) = 0 and f'(0) = 1.")
@click.option("--depth", type=click.IntRange(min=1), default=CONFIG.DEFAULT_BSEQ_DEPTH, show_default=True)
@click.option("--companion", is_flag=True, help="Use -f (the pseudo-involution of an involution).")
@pass_session
def bseq_cmd(session: Session, f: str, depth: int, companion: bool):
    """B-sequence of a pseudo-involution's f."""
    session.emit(session.exporter.bsequence(session.bench.bsequence(f, depth, companion)))


@cli.command("cross-validate")
@click.option("--r", "r", type=RATIONAL, default=None)
@click.option("--s", "s", type=RATIONAL, default=None)
@click.option("--t", "t", type=RATIONAL, default=None)
@click.option("--grid", "grid", type=PARAMS, multiple=True, help="Extra r,s,t point; repeatable.")
@pass_session
def cross_validate_cmd(
    session: Session,
    r: Optional[Fraction],
    s: Optional[Fraction],
    t: Optional[Fraction],
    grid: Tuple[FamilyParams, ...]
):
    """Compare the four routes to the (r, s, t) involution."""
    points: List[FamilyParams] = []
    given = [v is not None for v in (r, s, t)]
    if any(given):
        if not all(given):
            raise click.UsageError("--r, --s and --t must be given together")
        points.append(FamilyParams(r, s, t))
    points.extend(grid)
    if not points:
        raise click.UsageError("give --r/--s/--t or at least one --grid point")
    session.emit(session.exporter.cross_validation(session.bench.cross_validate(points)))


# ═══════════════════════════════════════════════════════════════════
#                           ENTRY POINT
# ═══════════════════════════════════════════════════════════════════

def run(argv: Optional[Sequence[str]] = None) -> int:
    """Run the command group and map every outcome to an exit code."""
    try:
        result = cli.main(
            args=None if argv is None else list(argv),
            prog_name=CONFIG.PROGRAM_NAME,
            standalone_mode=False,
        )
    except click.ClickException as e:
        e.show()
        return int(ExitCode.USAGE)
    except click.Abort:
        return int(ExitCode.USAGE)
    except RiordanError as e:
        Console(stderr=True).print(f"error: {e}", markup=False, highlight=False)
        return int(e.exit_code)
    return int(result) if isinstance(result, int) else int(ExitCode.OK)

#!/usr/bin/env python3
"""
CLI Main Entry Point
Root options (config file, logging, version) and command registration.
"""

from pathlib import Path
from typing import Optional

import typer
from rich.console import Console

from .. import __version__
from ..utils.config import get_merged_config
from ..utils.logger import setup_logging
from .commands import (
    construct_command,
    extremal_command,
    feasible_command,
    gauge_command,
    moments_command,
    neighbors_command,
    range_command,
    sweep_command,
    verify_command,
)

app = typer.Typer(
    help="Steiner chain invariants, feasibility and extremal problems",
    add_completion=False,
    no_args_is_help=True
)

# Diagnostics only; documents are written to stdout by the commands
console = Console(stderr=True)


def _version_callback(value: bool):
    if value:
        typer.echo(f"steiner-chains {__version__}")
        raise typer.Exit()


@app.callback()
def root(
    ctx: typer.Context,
    config: Optional[Path] = typer.Option(None, "--config", help="JSON file with tolerances and output settings"),
    log_level: Optional[str] = typer.Option(None, "--log-level", help="DEBUG, INFO, WARNING or ERROR"),
    log_json: bool = typer.Option(False, "--log-json", help="Emit logs as JSON lines on stderr"),
    version: bool = typer.Option(
        False, "--version", callback=_version_callback, is_eager=True, help="Show version and exit"
    ),
):
    """Steiner chain tools. Every command writes one document to stdout."""
    setup_logging(log_level, log_json)
    ctx.obj = get_merged_config({}, config)


app.command("gauge")(gauge_command)
app.command("moments")(moments_command)
app.command("range")(range_command)
app.command("neighbors")(neighbors_command)
app.command("feasible")(feasible_command)
app.command("extremal")(extremal_command)
app.command("construct")(construct_command)
app.command("sweep")(sweep_command)
app.command("verify")(verify_command)


def main():
    """Main entry point"""
    try:
        app()
    except KeyboardInterrupt:
        console.print("\n[yellow]Operation canceled by user[/yellow]")
        raise SystemExit(130)


if __name__ == "__main__":
    main()

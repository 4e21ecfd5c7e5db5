"""
Shared command plumbing
Common click options, input file reading and result emission
"""

from pathlib import Path
from typing import Callable, Optional

import click

from errors import BilatError, ConfigurationError
from runner import RunResult, build_config, run


def common_options(command: Callable) -> Callable:
    """--kind, --format, --workers and --limit, accepted by every subcommand"""
    decorators = [
        click.option("--kind", type=click.Choice(["four", "interval"]), default=None,
                     help="Bilattice the program is interpreted over (default four)"),
        click.option("--format", "output_format", type=click.Choice(["table", "json"]),
                     default=None, help="Output format (default table)"),
        click.option("--workers", type=int, default=None,
                     help="Threads used when enumerating interpretations"),
        click.option("--limit", type=int, default=None,
                     help="Largest number of atoms an enumeration may cover"),
    ]
    for decorator in reversed(decorators):
        command = decorator(command)
    return command


def program_argument(required: bool = True) -> Callable:
    return click.argument("program", type=click.Path(dir_okay=False), required=required)


def at_option() -> Callable:
    return click.option("--at", "at", type=click.Path(dir_okay=False), default=None,
                        help="Interpretation file (atom = value lines, or a .json object)")


def read_text(path: Optional[str]) -> Optional[str]:
    if path is None:
        return None
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise ConfigurationError(f"cannot read {path}: {e.strerror or e}")


def is_json_path(path: Optional[str]) -> Optional[bool]:
    if path is None:
        return None
    return path.lower().endswith(".json")


def emit(ctx: click.Context, result: RunResult) -> None:
    if result.output:
        click.echo(result.output, nl=False)
    if result.error:
        click.echo(result.error, nl=False, err=True)
    ctx.exit(result.exit_code)


def invoke(
    ctx: click.Context,
    command: str,
    program: Optional[str],
    at: Optional[str] = None,
    output_format: Optional[str] = None,
    **options,
) -> None:
    """Validate options, read inputs, run the command and exit with its code"""
    try:
        cfg = build_config(command=command, format=output_format, **options)
        program_text = read_text(program)
        interpretation_text = read_text(at)
    except BilatError as e:
        emit(ctx, RunResult(e.exit_code, "", f"error: {e.detail}\n"))
        return
    emit(ctx, run(cfg, program_text, interpretation_text, is_json_path(at)))

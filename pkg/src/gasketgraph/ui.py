"""Rich console helpers: reports on stdout, diagnostics on stderr."""

from __future__ import annotations

import logging
from contextlib import contextmanager
from typing import Generator, Sequence

from rich.console import Console
from rich.logging import RichHandler
from rich.progress import Progress, SpinnerColumn, TextColumn, TimeElapsedColumn
from rich.table import Table
from rich.theme import Theme

theme = Theme(
    {
        "info": "cyan",
        "pass": "green",
        "fail": "red bold",
        "warning": "yellow",
        "label": "bold",
        "muted": "dim",
    }
)

# stdout carries command output only; diagnostics and spinners go to stderr
console = Console(theme=theme, highlight=False)
err_console = Console(theme=theme, stderr=True, highlight=False)

KEY_WIDTH = 16


def setup_logging(verbose: bool = False) -> None:
    """Route library logging through a rich handler on stderr."""
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format="%(message)s",
        datefmt="[%X]",
        handlers=[RichHandler(console=err_console, show_path=False, rich_tracebacks=True)],
        force=True,
    )


def print_header(text: str) -> None:
    console.rule(f"[bold cyan]{text}[/bold cyan]", align="left")


def print_pass(text: str) -> None:
    console.print(f"[pass]{text}[/pass]")


def print_fail(text: str) -> None:
    """A failed check; part of the report, so stdout."""
    console.print(f"[fail]{text}[/fail]")


def print_error(text: str) -> None:
    err_console.print(f"[fail]{text}[/fail]")


def print_warning(text: str) -> None:
    err_console.print(f"[warning]{text}[/warning]")


def print_info(text: str) -> None:
    console.print(f"[info]{text}[/info]")


def print_muted(text: str) -> None:
    console.print(f"[muted]{text}[/muted]")


def print_plain(text: str) -> None:
    """Print text without markup interpretation (sequences, big integers)."""
    console.print(text, markup=False, emoji=False, soft_wrap=True)


def print_key_value(key: str, value: str) -> None:
    """One aligned `key  value` line; the value is never wrapped."""
    console.print(f"[label]{key + ':':<{KEY_WIDTH}}[/label] {value}", soft_wrap=True)


@contextmanager
def spinner(message: str) -> Generator[None, None, None]:
    """Spinner with elapsed time on stderr; vanishes when the block exits."""
    with Progress(
        SpinnerColumn(),
        TextColumn("{task.description}"),
        TimeElapsedColumn(),
        console=err_console,
        transient=True,
    ) as progress:
        progress.add_task(description=message, total=None)
        yield


def create_table(title: str, columns: Sequence[str], numeric: Sequence[str] = ()) -> Table:
    """A report table; columns named in `numeric` are right-aligned."""
    table = Table(title=title, title_justify="left", header_style="bold cyan")
    for name in columns:
        table.add_column(name, justify="right" if name in numeric else "left")
    return table


def print_table(table: Table) -> None:
    console.print(table)

"""Progress indicator utilities using Rich library."""

from contextlib import contextmanager
from typing import Iterator, Optional

from rich.console import Console
from rich.progress import (
    BarColumn,
    MofNCompleteColumn,
    Progress,
    SpinnerColumn,
    TextColumn,
    TimeRemainingColumn,
)


@contextmanager
def create_progress(console: Optional[Console] = None, disable: bool = False) -> Iterator[Progress]:
    """Create a Rich progress context for case-by-case work.

    Yields:
        Progress instance; hidden entirely when ``disable`` is set
    """
    with Progress(
        SpinnerColumn(),
        TextColumn("[progress.description]{task.description}"),
        BarColumn(),
        MofNCompleteColumn(),
        TimeRemainingColumn(),
        console=console,
        disable=disable,
        transient=True,
    ) as progress:
        yield progress

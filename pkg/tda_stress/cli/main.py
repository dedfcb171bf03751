"""Main CLI entry point."""

import typer
from rich.console import Console

from .evaluate import evaluate
from .experiment import experiment
from .extract import extract
from .run_all import run_all
from .synth import synth

app = typer.Typer(
    name="tda-stress",
    help="Topological features of physiological signals for stress detection",
    add_completion=False,
    context_settings={"help_option_names": ["-h", "--help"]},
)
console = Console()


# All commands including main command support -h shorthand via context_settings


app.command(name="synth", context_settings={"help_option_names": ["-h", "--help"]})(
    synth
)
app.command(name="extract", context_settings={"help_option_names": ["-h", "--help"]})(
    extract
)
app.command(
    name="evaluate", context_settings={"help_option_names": ["-h", "--help"]}
)(evaluate)
app.command(name="all", context_settings={"help_option_names": ["-h", "--help"]})(
    run_all
)
app.command(
    name="experiment", context_settings={"help_option_names": ["-h", "--help"]}
)(experiment)


@app.command(context_settings={"help_option_names": ["-h", "--help"]})
def version() -> None:
    """Show version information."""
    from tda_stress import __version__

    console.print(f"TDA Stress v{__version__}")


if __name__ == "__main__":
    app()

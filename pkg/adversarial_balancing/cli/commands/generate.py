# adversarial_balancing/cli/commands/generate.py

import typer

from adversarial_balancing.benchgen.circular import gen_circular
from adversarial_balancing.benchgen.kang_schafer import gen_kang_schafer
from adversarial_balancing.cli.console import c, exit_codes
from adversarial_balancing.core.dataset import write_dataset_csv

generate_cli = typer.Typer(help="Emit benchmark datasets as CSV (plus a .oracle.csv sibling).")


def _emit(ds, output: str):
    path = write_dataset_csv(ds, output)
    typer.echo(c(f"✔ Wrote {ds.n_rows} rows to {path}", "SUCCESS"))


# ===========================================================
# KANG-SCHAFER
# ===========================================================
@generate_cli.command("kang-schafer")
def generate_kang_schafer(
    n: int = typer.Option(1000, "--n", min=1, help="Number of rows"),
    seed: int = typer.Option(0, "--seed", min=0),
    transformed: bool = typer.Option(False, "--transformed", help="Observe the nonlinear covariate transform"),
    output: str = typer.Option(..., "--output", "-o"),
):
    """
    Kang-Schafer benchmark; outcomes are missing for A = 0.

    Example:
        advbal generate kang-schafer --n 1000 --seed 3 --transformed -o ks.csv
    """
    with exit_codes():
        _emit(gen_kang_schafer(n, seed, transformed=transformed), output)


# ===========================================================
# CIRCULAR
# ===========================================================
@generate_cli.command("circular")
def generate_circular(
    n: int = typer.Option(1000, "--n", min=1, help="Number of rows"),
    seed: int = typer.Option(0, "--seed", min=0),
    output: str = typer.Option(..., "--output", "-o"),
):
    """Circular two-dimensional benchmark with zero treatment effect."""
    with exit_codes():
        _emit(gen_circular(n, seed), output)

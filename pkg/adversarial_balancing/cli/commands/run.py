# adversarial_balancing/cli/commands/run.py

import typer

from adversarial_balancing.cli.console import c, exit_codes, split_list
from adversarial_balancing.exceptions import ConfigError
from adversarial_balancing.experiment.config import load_config
from adversarial_balancing.experiment.results import CSV_COLUMNS, emit_results
from adversarial_balancing.experiment.runner import run_experiment


def parse_sizes(sizes: str | None) -> list[int] | None:
    try:
        return [int(s) for s in split_list(sizes)] if sizes else None
    except ValueError as e:
        raise ConfigError("CLI", f"invalid --sizes '{sizes}'", cause=e) from e


def _fmt(value) -> str:
    if value is None:
        return "-"
    if isinstance(value, float):
        return f"{value:.4g}"
    return str(value)


# ===========================================================
# COMMAND: RUN
# ===========================================================
def run(
    config: str | None = typer.Option(None, "--config", "-c", help="Flat JSON experiment config"),
    benchmark: str | None = typer.Option(None, "--benchmark"),
    transformed: bool | None = typer.Option(None, "--transformed/--untransformed"),
    sizes: str | None = typer.Option(None, "--sizes", help="Comma-separated, e.g. 200,1000"),
    replications: int | None = typer.Option(None, "--replications"),
    methods: str | None = typer.Option(None, "--methods", help="Comma-separated method specs"),
    seed: int | None = typer.Option(None, "--seed"),
    bootstrap_samples: int | None = typer.Option(None, "--bootstrap_samples"),
    level: float | None = typer.Option(None, "--level"),
    output: str | None = typer.Option(None, "--output", "-o"),
    format: str | None = typer.Option(None, "--format", help="csv | json"),
    workers: int | None = typer.Option(None, "--workers"),
    n_iter: int | None = typer.Option(None, "--n_iter"),
    kfold: int | None = typer.Option(None, "--kfold"),
    diagnostic_family: str | None = typer.Option(None, "--diagnostic_family"),
    csv_path: str | None = typer.Option(None, "--csv_path"),
    covariate_columns: str | None = typer.Option(None, "--covariate_columns"),
    estimand: str | None = typer.Option(None, "--estimand"),
    truth: float | None = typer.Option(None, "--truth"),
    serial: bool = typer.Option(False, "--serial", help="Run replications in this process"),
):
    """
    Run a full benchmark comparison. Flags override fields of the config file.

    Example:
        advbal run --config ks.json --replications 10 --serial
    """
    with exit_codes():
        size_list = parse_sizes(sizes)
        cfg = load_config(
            config,
            benchmark=benchmark,
            transformed=transformed,
            sizes=size_list,
            replications=replications,
            methods=split_list(methods),
            seed=seed,
            bootstrap_samples=bootstrap_samples,
            level=level,
            output=output,
            format=format,
            workers=1 if serial else workers,
            n_iter=n_iter,
            kfold=kfold,
            diagnostic_family=diagnostic_family,
            csv_path=csv_path,
            covariate_columns=split_list(covariate_columns),
            estimand=estimand,
            truth=truth,
        )
        result = run_experiment(cfg)

        if cfg.output:
            emit_results(result, cfg.format, cfg.output)
            typer.echo(c(f"✔ Results written to {cfg.output}", "SUCCESS"))
            return

        typer.echo(c(f"\n{result.benchmark} | {result.estimand} | truth {_fmt(result.truth)}\n", "INFO"))
        typer.echo("\t".join(CSV_COLUMNS))
        for row in result.rows:
            line = "\t".join(_fmt(getattr(row, col)) for col in CSV_COLUMNS)
            typer.echo(c(line, "ERROR") if row.failed else line)

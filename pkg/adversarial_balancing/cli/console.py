# adversarial_balancing/cli/console.py

from contextlib import contextmanager

import pandas as pd
import typer
from pydantic import ValidationError

from adversarial_balancing.core.dataset import CsvSchema
from adversarial_balancing.exceptions import (
    BalancingException,
    BalancingRuntimeException,
    ConfigError,
    DatasetParseError,
)
from adversarial_balancing.shared.logger import COLORS, RESET, ns_logger

logger = ns_logger("CLI")

EXIT_CONFIG = 1
EXIT_RUNTIME = 2


def c(text, level="INFO"):
    """Colorize text based on log-level color scheme."""
    return COLORS.get(level, COLORS["INFO"]) + text + RESET


@contextmanager
def exit_codes():
    """Config problems exit 1, every other library failure exits 2."""
    try:
        yield
    except (ConfigError, ValidationError) as e:
        logger.error(str(e))
        typer.echo(c(f"Configuration error: {e}", "ERROR"), err=True)
        raise typer.Exit(EXIT_CONFIG)
    except (BalancingException, BalancingRuntimeException) as e:
        logger.error(str(e))
        typer.echo(c(f"Failed: {e}", "ERROR"), err=True)
        raise typer.Exit(EXIT_RUNTIME)


def split_list(value: str | None) -> list[str] | None:
    if value is None:
        return None
    return [item.strip() for item in value.split(",") if item.strip()]


def csv_schema(path: str, treatment_column: str, outcome_column: str, covariates: str | None) -> CsvSchema:
    """Covariates default to every column other than treatment and outcome."""
    columns = split_list(covariates)
    if not columns:
        try:
            header = pd.read_csv(path, nrows=0).columns
        except (OSError, ValueError) as e:
            raise DatasetParseError("CLI", f"cannot read header of {path}", cause=e) from e
        columns = [col for col in header if col not in (treatment_column, outcome_column)]
    return CsvSchema(
        treatment_column=treatment_column,
        outcome_column=outcome_column,
        covariate_columns=tuple(columns),
    )

# adversarial_balancing/cli/commands/diagnose.py

import json

import numpy as np
import pandas as pd
import typer

from adversarial_balancing.cli.commands.balance import (
    WEIGHT_COLUMNS,
    diagnostic_family,
    prediction_mode,
    write_text,
)
from adversarial_balancing.cli.console import csv_schema, exit_codes
from adversarial_balancing.core.dataset import load_dataset_csv
from adversarial_balancing.core.problem import Estimand, build_balancing_problem
from adversarial_balancing.core.weights import WeightVector
from adversarial_balancing.diagnostics.report import build_report
from adversarial_balancing.exceptions import InvalidInputError


def read_weights(path: str) -> pd.DataFrame:
    try:
        frame = pd.read_csv(path)
    except (OSError, ValueError) as e:
        raise InvalidInputError("CLI", f"cannot read weights file {path}", cause=e) from e
    missing = [col for col in WEIGHT_COLUMNS if col not in frame.columns]
    if missing:
        raise InvalidInputError("CLI", f"weights file lacks columns {missing}", path=path)
    return frame


# ===========================================================
# COMMAND: DIAGNOSE
# ===========================================================
def diagnose(
    csv_path: str = typer.Argument(..., help="Dataset CSV"),
    weights_path: str = typer.Argument(..., help="Weights CSV (row, weight, arm)"),
    estimand: str = typer.Option("epo", "--estimand", help="epo | ate | att"),
    treatment_value: int = typer.Option(1, "--treatment_value"),
    reference_treatment: int = typer.Option(1, "--reference_treatment"),
    treatment_column: str = typer.Option("a", "--treatment_column"),
    outcome_column: str = typer.Option("y", "--outcome_column"),
    covariate_columns: str | None = typer.Option(None, "--covariate_columns"),
    family: str = typer.Option("lr", "--diagnostic_family"),
    kfold: int | None = typer.Option(None, "--kfold", min=2, help="Out-of-fold discriminator predictions"),
    outcome_bound: float | None = typer.Option(None, "--outcome_bound"),
    delta: float = typer.Option(0.05, "--delta"),
    seed: int = typer.Option(0, "--seed", min=0),
    report_out: str | None = typer.Option(None, "--report", "-r"),
):
    """Balance report for weights computed elsewhere, one entry per arm."""
    with exit_codes():
        ds = load_dataset_csv(csv_path, csv_schema(csv_path, treatment_column, outcome_column, covariate_columns))
        target = Estimand.from_kind(estimand, treatment_value, reference_treatment)
        diag = diagnostic_family(family)
        mode = prediction_mode(kfold)
        frame = read_weights(weights_path)

        arms = {}
        for arm, group in frame.groupby("arm", sort=True):
            prob = build_balancing_problem(ds, target, int(arm))
            group = group.sort_values("row")
            if not np.array_equal(group["row"].to_numpy(), prob.source_rows):
                raise InvalidInputError(
                    "CLI", f"weights for arm {arm} do not cover exactly the rows with that treatment",
                    expected=int(prob.source_rows.size), got=len(group),
                )
            w = WeightVector.normalized(group["weight"].to_numpy(dtype=float))
            arm_report = build_report(prob, w, diag, mode=mode, M_Y=outcome_bound, delta=delta, seed=seed)
            arms[str(int(arm))] = arm_report.model_dump()

        report = json.dumps({"estimand": target.label(), "arms": arms}, indent=2)
        if report_out:
            write_text(report_out, report + "\n")
        else:
            typer.echo(report)

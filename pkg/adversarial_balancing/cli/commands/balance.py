# adversarial_balancing/cli/commands/balance.py

import json
from pathlib import Path

import numpy as np
import pandas as pd
import typer

from adversarial_balancing.classifiers.family import FamilySpec, resolve_family
from adversarial_balancing.classifiers.selection import PredictionMode
from adversarial_balancing.cli.console import c, csv_schema, exit_codes
from adversarial_balancing.core.dataset import load_dataset_csv
from adversarial_balancing.core.problem import Estimand, build_balancing_problem, estimand_legs
from adversarial_balancing.core.weights import weighted_outcome_estimate
from adversarial_balancing.diagnostics.report import build_report
from adversarial_balancing.exceptions import BalancingRuntimeException, ConfigError
from adversarial_balancing.registry.method import MethodRegistry

WEIGHT_COLUMNS = ["row", "weight", "arm"]


def diagnostic_family(name: str) -> FamilySpec:
    family = resolve_family(name)
    if not isinstance(family, FamilySpec):
        raise ConfigError("CLI", f"diagnostic family '{name}' must be a single family")
    return family


def prediction_mode(kfold: int | None) -> PredictionMode | None:
    return PredictionMode.kfold(kfold) if kfold else None


def write_text(path, text: str):
    try:
        Path(path).write_text(text, encoding="utf-8")
    except OSError as e:
        raise BalancingRuntimeException("CLI", f"cannot write {path}", cause=e, path=str(path)) from e


# ===========================================================
# COMMAND: BALANCE
# ===========================================================
def balance(
    csv_path: str = typer.Argument(..., help="Dataset CSV"),
    method: str = typer.Option("adversarial:lr", "--method", "-m", help="Method spec, e.g. adversarial:kernel"),
    estimand: str = typer.Option("epo", "--estimand", help="epo | ate | att"),
    treatment_value: int = typer.Option(1, "--treatment_value"),
    reference_treatment: int = typer.Option(1, "--reference_treatment"),
    treatment_column: str = typer.Option("a", "--treatment_column"),
    outcome_column: str = typer.Option("y", "--outcome_column"),
    covariate_columns: str | None = typer.Option(None, "--covariate_columns", help="Comma-separated; default all others"),
    n_iter: int = typer.Option(20, "--n_iter", min=1),
    kfold: int | None = typer.Option(None, "--kfold", min=2),
    seed: int = typer.Option(0, "--seed", min=0),
    family: str = typer.Option("lr", "--diagnostic_family", help="Family for the H-divergence report"),
    outcome_bound: float | None = typer.Option(None, "--outcome_bound", help="M_Y for the generalization bound"),
    delta: float = typer.Option(0.05, "--delta"),
    weights_out: str = typer.Option(..., "--weights", "-w", help="Output CSV: row, weight, arm"),
    report_out: str | None = typer.Option(None, "--report", "-r", help="Output JSON report (default stdout)"),
):
    """
    Compute balancing weights for one dataset and write them with a report.

    Example:
        advbal balance ks.csv --method adversarial:mlp --estimand epo -w weights.csv
    """
    with exit_codes():
        ds = load_dataset_csv(csv_path, csv_schema(csv_path, treatment_column, outcome_column, covariate_columns))
        target = Estimand.from_kind(estimand, treatment_value, reference_treatment)
        weighter = MethodRegistry.create(method, n_iter=n_iter, kfold=kfold)
        diag = diagnostic_family(family)
        mode = prediction_mode(kfold)

        frames, arms = [], {}
        estimate = 0.0
        for arm, sign in estimand_legs(target, ds):
            w = weighter.compute_weights(ds, target, arm, seed=seed)
            prob = build_balancing_problem(ds, target, arm)
            frames.append(pd.DataFrame({"row": prob.source_rows, "weight": w.w, "arm": arm}))
            arm_report = build_report(prob, w, diag, mode=mode, M_Y=outcome_bound, delta=delta, seed=seed)
            arms[str(arm)] = arm_report.model_dump()

            y = ds.outcome[prob.source_rows]
            if estimate is not None and np.all(np.isfinite(y)):
                estimate += sign * weighted_outcome_estimate(w, y)
            else:
                estimate = None
        if estimate is not None and target.kind == "att":
            treated = ds.outcome[ds.arm(target.reference_treatment)]
            estimate = estimate + float(np.mean(treated)) if np.all(np.isfinite(treated)) else None

        try:
            pd.concat(frames)[WEIGHT_COLUMNS].to_csv(weights_out, index=False, float_format="%.17g", lineterminator="\n")
        except OSError as e:
            raise BalancingRuntimeException("CLI", f"cannot write {weights_out}", cause=e, path=weights_out) from e

        report = json.dumps(
            {"method": weighter.label, "estimand": target.label(), "estimate": estimate, "arms": arms},
            indent=2,
        )
        if report_out:
            write_text(report_out, report + "\n")
            typer.echo(c(f"✔ Weights in {weights_out}, report in {report_out}", "SUCCESS"))
        else:
            typer.echo(report)

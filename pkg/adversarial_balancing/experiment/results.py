# adversarial_balancing/experiment/results.py

from pathlib import Path
from typing import Literal

import numpy as np
import pandas as pd
from pydantic import BaseModel

from adversarial_balancing.benchgen.rng import RngStream
from adversarial_balancing.exceptions import BalancingRuntimeException, InvalidInputError

CSV_COLUMNS = [
    "method", "n", "bias", "rmse", "ci_lo", "ci_hi",
    "mean_h_divergence", "mean_ess", "n_failures",
]


class MethodResult(BaseModel):
    method: str
    n: int
    bias: float | None = None
    rmse: float | None = None
    ci_lo: float | None = None
    ci_hi: float | None = None
    mean_h_divergence: float | None = None
    mean_ess: float | None = None
    n_failures: int = 0
    failed: bool = False
    estimates: list[float | None] = []
    errors: list[str | None] = []


class ExperimentResult(BaseModel):
    benchmark: str
    estimand: str
    truth: float | None = None
    rows: list[MethodResult] = []

    def row(self, method: str, n: int) -> MethodResult:
        for r in self.rows:
            if r.method == method and r.n == n:
                return r
        raise KeyError((method, n))


# ===========================================================
# BOOTSTRAP
# ===========================================================
def bootstrap_ci(values, B: int = 1000, level: float = 0.95, seed: int = 0) -> tuple[float, float]:
    """Percentile bootstrap interval for the mean; deterministic given seed."""
    values = np.asarray(values, dtype=float)
    if values.size < 2:
        raise InvalidInputError("Bootstrap", "need at least two values", n=int(values.size))
    if B < 1 or not 0.0 < level < 1.0:
        raise InvalidInputError("Bootstrap", "B must be positive and level in (0, 1)", B=B, level=level)
    n = values.size
    idx = RngStream(seed).indices(n, B * n).reshape(B, n)
    means = values[idx].mean(axis=1)
    tail = 0.5 * (1.0 - level)
    lo, hi = np.quantile(means, [tail, 1.0 - tail])
    return float(lo), float(hi)


# ===========================================================
# EMISSION
# ===========================================================
def emit_results(res: ExperimentResult, format: Literal["csv", "json"], path) -> Path:
    """
    CSV: one row per (method, n) with CSV_COLUMNS. JSON: the full result
    (aggregates plus per-replication estimates).
    """
    path = Path(path)
    try:
        if format == "csv":
            frame = pd.DataFrame([r.model_dump(include=set(CSV_COLUMNS)) for r in res.rows], columns=CSV_COLUMNS)
            frame.to_csv(path, index=False, float_format="%.17g", na_rep="", lineterminator="\n")
        elif format == "json":
            path.write_text(res.model_dump_json(indent=2) + "\n", encoding="utf-8")
        else:
            raise InvalidInputError("Results", f"unknown output format '{format}'")
    except OSError as e:
        raise BalancingRuntimeException("Results", f"cannot write results to {path}", cause=e, path=str(path)) from e
    return path

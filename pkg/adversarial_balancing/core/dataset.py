# adversarial_balancing/core/dataset.py

from dataclasses import dataclass, field
from pathlib import Path

import numpy as np
import pandas as pd
from pydantic import BaseModel, ConfigDict

from adversarial_balancing.exceptions import (
    BalancingRuntimeException,
    DatasetParseError,
    InvalidInputError,
)
from adversarial_balancing.shared.logger import ns_logger

logger = ns_logger("Dataset")

ORACLE_SUFFIX = ".oracle.csv"


def _frozen(a, dtype) -> np.ndarray:
    a = np.array(a, dtype=dtype, copy=True)
    a.setflags(write=False)
    return a


class CsvSchema(BaseModel):
    model_config = ConfigDict(frozen=True)

    treatment_column: str
    outcome_column: str
    covariate_columns: tuple[str, ...]


@dataclass(frozen=True, eq=False)
class Dataset:
    """
    Covariates (n_rows x d), integer treatment labels and outcomes.

    Missing outcomes are NaN; they are only rejected at estimation time.
    ``oracle`` holds hidden columns (latent covariates, counterfactuals) that
    weighting code never reads.
    """

    covariates: np.ndarray
    treatment: np.ndarray
    outcome: np.ndarray
    column_names: tuple[str, ...]
    treatment_set: tuple[int, ...] | None = None
    oracle: dict[str, np.ndarray] = field(default_factory=dict)

    def __post_init__(self):
        X = np.asarray(self.covariates, dtype=float)
        if X.ndim != 2:
            raise InvalidInputError("Dataset", "covariates must be a 2-D matrix", shape=X.shape)
        if not np.all(np.isfinite(X)):
            raise InvalidInputError("Dataset", "covariates contain non-finite entries")
        a = np.asarray(self.treatment)
        y = np.asarray(self.outcome, dtype=float)
        if a.shape != (X.shape[0],) or y.shape != (X.shape[0],):
            raise InvalidInputError(
                "Dataset", "treatment/outcome length must equal the number of rows",
                n_rows=X.shape[0], n_treatment=a.size, n_outcome=y.size,
            )
        if len(self.column_names) != X.shape[1]:
            raise InvalidInputError("Dataset", "one column name per covariate required")
        treatment_set = self.treatment_set
        if treatment_set is None:
            treatment_set = tuple(int(v) for v in np.unique(a))
        unknown = set(np.unique(a).tolist()) - set(treatment_set)
        if unknown:
            raise InvalidInputError("Dataset", "treatment values outside the declared set", unknown=sorted(unknown))

        object.__setattr__(self, "covariates", _frozen(X, float))
        object.__setattr__(self, "treatment", _frozen(a, int))
        object.__setattr__(self, "outcome", _frozen(y, float))
        object.__setattr__(self, "column_names", tuple(self.column_names))
        object.__setattr__(self, "treatment_set", tuple(int(v) for v in treatment_set))
        object.__setattr__(self, "oracle", {k: _frozen(v, float) for k, v in self.oracle.items()})

    @property
    def n_rows(self) -> int:
        return int(self.covariates.shape[0])

    @property
    def d(self) -> int:
        return int(self.covariates.shape[1])

    @property
    def outcome_observed(self) -> np.ndarray:
        return ~np.isnan(self.outcome)

    def arm(self, value: int) -> np.ndarray:
        """Row indices of units with treatment ``value``."""
        return np.flatnonzero(self.treatment == value)


# ===========================================================
# CSV INGESTION
# ===========================================================
def _parse_numeric(frame: pd.DataFrame, column: str, allow_empty: bool) -> np.ndarray:
    raw = frame[column]
    stripped = raw.str.strip()
    empty = stripped == ""
    values = pd.to_numeric(stripped.where(~empty, None), errors="coerce").to_numpy(dtype=float)
    bad = ~np.isfinite(values) & ~(empty.to_numpy() & allow_empty)
    if bad.any():
        i = int(np.flatnonzero(bad)[0])
        cell = raw.iloc[i]
        # +2: header line and 1-based numbering
        raise DatasetParseError(
            "Dataset",
            f"unparseable value {cell!r} in column '{column}'" if cell.strip() else f"missing value in column '{column}'",
            row=i + 2, column=column,
        )
    return values


def load_dataset_csv(path, schema: CsvSchema) -> Dataset:
    """
    Read a UTF-8 CSV with one header row. Covariates must all parse as finite
    reals; empty outcome cells are allowed and become missing.
    """
    path = Path(path)
    try:
        frame = pd.read_csv(path, dtype=str, keep_default_na=False, encoding="utf-8")
    except FileNotFoundError as e:
        raise DatasetParseError("Dataset", f"file not found: {path}", cause=e) from e

    needed = [schema.treatment_column, schema.outcome_column, *schema.covariate_columns]
    missing = [c for c in needed if c not in frame.columns]
    if missing:
        raise DatasetParseError("Dataset", f"columns not found in header: {missing}", path=str(path))

    X = np.column_stack(
        [_parse_numeric(frame, c, allow_empty=False) for c in schema.covariate_columns]
    ) if schema.covariate_columns else np.empty((len(frame), 0))
    a = _parse_numeric(frame, schema.treatment_column, allow_empty=False)
    if np.any(a != np.round(a)):
        i = int(np.flatnonzero(a != np.round(a))[0])
        raise DatasetParseError(
            "Dataset", "treatment labels must be integers",
            row=i + 2, column=schema.treatment_column,
        )
    y = _parse_numeric(frame, schema.outcome_column, allow_empty=True)

    ds = Dataset(
        covariates=X,
        treatment=a.astype(int),
        outcome=y,
        column_names=tuple(schema.covariate_columns),
    )
    logger.debug(f"Loaded {ds.n_rows} rows x {ds.d} covariates from {path}")
    return ds


# ===========================================================
# CSV EMISSION
# ===========================================================
def write_dataset_csv(ds: Dataset, path, treatment_column: str = "a", outcome_column: str = "y") -> Path:
    """
    Write ``ds`` in the ingestion format; hidden oracle columns go to the
    ``.oracle.csv`` sibling.
    """
    path = Path(path)
    frame = pd.DataFrame(ds.covariates, columns=list(ds.column_names))
    frame[treatment_column] = ds.treatment
    frame[outcome_column] = ds.outcome
    try:
        frame.to_csv(path, index=False, na_rep="", float_format="%.17g")
        if ds.oracle:
            oracle_path = path.with_name(path.stem + ORACLE_SUFFIX)
            pd.DataFrame(dict(ds.oracle)).to_csv(oracle_path, index=False, float_format="%.17g")
    except OSError as e:
        raise BalancingRuntimeException("Dataset", f"cannot write {path}", cause=e, path=str(path)) from e
    return path

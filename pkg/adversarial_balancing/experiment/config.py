# adversarial_balancing/experiment/config.py

import json
from pathlib import Path
from typing import Any, Literal

from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator, model_validator

from adversarial_balancing.benchgen.truth import true_values
from adversarial_balancing.classifiers.family import FamilySpec, resolve_family
from adversarial_balancing.core.dataset import CsvSchema
from adversarial_balancing.core.problem import Estimand
from adversarial_balancing.exceptions import BalancingException, ConfigError
from adversarial_balancing.registry.method import MethodRegistry


class ExperimentConfig(BaseModel):
    """
    One flat JSON document describing a benchmark comparison. Methods are
    spec strings ``name`` or ``name:family`` (e.g. ``adversarial:lr``).
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    benchmark: Literal["kang_schafer", "circular", "csv"]
    transformed: bool = False
    sizes: list[int] = Field(default_factory=list)
    replications: int = Field(default=100, ge=1)
    methods: list[str] = Field(min_length=1)
    seed: int = Field(default=0, ge=0)
    bootstrap_samples: int = Field(default=1000, ge=1)
    level: float = Field(default=0.95, gt=0, lt=1)
    output: str | None = None
    format: Literal["csv", "json"] = "csv"
    workers: int | None = Field(default=None, ge=1)

    # adversarial method options
    n_iter: int = Field(default=20, ge=1)
    kfold: int | None = Field(default=None, ge=2)
    # family used for the per-replication H-divergence diagnostic
    diagnostic_family: str = "lr"

    # csv benchmark
    csv_path: str | None = None
    treatment_column: str = "a"
    outcome_column: str = "y"
    covariate_columns: list[str] = Field(default_factory=list)
    estimand: Literal["epo", "ate", "att"] | None = None
    treatment_value: int = 1
    reference_treatment: int = 1
    truth: float | None = None
    report_bias: bool = True

    @field_validator("sizes")
    @classmethod
    def _check_sizes(cls, sizes):
        if any(n < 10 for n in sizes):
            raise ValueError("every size must be at least 10")
        return sizes

    @field_validator("methods")
    @classmethod
    def _check_methods(cls, methods):
        for spec in methods:
            try:
                method = MethodRegistry.create(spec)
            except ConfigError as e:
                raise ValueError(e.message) from e
            if method.family:
                resolve_family(method.family)
        return methods

    @field_validator("diagnostic_family")
    @classmethod
    def _check_diagnostic_family(cls, name):
        if not isinstance(resolve_family(name), FamilySpec):
            raise ValueError("diagnostic_family must name a single family, not a CV-selected set")
        return name

    @model_validator(mode="before")
    @classmethod
    def _csv_defaults(cls, data):
        # a csv dataset is fixed, so it defaults to a single replication
        if isinstance(data, dict) and data.get("benchmark") == "csv":
            return {"replications": 1, **data}
        return data

    @model_validator(mode="after")
    def _check_benchmark(self):
        if self.benchmark == "csv":
            if self.replications != 1:
                raise ValueError("csv benchmark has one fixed dataset: replications must be 1")
            if not self.csv_path or not self.covariate_columns or self.estimand is None:
                raise ValueError("csv benchmark needs csv_path, covariate_columns and estimand")
            if self.report_bias and self.truth is None:
                raise ValueError("csv benchmark needs a truth value, or report_bias = false")
        elif not self.sizes:
            raise ValueError("sizes must be a non-empty list")
        return self

    # ---------- DERIVED ----------
    def resolved_estimand(self) -> Estimand:
        if self.benchmark != "csv":
            return true_values(self.benchmark).estimand
        return Estimand.from_kind(self.estimand, self.treatment_value, self.reference_treatment)

    def resolved_truth(self) -> float | None:
        if self.benchmark != "csv":
            return true_values(self.benchmark).true_value
        return self.truth if self.report_bias else None

    def csv_schema(self) -> CsvSchema:
        return CsvSchema(
            treatment_column=self.treatment_column,
            outcome_column=self.outcome_column,
            covariate_columns=tuple(self.covariate_columns),
        )

    def method_options(self) -> dict[str, Any]:
        return {"n_iter": self.n_iter, "kfold": self.kfold}


def load_config(path: str | Path | None = None, **overrides) -> ExperimentConfig:
    """Read the JSON config (if any) and apply non-None overrides."""
    data: dict[str, Any] = {}
    if path is not None:
        try:
            data = json.loads(Path(path).read_text(encoding="utf-8"))
        except (OSError, json.JSONDecodeError) as e:
            raise ConfigError("Config", f"cannot read config file {path}", cause=e) from e
        if not isinstance(data, dict):
            raise ConfigError("Config", "config file must hold one JSON object", path=str(path))
    data.update({k: v for k, v in overrides.items() if v is not None})
    try:
        return ExperimentConfig.model_validate(data)
    except (ValidationError, BalancingException) as e:
        raise ConfigError("Config", "invalid experiment configuration", cause=e) from e

# adversarial_balancing/core/problem.py

from dataclasses import dataclass
from typing import Literal

import numpy as np
from pydantic import BaseModel, ConfigDict, model_validator

from adversarial_balancing.core.dataset import Dataset
from adversarial_balancing.exceptions import ConfigError, DegenerateProblemError, InvalidInputError

MIN_ARM_SIZE = 2


class Estimand(BaseModel):
    """
    ExpectedPotentialOutcome(a) (``kind="epo"``), ATE, or ATT(reference_treatment).
    """

    model_config = ConfigDict(frozen=True)

    kind: Literal["epo", "ate", "att"]
    treatment: int | None = None
    reference_treatment: int | None = None

    @model_validator(mode="after")
    def _check_fields(self):
        if self.kind == "epo" and self.treatment is None:
            raise ValueError("expected potential outcome needs the treatment value 'a'")
        if self.kind == "att" and self.reference_treatment is None:
            raise ValueError("ATT needs the reference (treated) treatment value")
        return self

    @classmethod
    def expected_potential_outcome(cls, a: int) -> "Estimand":
        return cls(kind="epo", treatment=a)

    @classmethod
    def ate(cls) -> "Estimand":
        return cls(kind="ate")

    @classmethod
    def att(cls, reference_treatment: int = 1) -> "Estimand":
        return cls(kind="att", reference_treatment=reference_treatment)

    @classmethod
    def from_kind(cls, kind: str, treatment_value: int = 1, reference_treatment: int = 1) -> "Estimand":
        if kind == "epo":
            return cls.expected_potential_outcome(treatment_value)
        if kind == "att":
            return cls.att(reference_treatment)
        if kind == "ate":
            return cls.ate()
        raise ConfigError("Estimand", f"unknown estimand '{kind}'", known=["epo", "ate", "att"])

    def label(self) -> str:
        if self.kind == "epo":
            return f"E[Y^{self.treatment}]"
        if self.kind == "att":
            return f"ATT({self.reference_treatment})"
        return "ATE"


@dataclass(frozen=True, eq=False)
class BalancingProblem:
    """
    Source sample S (n x d) to be reweighted toward target sample T (n' x d).
    ``source_rows``/``target_rows`` index the originating Dataset when known.
    """

    source: np.ndarray
    target: np.ndarray
    source_rows: np.ndarray | None = None
    target_rows: np.ndarray | None = None

    def __post_init__(self):
        S = np.array(self.source, dtype=float, copy=True)
        T = np.array(self.target, dtype=float, copy=True)
        if S.ndim != 2 or T.ndim != 2:
            raise InvalidInputError("BalancingProblem", "source and target must be matrices")
        if S.shape[1] != T.shape[1]:
            raise InvalidInputError(
                "BalancingProblem", "source and target column counts differ",
                d_source=S.shape[1], d_target=T.shape[1],
            )
        if S.shape[0] < MIN_ARM_SIZE or T.shape[0] < MIN_ARM_SIZE:
            raise DegenerateProblemError(
                "BalancingProblem", "source and target need at least 2 rows each",
                n=S.shape[0], n_prime=T.shape[0],
            )
        if not (np.all(np.isfinite(S)) and np.all(np.isfinite(T))):
            raise InvalidInputError("BalancingProblem", "non-finite covariates")
        for name, arr in (("source", S), ("target", T)):
            arr.setflags(write=False)
            object.__setattr__(self, name, arr)

    @property
    def n(self) -> int:
        return int(self.source.shape[0])

    @property
    def n_prime(self) -> int:
        return int(self.target.shape[0])

    @property
    def d(self) -> int:
        return int(self.source.shape[1])


def build_balancing_problem(ds: Dataset, estimand: Estimand, treatment_value: int) -> BalancingProblem:
    """
    EPO/ATE legs: source = units with A = treatment_value, target = all rows.
    ATT: source = units with A = treatment_value, target = units with
    A = reference_treatment.
    """
    source_rows = ds.arm(treatment_value)
    if estimand.kind == "att":
        present = np.unique(ds.treatment)
        if present.size != 2:
            raise DegenerateProblemError(
                "BalancingProblem", "ATT requires exactly two treatment values present",
                present=present.tolist(),
            )
        if treatment_value == estimand.reference_treatment:
            raise InvalidInputError(
                "BalancingProblem", "ATT source arm must differ from the reference arm",
                treatment_value=treatment_value,
            )
        target_rows = ds.arm(estimand.reference_treatment)
    else:
        target_rows = np.arange(ds.n_rows)

    if source_rows.size < MIN_ARM_SIZE or target_rows.size < MIN_ARM_SIZE:
        raise DegenerateProblemError(
            "BalancingProblem", f"too few units for treatment value {treatment_value}",
            n_source=int(source_rows.size), n_target=int(target_rows.size),
        )
    return BalancingProblem(
        source=ds.covariates[source_rows],
        target=ds.covariates[target_rows],
        source_rows=source_rows,
        target_rows=target_rows,
    )


def estimand_legs(estimand: Estimand, ds: Dataset) -> list[tuple[int, int]]:
    """
    Balancing runs an estimand needs, as (treatment_value, sign) pairs whose
    signed weighted means sum to the estimate. ATT's treated mean is unweighted
    and is added by the caller.
    """
    if estimand.kind == "epo":
        return [(estimand.treatment, 1)]
    arms = sorted(set(ds.treatment.tolist()))
    if len(arms) != 2:
        raise DegenerateProblemError("Estimand", f"{estimand.label()} needs exactly two arms", present=arms)
    if estimand.kind == "ate":
        treated = max(arms)
        control = min(arms)
        return [(treated, 1), (control, -1)]
    control = next(a for a in arms if a != estimand.reference_treatment)
    return [(control, -1)]

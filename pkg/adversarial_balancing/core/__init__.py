from adversarial_balancing.core.dataset import CsvSchema, Dataset, load_dataset_csv, write_dataset_csv
from adversarial_balancing.core.losses import LossKind, log_loss, per_unit_loss, zero_one_loss
from adversarial_balancing.core.problem import (
    BalancingProblem,
    Estimand,
    build_balancing_problem,
    estimand_legs,
)
from adversarial_balancing.core.weights import WeightVector, weighted_outcome_estimate

__all__ = [
    "BalancingProblem",
    "CsvSchema",
    "Dataset",
    "Estimand",
    "LossKind",
    "WeightVector",
    "build_balancing_problem",
    "estimand_legs",
    "load_dataset_csv",
    "log_loss",
    "per_unit_loss",
    "weighted_outcome_estimate",
    "write_dataset_csv",
    "zero_one_loss",
]

from adversarial_balancing.experiment.config import ExperimentConfig, load_config
from adversarial_balancing.experiment.results import (
    CSV_COLUMNS,
    ExperimentResult,
    MethodResult,
    bootstrap_ci,
    emit_results,
)
from adversarial_balancing.experiment.runner import MethodOutcome, estimate_with, run_experiment

__all__ = [
    "CSV_COLUMNS",
    "ExperimentConfig",
    "ExperimentResult",
    "MethodOutcome",
    "MethodResult",
    "bootstrap_ci",
    "emit_results",
    "estimate_with",
    "load_config",
    "run_experiment",
]

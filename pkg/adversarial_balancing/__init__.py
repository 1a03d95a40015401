from adversarial_balancing.adversarial import AdversarialParams, AdversarialTrace, adversarial_balance
from adversarial_balancing.baselines import ipw_weights, mmd_weights
from adversarial_balancing.classifiers import CvSelect, FamilySpec, resolve_family
from adversarial_balancing.core import (
    BalancingProblem,
    Dataset,
    Estimand,
    WeightVector,
    build_balancing_problem,
    load_dataset_csv,
    weighted_outcome_estimate,
)
from adversarial_balancing.diagnostics import BalanceReport, build_report, h_divergence

__version__ = "0.1.0"

__all__ = [
    "AdversarialParams",
    "AdversarialTrace",
    "BalanceReport",
    "BalancingProblem",
    "CvSelect",
    "Dataset",
    "Estimand",
    "FamilySpec",
    "WeightVector",
    "adversarial_balance",
    "build_balancing_problem",
    "build_report",
    "h_divergence",
    "ipw_weights",
    "load_dataset_csv",
    "mmd_weights",
    "resolve_family",
    "weighted_outcome_estimate",
]

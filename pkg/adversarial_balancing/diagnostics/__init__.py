from adversarial_balancing.diagnostics.bound import theorem_bound
from adversarial_balancing.diagnostics.divergence import divergence_from_loss, h_divergence
from adversarial_balancing.diagnostics.report import BalanceReport, build_report
from adversarial_balancing.diagnostics.variability import (
    StandardizedDifference,
    effective_sample_size,
    standardized_mean_difference,
    weight_sq_norm,
)

__all__ = [
    "BalanceReport",
    "StandardizedDifference",
    "build_report",
    "divergence_from_loss",
    "effective_sample_size",
    "h_divergence",
    "standardized_mean_difference",
    "theorem_bound",
    "weight_sq_norm",
]

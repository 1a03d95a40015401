# adversarial_balancing/diagnostics/variability.py

from typing import NamedTuple

import numpy as np

from adversarial_balancing.core.problem import BalancingProblem
from adversarial_balancing.core.weights import WeightVector


def weight_sq_norm(w: WeightVector) -> float:
    """||w/n||^2; 1/n at uniform weights, 1 for a point mass."""
    u = w.w / w.n
    return float(np.dot(u, u))


def effective_sample_size(w: WeightVector) -> float:
    """Kish ESS (sum w)^2 / sum w^2."""
    return float(w.w.sum() ** 2 / np.dot(w.w, w.w))


class StandardizedDifference(NamedTuple):
    values: np.ndarray
    degenerate: np.ndarray


def standardized_mean_difference(prob: BalancingProblem, w: WeightVector) -> StandardizedDifference:
    """
    Per covariate: (weighted source mean - target mean) / sqrt((var_S + var_T) / 2),
    with unweighted variances. Zero pooled sd flags the coordinate; its value is
    0 when the means agree and NaN otherwise.
    """
    source_mean = np.average(prob.source, axis=0, weights=w.w)
    target_mean = prob.target.mean(axis=0)
    pooled_sd = np.sqrt(0.5 * (prob.source.var(axis=0, ddof=1) + prob.target.var(axis=0, ddof=1)))
    diff = source_mean - target_mean

    degenerate = pooled_sd == 0
    values = np.empty(prob.d)
    values[~degenerate] = diff[~degenerate] / pooled_sd[~degenerate]
    values[degenerate] = np.where(diff[degenerate] == 0, 0.0, np.nan)
    return StandardizedDifference(values, degenerate)

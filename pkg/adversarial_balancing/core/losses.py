# adversarial_balancing/core/losses.py

from enum import Enum

import numpy as np

from adversarial_balancing.exceptions import InvalidInputError

LOG_LOSS_EPS = 1e-12


class LossKind(str, Enum):
    ZERO_ONE = "zero_one"
    LOG = "log"


def zero_one_loss(predicted_prob, label):
    """
    1[1[p > 1/2] != c]. Strict threshold: p == 0.5 predicts class 0.

    Accepts scalars or arrays; returns int (scalar input) or int array.
    """
    p = np.asarray(predicted_prob, dtype=float)
    c = np.asarray(label)
    if not np.all(np.isfinite(p)):
        raise InvalidInputError("Losses", "zero_one_loss requires finite probabilities")
    hard = (p > 0.5).astype(int)
    out = (hard != c).astype(int)
    return int(out) if out.ndim == 0 else out


def log_loss(predicted_prob, label):
    """Nonnegative log-loss -[c log p + (1-c) log(1-p)], p clipped to [eps, 1-eps]."""
    p = np.clip(np.asarray(predicted_prob, dtype=float), LOG_LOSS_EPS, 1.0 - LOG_LOSS_EPS)
    c = np.asarray(label, dtype=float)
    out = -(c * np.log(p) + (1.0 - c) * np.log1p(-p))
    return float(out) if out.ndim == 0 else out


def per_unit_loss(kind: LossKind, predicted_prob, label):
    if LossKind(kind) is LossKind.ZERO_ONE:
        return np.asarray(zero_one_loss(predicted_prob, label), dtype=float)
    return np.asarray(log_loss(predicted_prob, label), dtype=float)

# adversarial_balancing/diagnostics/divergence.py

import numpy as np

from adversarial_balancing.adversarial.balance import augment_labeled_dataset, two_term_zero_one_loss
from adversarial_balancing.classifiers.family import FamilySpec
from adversarial_balancing.classifiers.selection import PredictionMode, get_predictions
from adversarial_balancing.core.problem import BalancingProblem
from adversarial_balancing.core.weights import WeightVector


def divergence_from_loss(loss_n: float) -> float:
    """d_H = 2 (1 - min L_n), clamped to [0, 2]."""
    return float(np.clip(2.0 * (1.0 - loss_n), 0.0, 2.0))


def h_divergence(
    prob: BalancingProblem,
    w: WeightVector,
    family: FamilySpec,
    mode: PredictionMode | None = None,
    seed: int = 0,
) -> float:
    """
    Empirical H-divergence between the w-weighted source and the target:
    fit the discriminator on the weighted augmented dataset and convert its
    two-term 0-1 loss.
    """
    mode = mode or PredictionMode.train()
    X, labels, aug_weights = augment_labeled_dataset(prob)
    aug_weights[: prob.n] = w.w
    probs = get_predictions(family, X, labels, aug_weights, mode, seed=seed)
    return divergence_from_loss(two_term_zero_one_loss(probs, prob.n, w.w))

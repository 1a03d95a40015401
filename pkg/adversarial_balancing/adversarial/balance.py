# adversarial_balancing/adversarial/balance.py

import numpy as np

from adversarial_balancing.adversarial.params import AdversarialParams, AdversarialTrace
from adversarial_balancing.classifiers.selection import get_predictions, resolve_selection
from adversarial_balancing.core.losses import per_unit_loss, zero_one_loss
from adversarial_balancing.core.problem import BalancingProblem
from adversarial_balancing.core.weights import WeightVector
from adversarial_balancing.exceptions import BalancingRuntimeException, InvalidInputError
from adversarial_balancing.shared.logger import ns_logger

logger = ns_logger("Adversarial")


def augment_labeled_dataset(prob: BalancingProblem) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """
    Source rows labelled 0 with weight 1, then target rows labelled 1 with
    weight n/n' (equal class importance).
    """
    X = np.vstack([prob.source, prob.target])
    labels = np.r_[np.zeros(prob.n, dtype=int), np.ones(prob.n_prime, dtype=int)]
    weights = np.r_[np.ones(prob.n), np.full(prob.n_prime, prob.n / prob.n_prime)]
    return X, labels, weights


def exp_gradient_step(w, per_unit_losses, alpha: float) -> WeightVector:
    """
    w_i <- n w_i exp(alpha l_i) / sum_j w_j exp(alpha l_j), computed in the
    log domain.
    """
    w = np.asarray(w, dtype=float)
    losses = np.asarray(per_unit_losses, dtype=float)
    if w.shape != losses.shape:
        raise InvalidInputError("Adversarial", "weights and losses differ in length", n_w=w.size, n_l=losses.size)
    if not np.all(np.isfinite(losses)) or np.any(losses < 0):
        raise InvalidInputError("Adversarial", "losses must be finite and nonnegative")
    if not alpha > 0:
        raise InvalidInputError("Adversarial", "alpha must be positive", alpha=alpha)
    if np.any(w < 0) or not np.any(w > 0):
        raise InvalidInputError("Adversarial", "weights must be nonnegative and not all zero")

    positive = w > 0
    log_u = np.full(w.size, -np.inf)
    log_u[positive] = np.log(w[positive]) + alpha * losses[positive]
    log_u -= log_u[positive].max()
    u = np.exp(log_u)
    return WeightVector(u * (w.size / u.sum()))


def two_term_zero_one_loss(probs: np.ndarray, n: int, w: np.ndarray) -> float:
    """L_n = (1/n) sum_S w_i l(d(x_i), 0) + (1/n') sum_T l(d(x_j), 1)."""
    source_miss = zero_one_loss(probs[:n], 0)
    target_miss = zero_one_loss(probs[n:], 1)
    return float(np.dot(w, source_miss) / n + np.mean(target_miss))


def adversarial_balance(prob: BalancingProblem, params: AdversarialParams | None = None) -> tuple[WeightVector, AdversarialTrace]:
    """
    Alternate a discriminator fit on the weighted augmented dataset with one
    exponentiated-gradient step on the source weights. Target weights stay
    fixed at n/n'. Returns the last iterate and the trace.
    """
    params = params or AdversarialParams()
    X, labels, aug_weights = augment_labeled_dataset(prob)
    n = prob.n

    family = resolve_selection(params.family, X, labels, aug_weights, seed=params.seed)
    trace = AdversarialTrace(family=family)
    w = WeightVector.uniform(n)

    logger.debug(f"Balancing n={n} -> n'={prob.n_prime} with {family.label}, {params.n_iter} iterations")
    for t in range(params.n_iter):
        aug_weights[:n] = w.w
        probs = get_predictions(family, X, labels, aug_weights, params.prediction_mode, seed=params.seed)
        loss_n = two_term_zero_one_loss(probs, n, w.w)
        eg_losses = per_unit_loss(params.loss, probs[:n], 0)
        if not np.all(np.isfinite(eg_losses)):
            raise BalancingRuntimeException("Adversarial", "non-finite per-unit losses", iteration=t)

        alpha = params.alpha(t)
        w = exp_gradient_step(w.w, eg_losses, alpha)
        trace.record(loss_n, w.w, alpha)
        logger.debug(f"iter {t}: L_n={loss_n:.4f} alpha={alpha:.4f} |w/n|^2={trace.sq_norms[-1]:.6f}")

    return w, trace

# adversarial_balancing/classifiers/model.py

from dataclasses import dataclass

import numpy as np
from scipy.optimize import minimize

from adversarial_balancing.classifiers.family import FamilyKind, FamilySpec
from adversarial_balancing.classifiers.objectives import LogitObjective, build_objective
from adversarial_balancing.classifiers.stump import ThresholdStump
from adversarial_balancing.exceptions import DegenerateLabelsError, InvalidInputError
from adversarial_balancing.shared.logger import ns_logger

logger = ns_logger("Classifiers")


@dataclass(frozen=True, eq=False)
class ClassifierModel:
    """
    A fitted weighted binary discriminator.

    ``structure`` is the fitted architecture (support points, layer sizes or
    the stump split), ``theta`` the flat parameter vector, and
    ``mean``/``scale`` the weighted standardisation captured at fit time.
    """

    family: FamilySpec
    structure: LogitObjective | ThresholdStump
    theta: np.ndarray
    mean: np.ndarray
    scale: np.ndarray
    converged: bool = True
    n_iter: int = 0

    @property
    def d(self) -> int:
        return int(self.mean.size)


def _check_xy(X, labels, sample_weights):
    X = np.asarray(X, dtype=float)
    y = np.asarray(labels, dtype=float)
    w = np.asarray(sample_weights, dtype=float)
    if X.ndim != 2 or y.shape != (X.shape[0],) or w.shape != (X.shape[0],):
        raise InvalidInputError(
            "Classifiers", "X rows, labels and sample_weights must agree",
            x_shape=X.shape, n_labels=y.size, n_weights=w.size,
        )
    if not np.all(np.isfinite(X)):
        raise InvalidInputError("Classifiers", "X contains non-finite values")
    if not np.all(np.isin(y, (0.0, 1.0))):
        raise InvalidInputError("Classifiers", "labels must be 0/1")
    if not np.all(np.isfinite(w)) or np.any(w < 0):
        raise InvalidInputError("Classifiers", "sample weights must be finite and nonnegative")
    for cls in (0.0, 1.0):
        if w[y == cls].sum() <= 0:
            raise DegenerateLabelsError(
                "Classifiers", f"class {int(cls)} is absent or carries zero weight",
                n_class=int(np.sum(y == cls)),
            )
    return X, y, w * (w.size / w.sum())


def weighted_standardization(X: np.ndarray, w: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    mean = np.average(X, axis=0, weights=w)
    var = np.average((X - mean) ** 2, axis=0, weights=w)
    scale = np.sqrt(var)
    scale[scale <= 0] = 1.0
    return mean, scale


def prepare_training(family: FamilySpec, X, labels, sample_weights, seed: int = 0):
    """Shared by fit and gradient_check: validated, standardised data and the objective."""
    X, y, w = _check_xy(X, labels, sample_weights)
    mean, scale = weighted_standardization(X, w)
    X_std = (X - mean) / scale
    rng = np.random.default_rng(seed)
    objective = build_objective(family, X_std, rng)
    return objective, X_std, y, w, mean, scale, rng


# ===========================================================
# FIT
# ===========================================================
def fit(family: FamilySpec, X, labels, sample_weights, seed: int = 0) -> ClassifierModel:
    """
    Minimise the weighted, L2-regularised log-loss (weights rescaled to mean 1)
    on internally standardised features. The stump family instead minimises
    the weighted 0-1 error exactly.
    """
    if family.kind is FamilyKind.STUMP:
        X, y, w = _check_xy(X, labels, sample_weights)
        stump, _ = ThresholdStump.fit(X, y, w)
        d = X.shape[1]
        return ClassifierModel(family, stump, np.empty(0), np.zeros(d), np.ones(d))

    objective, X_std, y, w, mean, scale, rng = prepare_training(family, X, labels, sample_weights, seed)
    F = objective.features(X_std)
    result = minimize(
        objective.loss_and_grad,
        objective.initial(rng),
        args=(F, y, w),
        jac=True,
        method="L-BFGS-B",
        options={"maxiter": family.max_iter, "gtol": family.tol},
    )
    theta = np.asarray(result.x, dtype=float)
    if not np.all(np.isfinite(theta)):
        raise InvalidInputError("Classifiers", f"{family.label} fit produced non-finite parameters")
    if not result.success:
        logger.warning(f"{family.label} fit did not converge in {result.nit} iterations: {result.message}")
    theta.setflags(write=False)
    return ClassifierModel(
        family=family,
        structure=objective,
        theta=theta,
        mean=mean,
        scale=scale,
        converged=bool(result.success),
        n_iter=int(result.nit),
    )


# ===========================================================
# PREDICT
# ===========================================================
def predict_proba(model: ClassifierModel, X) -> np.ndarray:
    """P(label = 1 | x) per row."""
    X = np.atleast_2d(np.asarray(X, dtype=float))
    if X.shape[1] != model.d:
        raise InvalidInputError("Classifiers", "dimension mismatch", expected=model.d, got=X.shape[1])
    X_std = (X - model.mean) / model.scale
    return np.clip(model.structure.proba(model.theta, X_std), 0.0, 1.0)


def predict(model: ClassifierModel, X) -> np.ndarray:
    return (predict_proba(model, X) > 0.5).astype(int)


# ===========================================================
# GRADIENT CHECK
# ===========================================================
def gradient_check(family: FamilySpec, X, labels, weights, epsilon: float = 1e-6, seed: int = 0) -> float:
    """
    Max discrepancy between the analytic gradient at a random parameter point
    and central finite differences, relative to the gradient's largest entry.
    """
    if family.kind is FamilyKind.STUMP:
        raise InvalidInputError("Classifiers", "the stump family has no gradient")
    objective, X_std, y, w, *_ , rng = prepare_training(family, X, labels, weights, seed)
    F = objective.features(X_std)
    theta = rng.normal(0.0, 0.5, size=objective.n_params)
    _, analytic = objective.loss_and_grad(theta, F, y, w)
    numeric = np.empty_like(analytic)
    for i in range(theta.size):
        step = np.zeros_like(theta)
        step[i] = epsilon
        f_plus, _ = objective.loss_and_grad(theta + step, F, y, w)
        f_minus, _ = objective.loss_and_grad(theta - step, F, y, w)
        numeric[i] = (f_plus - f_minus) / (2.0 * epsilon)
    denom = max(np.max(np.abs(analytic)), np.max(np.abs(numeric)), 1e-12)
    return float(np.max(np.abs(analytic - numeric)) / denom)

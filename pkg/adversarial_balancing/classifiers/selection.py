# adversarial_balancing/classifiers/selection.py

from typing import Literal, Sequence

import numpy as np
from pydantic import BaseModel, ConfigDict, Field
from sklearn.model_selection import StratifiedKFold

from adversarial_balancing.classifiers.family import CvSelect, FamilySpec
from adversarial_balancing.classifiers.model import fit, predict_proba
from adversarial_balancing.core.losses import zero_one_loss
from adversarial_balancing.exceptions import DegenerateLabelsError, InvalidInputError
from adversarial_balancing.shared.logger import ns_logger

logger = ns_logger("ModelSelection")


class PredictionMode(BaseModel):
    """How discriminator predictions on the training rows are obtained."""

    model_config = ConfigDict(frozen=True)

    kind: Literal["train", "kfold"] = "train"
    k: int = Field(default=5, ge=2)

    @classmethod
    def train(cls) -> "PredictionMode":
        return cls(kind="train")

    @classmethod
    def kfold(cls, k: int = 5) -> "PredictionMode":
        return cls(kind="kfold", k=k)


# ===========================================================
# STRATIFIED FOLDS
# ===========================================================
def effective_folds(labels, k: int) -> int:
    """k, reduced to the minority-class size when stratification needs it."""
    labels = np.asarray(labels)
    minority = int(min(np.sum(labels == 0), np.sum(labels == 1)))
    if minority <= 1:
        raise DegenerateLabelsError("ModelSelection", "minority class too small to stratify", minority=minority)
    if minority < k:
        logger.warning(f"Reducing folds from {k} to {minority} (minority class size)")
        return minority
    return k


def fold_splits(labels, k: int, seed: int) -> list[tuple[np.ndarray, np.ndarray]]:
    """(train, held-out) index pairs of a shuffled stratified k-fold split."""
    labels = np.asarray(labels)
    splitter = StratifiedKFold(n_splits=k, shuffle=True, random_state=seed)
    return list(splitter.split(np.arange(labels.size), labels))


def stratified_folds(labels, k: int, seed: int) -> np.ndarray:
    """Fold id per row, from the same split as ``fold_splits``."""
    folds = np.empty(np.asarray(labels).size, dtype=int)
    for f, (_, held) in enumerate(fold_splits(labels, k, seed)):
        folds[held] = f
    return folds


# ===========================================================
# PREDICTIONS
# ===========================================================
def get_predictions(family: FamilySpec, X, labels, weights, mode: PredictionMode, seed: int = 0) -> np.ndarray:
    """
    Discriminator probabilities for every training row, either from one fit
    on all rows or out-of-fold from k stratified cross-fits.
    """
    X = np.asarray(X, dtype=float)
    labels = np.asarray(labels)
    weights = np.asarray(weights, dtype=float)
    if mode.kind == "train":
        return predict_proba(fit(family, X, labels, weights, seed=seed), X)

    k = effective_folds(labels, mode.k)
    probs = np.empty(labels.size)
    for train, held in fold_splits(labels, k, seed):
        model = fit(family, X[train], labels[train], weights[train], seed=seed)
        probs[held] = predict_proba(model, X[held])
    return probs


# ===========================================================
# CROSS-VALIDATION SELECTION
# ===========================================================
def cv_errors(candidates: Sequence[FamilySpec], X, labels, sample_weights, k: int = 5, seed: int = 0) -> list[float]:
    """Mean weighted 0-1 error of each candidate over k stratified folds."""
    X = np.asarray(X, dtype=float)
    labels = np.asarray(labels)
    w = np.asarray(sample_weights, dtype=float)
    if X.shape[0] < k:
        raise InvalidInputError("ModelSelection", "fewer rows than folds", n=X.shape[0], k=k)
    k = effective_folds(labels, k)
    splits = fold_splits(labels, k, seed)

    errors = []
    for family in candidates:
        fold_errors = []
        for train, held in splits:
            model = fit(family, X[train], labels[train], w[train], seed=seed)
            miss = zero_one_loss(predict_proba(model, X[held]), labels[held])
            w_held = w[held]
            fold_errors.append(float(np.dot(w_held, miss) / w_held.sum()) if w_held.sum() > 0 else 0.0)
        errors.append(float(np.mean(fold_errors)))
    return errors


def cross_val_select(
    candidates: Sequence[FamilySpec], X, labels, sample_weights, k: int = 5, seed: int = 0
) -> FamilySpec:
    """Candidate with minimal CV error; ties go to the earlier candidate."""
    if not candidates:
        raise InvalidInputError("ModelSelection", "no candidate families")
    errors = cv_errors(candidates, X, labels, sample_weights, k, seed)
    best = 0
    for i, err in enumerate(errors):
        if err < errors[best]:
            best = i
    logger.info(
        "CV errors: "
        + ", ".join(f"{c.label}={e:.4f}" for c, e in zip(candidates, errors))
        + f" -> {candidates[best].label}"
    )
    return candidates[best]


def resolve_selection(family: FamilySpec | CvSelect, X, labels, sample_weights, seed: int = 0) -> FamilySpec:
    if isinstance(family, CvSelect):
        return cross_val_select(family.candidates, X, labels, sample_weights, family.k, seed)
    return family

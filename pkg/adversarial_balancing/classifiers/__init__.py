from adversarial_balancing.classifiers.family import (
    PRESET_NAMES,
    CvSelect,
    FamilyKind,
    FamilySpec,
    resolve_family,
)
from adversarial_balancing.classifiers.model import (
    ClassifierModel,
    fit,
    gradient_check,
    predict,
    predict_proba,
)
from adversarial_balancing.classifiers.selection import (
    PredictionMode,
    cross_val_select,
    cv_errors,
    fold_splits,
    get_predictions,
    resolve_selection,
    stratified_folds,
)

__all__ = [
    "PRESET_NAMES",
    "ClassifierModel",
    "CvSelect",
    "FamilyKind",
    "FamilySpec",
    "PredictionMode",
    "cross_val_select",
    "cv_errors",
    "fit",
    "fold_splits",
    "get_predictions",
    "gradient_check",
    "predict",
    "predict_proba",
    "resolve_family",
    "resolve_selection",
    "stratified_folds",
]

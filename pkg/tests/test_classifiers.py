from dataclasses import replace

import numpy as np
import pytest

from adversarial_balancing.classifiers import (
    CvSelect,
    FamilyKind,
    FamilySpec,
    PredictionMode,
    cross_val_select,
    fit,
    fold_splits,
    get_predictions,
    gradient_check,
    predict,
    predict_proba,
    resolve_family,
    stratified_folds,
)
from adversarial_balancing.classifiers.selection import effective_folds
from adversarial_balancing.classifiers.stump import ThresholdStump
from adversarial_balancing.exceptions import DegenerateLabelsError, InvalidInputError

LR = FamilySpec.logistic()
KERNEL = FamilySpec.kernel(scale=1.0)


def separable_1d():
    X = np.r_[np.linspace(-2.0, -0.5, 20), np.linspace(0.5, 2.0, 20)][:, None]
    labels = (X[:, 0] > 0).astype(int)
    return X, labels


def training_error(model, X, labels):
    return float(np.mean(predict(model, X) != labels))


# ===========================================================
# FAMILIES
# ===========================================================
def test_family_defaults_per_kind():
    assert LR.regularization == 1.0 and LR.max_iter == 1000
    mlp = FamilySpec.mlp(2)
    assert mlp.regularization == 1e-4 and mlp.max_iter == 2000
    assert mlp.label == "mlp2"


@pytest.mark.parametrize("depth", [0, 4])
def test_family_depth_range(depth):
    with pytest.raises(ValueError):
        FamilySpec.mlp(depth)


def test_family_rejects_non_positive_regularization():
    with pytest.raises(ValueError):
        FamilySpec.logistic(regularization=0.0)


def test_presets():
    assert resolve_family("svm") == resolve_family("kernel")
    mlp = resolve_family("mlp")
    assert isinstance(mlp, CvSelect)
    assert [c.depth for c in mlp.candidates] == [1, 2, 3]
    assert resolve_family("stump").kind is FamilyKind.STUMP
    with pytest.raises(InvalidInputError):
        resolve_family("random_forest")


# ===========================================================
# FIT / PREDICT
# ===========================================================
def test_lr_separates_linearly_separable_data():
    X, labels = separable_1d()
    model = fit(LR, X, labels, np.ones(X.shape[0]))
    assert training_error(model, X, labels) == 0.0
    assert model.converged


def test_fit_rejects_single_class():
    X, _ = separable_1d()
    with pytest.raises(DegenerateLabelsError):
        fit(LR, X, np.zeros(X.shape[0], dtype=int), np.ones(X.shape[0]))


def test_fit_rejects_zero_weight_class():
    X, labels = separable_1d()
    w = np.where(labels == 1, 0.0, 1.0)
    with pytest.raises(DegenerateLabelsError):
        fit(LR, X, labels, w)


def test_fit_rejects_non_finite_input():
    X, labels = separable_1d()
    X[3, 0] = np.nan
    with pytest.raises(InvalidInputError):
        fit(LR, X, labels, np.ones(X.shape[0]))


def test_null_and_saturated_lr_models():
    X, labels = separable_1d()
    model = fit(LR, X, labels, np.ones(X.shape[0]))
    null = replace(model, theta=np.zeros_like(model.theta))
    np.testing.assert_array_equal(predict_proba(null, X), 0.5)
    saturated = replace(model, theta=np.r_[np.zeros(model.d), 10.0])
    assert np.all(predict_proba(saturated, X) > 0.9999)


def test_predict_proba_dimension_mismatch():
    X, labels = separable_1d()
    model = fit(LR, X, labels, np.ones(X.shape[0]))
    with pytest.raises(InvalidInputError):
        predict_proba(model, np.zeros((2, 3)))


@pytest.mark.parametrize("family", [LR, KERNEL, FamilySpec.mlp(2)], ids=lambda f: f.label)
def test_predict_proba_in_unit_interval(family, rng):
    X = rng.normal(size=(60, 3))
    labels = (X[:, 0] + rng.normal(size=60) > 0).astype(int)
    model = fit(family, X, labels, np.ones(60))
    extreme = np.vstack([rng.normal(size=(20, 3)), np.full((1, 3), 1e6), np.full((1, 3), -1e6)])
    p = predict_proba(model, extreme)
    assert np.all(np.isfinite(p))
    assert np.all((p >= 0) & (p <= 1))


def test_kernel_beats_lr_on_concentric_circles(circles):
    X, labels = circles
    w = np.ones(X.shape[0])
    assert training_error(fit(resolve_family("kernel"), X, labels, w), X, labels) < 0.1
    assert training_error(fit(LR, X, labels, w), X, labels) > 0.3


def test_lr_invariant_to_weight_scale(rng):
    X = rng.normal(size=(80, 2))
    labels = (X @ [1.0, -0.5] + rng.normal(size=80) > 0).astype(int)
    w = rng.uniform(0.2, 2.0, size=80)
    p1 = predict_proba(fit(LR, X, labels, w), X)
    p2 = predict_proba(fit(LR, X, labels, 7.5 * w), X)
    np.testing.assert_allclose(p1, p2, atol=1e-6)


@pytest.mark.parametrize("family", [LR, KERNEL, FamilySpec.mlp(1)], ids=lambda f: f.label)
def test_fit_is_deterministic(family, rng):
    X = rng.normal(size=(40, 2))
    labels = (X[:, 1] > 0).astype(int)
    a = fit(family, X, labels, np.ones(40), seed=5)
    b = fit(family, X, labels, np.ones(40), seed=5)
    np.testing.assert_array_equal(a.theta, b.theta)


def test_kernel_scale_extremes(rng):
    X = rng.normal(size=(60, 2))
    labels = rng.integers(0, 2, size=60)
    labels[:2] = [0, 1]
    w = np.ones(60)
    narrow = training_error(fit(FamilySpec.kernel(scale=0.05), X, labels, w), X, labels)
    wide = training_error(fit(FamilySpec.kernel(scale=1e3), X, labels, w), X, labels)
    assert narrow < wide


def test_kernel_support_is_capped(rng):
    X = rng.normal(size=(120, 2))
    labels = (X[:, 0] > 0).astype(int)
    model = fit(FamilySpec.kernel(max_support=30), X, labels, np.ones(120))
    assert model.structure.support.shape == (30, 2)


# ===========================================================
# STUMPS
# ===========================================================
def test_stump_finds_best_threshold():
    X = np.array([[0.0], [1.0], [2.0], [3.0], [4.0]])
    y = np.array([1, 1, 0, 0, 0])
    stump, error = ThresholdStump.fit(X, y, np.ones(5))
    assert error == 0.0
    assert stump.inverted and stump.threshold == 1.0
    np.testing.assert_array_equal(stump.proba(None, X), y)


def test_stump_family_through_fit():
    X, labels = separable_1d()
    model = fit(FamilySpec.stump(), X, labels, np.ones(X.shape[0]))
    assert training_error(model, X, labels) == 0.0
    with pytest.raises(InvalidInputError):
        gradient_check(FamilySpec.stump(), X, labels, np.ones(X.shape[0]))


# ===========================================================
# GRADIENT CHECK
# ===========================================================
GRADIENT_FAMILIES = {
    "lr": lambda instance: LR,
    "kernel": lambda instance: FamilySpec.kernel(scale=0.5 + 0.25 * (instance % 4)),
    "mlp": lambda instance: FamilySpec.mlp(depth=instance % 3 + 1),
}


@pytest.mark.parametrize("instance", range(20))
@pytest.mark.parametrize("kind", sorted(GRADIENT_FAMILIES))
def test_gradient_check(kind, instance):
    rng = np.random.default_rng(1000 + instance)
    n = int(rng.integers(10, 31))
    d = int(rng.integers(1, 5))
    X = rng.normal(size=(n, d))
    labels = np.r_[np.zeros(n // 2, dtype=int), np.ones(n - n // 2, dtype=int)]
    weights = rng.uniform(0.1, 2.0, size=n)
    family = GRADIENT_FAMILIES[kind](instance)
    assert gradient_check(family, X, labels, weights, seed=instance) < 1e-4


# ===========================================================
# FOLDS / CV SELECTION / PREDICTIONS
# ===========================================================
def test_stratified_folds_balance_classes():
    labels = np.r_[np.zeros(12, dtype=int), np.ones(8, dtype=int)]
    folds = stratified_folds(labels, 4, seed=1)
    for f in range(4):
        assert np.sum((folds == f) & (labels == 0)) == 3
        assert np.sum((folds == f) & (labels == 1)) == 2
    np.testing.assert_array_equal(folds, stratified_folds(labels, 4, seed=1))


def test_fold_splits_partition_rows_and_follow_sklearn():
    from sklearn.model_selection import StratifiedKFold

    labels = np.r_[np.zeros(15, dtype=int), np.ones(10, dtype=int)]
    splits = fold_splits(labels, 5, seed=7)
    held = np.sort(np.concatenate([h for _, h in splits]))
    np.testing.assert_array_equal(held, np.arange(25))
    for train, test in splits:
        assert np.intersect1d(train, test).size == 0
        assert np.sum(labels[test] == 1) == 2

    reference = StratifiedKFold(n_splits=5, shuffle=True, random_state=7).split(np.arange(25), labels)
    for (train, test), (ref_train, ref_test) in zip(splits, reference):
        np.testing.assert_array_equal(test, ref_test)
        np.testing.assert_array_equal(train, ref_train)
    assert any(not np.array_equal(a[1], b[1]) for a, b in zip(splits, fold_splits(labels, 5, seed=8)))


def test_effective_folds_reduction():
    labels = np.r_[np.zeros(10, dtype=int), np.ones(3, dtype=int)]
    assert effective_folds(labels, 5) == 3
    with pytest.raises(DegenerateLabelsError):
        effective_folds(np.r_[np.zeros(10, dtype=int), 1], 5)


def test_cv_tie_goes_to_first_candidate():
    X, labels = separable_1d()
    chosen = cross_val_select([LR, KERNEL], X, labels, np.ones(X.shape[0]), k=5, seed=0)
    assert chosen == LR


def test_cv_selects_kernel_on_circles(circles):
    X, labels = circles
    chosen = cross_val_select([LR, KERNEL], X, labels, np.ones(X.shape[0]), k=5, seed=0)
    assert chosen == KERNEL


def test_cv_mlp_depth_is_deterministic(rng):
    X = rng.normal(size=(50, 2))
    labels = (X[:, 0] * X[:, 1] > 0).astype(int)
    candidates = list(resolve_family("mlp").candidates)
    first = cross_val_select(candidates, X, labels, np.ones(50), seed=3)
    second = cross_val_select(candidates, X, labels, np.ones(50), seed=3)
    assert first == second
    assert first.depth in (1, 2, 3)


def test_kfold_predictions_are_out_of_fold(rng):
    X = rng.normal(size=(40, 2))
    labels = (X[:, 0] > 0).astype(int)
    probs = get_predictions(LR, X, labels, np.ones(40), PredictionMode.kfold(4), seed=0)
    assert probs.shape == (40,)
    assert np.all((probs >= 0) & (probs <= 1))
    train = get_predictions(LR, X, labels, np.ones(40), PredictionMode.train())
    assert not np.allclose(probs, train)


@pytest.mark.slow
def test_lr_on_indistinguishable_classes_is_near_chance():
    errors = []
    for seed in range(100):
        rng = np.random.default_rng(seed)
        X = rng.normal(size=(500, 2))
        labels = rng.integers(0, 2, size=500)
        errors.append(training_error(fit(LR, X, labels, np.ones(500)), X, labels))
    assert abs(np.mean(errors) - 0.5) < 0.1


@pytest.mark.slow
def test_cv_selects_kernel_on_circles_across_seeds():
    hits = 0
    for seed in range(50):
        rng = np.random.default_rng(100 + seed)
        X = rng.uniform(-1.0, 1.0, size=(500, 2))
        labels = (np.linalg.norm(X, axis=1) < np.sqrt(2.0 / np.pi)).astype(int)
        hits += cross_val_select([LR, KERNEL], X, labels, np.ones(500), seed=seed) == KERNEL
    assert hits / 50 > 0.9

import json
import math

import numpy as np
import pytest

from adversarial_balancing.classifiers import FamilySpec, PredictionMode
from adversarial_balancing.core import WeightVector
from adversarial_balancing.core.problem import BalancingProblem
from adversarial_balancing.diagnostics import (
    build_report,
    divergence_from_loss,
    effective_sample_size,
    h_divergence,
    standardized_mean_difference,
    theorem_bound,
    weight_sq_norm,
)
from adversarial_balancing.exceptions import InvalidInputError

LR = FamilySpec.logistic()
STUMP = FamilySpec.stump()


def brute_force_stump_divergence(prob: BalancingProblem, w: np.ndarray) -> float:
    """2 max |mean_T h - weighted mean_S h| over every threshold rule."""
    best = 0.0
    for j in range(prob.d):
        values = np.r_[-np.inf, np.unique(np.r_[prob.source[:, j], prob.target[:, j]])]
        for t in values:
            h_s = prob.source[:, j] > t
            h_t = prob.target[:, j] > t
            best = max(best, abs(h_t.mean() - np.dot(w, h_s) / prob.n))
    return 2.0 * best


# ===========================================================
# H-DIVERGENCE
# ===========================================================
def test_divergence_from_loss_clamps():
    assert divergence_from_loss(1.0) == 0.0
    assert divergence_from_loss(0.0) == 2.0
    assert divergence_from_loss(1.3) == 0.0
    assert divergence_from_loss(0.75) == pytest.approx(0.5)


def test_identical_samples_have_no_divergence(rng):
    S = rng.normal(size=(80, 3))
    prob = BalancingProblem(source=S, target=S.copy())
    dH = h_divergence(prob, WeightVector.uniform(80), LR)
    assert dH < 0.15
    assert dH == pytest.approx(0.0, abs=1e-12)


def test_separated_samples_are_maximally_divergent(rng):
    prob = BalancingProblem(source=rng.normal(size=(60, 2)), target=rng.normal(loc=10.0, size=(40, 2)))
    assert h_divergence(prob, WeightVector.uniform(60), LR) > 1.9


def test_stump_divergence_matches_brute_force(rng):
    prob = BalancingProblem(source=rng.normal(size=(30, 2)), target=rng.normal(loc=0.4, size=(25, 2)))
    for w in (np.ones(30), WeightVector.normalized(rng.uniform(size=30)).w):
        dH = h_divergence(prob, WeightVector(w), STUMP)
        assert dH == pytest.approx(brute_force_stump_divergence(prob, w), abs=1e-9)


@pytest.mark.parametrize("seed", range(100))
def test_stump_divergence_matches_brute_force_in_one_dimension(seed):
    rng = np.random.default_rng(seed)
    n, m = (int(k) for k in rng.integers(2, 31, size=2))
    prob = BalancingProblem(source=rng.normal(size=(n, 1)), target=rng.normal(loc=rng.uniform(-1, 1), size=(m, 1)))
    w = rng.dirichlet(np.ones(n)) * n
    dH = h_divergence(prob, WeightVector(w), STUMP)
    assert dH == pytest.approx(brute_force_stump_divergence(prob, w), abs=1e-9)


def test_divergence_lies_in_range(rng):
    prob = BalancingProblem(source=rng.normal(size=(40, 2)), target=rng.normal(loc=1.0, size=(50, 2)))
    for family in (LR, FamilySpec.kernel(), STUMP):
        assert 0.0 <= h_divergence(prob, WeightVector.uniform(40), family) <= 2.0


def test_kfold_divergence_does_not_reward_memorisation(rng):
    # a very narrow kernel memorises every training row
    narrow = FamilySpec.kernel(scale=0.01)
    prob = BalancingProblem(source=rng.normal(size=(60, 2)), target=rng.normal(size=(60, 2)))
    w = WeightVector.uniform(60)
    assert h_divergence(prob, w, narrow) > 1.5
    assert h_divergence(prob, w, narrow, mode=PredictionMode.kfold(5)) < 0.5

    report = build_report(prob, w, narrow, mode=PredictionMode.kfold(5))
    assert report.h_divergence == pytest.approx(h_divergence(prob, w, narrow, mode=PredictionMode.kfold(5)))


# ===========================================================
# VARIABILITY
# ===========================================================
def test_standardized_mean_difference_example():
    prob = BalancingProblem(source=[[0.0], [2.0]], target=[[1.0], [3.0]])
    smd = standardized_mean_difference(prob, WeightVector.uniform(2))
    np.testing.assert_allclose(smd.values, [-1.0 / math.sqrt(2.0)])
    assert not smd.degenerate.any()


def test_weighted_smd_can_reach_zero():
    prob = BalancingProblem(source=[[0.0], [2.0]], target=[[1.5], [1.5], [0.5], [2.5]])
    smd = standardized_mean_difference(prob, WeightVector([0.5, 1.5]))
    np.testing.assert_allclose(smd.values, [0.0], atol=1e-12)


def test_degenerate_coordinates_are_flagged():
    prob = BalancingProblem(
        source=[[1.0, 0.0, 4.0], [1.0, 1.0, 4.0]],
        target=[[1.0, 5.0, 6.0], [1.0, 7.0, 6.0]],
    )
    smd = standardized_mean_difference(prob, WeightVector.uniform(2))
    np.testing.assert_array_equal(smd.degenerate, [True, False, True])
    assert smd.values[0] == 0.0
    assert np.isfinite(smd.values[1])
    assert np.isnan(smd.values[2])


def test_weight_norm_and_ess_examples():
    uniform = WeightVector.uniform(4)
    point = WeightVector([4.0, 0.0, 0.0, 0.0])
    assert weight_sq_norm(uniform) == pytest.approx(0.25)
    assert effective_sample_size(uniform) == pytest.approx(4.0)
    assert weight_sq_norm(point) == pytest.approx(1.0)
    assert effective_sample_size(point) == pytest.approx(1.0)


def test_ess_is_reciprocal_of_weight_norm(rng):
    for _ in range(10):
        w = WeightVector.normalized(rng.exponential(size=25))
        assert effective_sample_size(w) * weight_sq_norm(w) == pytest.approx(1.0)
        assert 1.0 <= effective_sample_size(w) <= 25.0


# ===========================================================
# BOUND
# ===========================================================
def test_bound_example():
    n = 100
    assert theorem_bound(0.0, 1.0 / n, 1.0, 0.05) == pytest.approx(2.0 * math.sqrt(2.0 * math.log(40.0) / n))


def test_bound_is_linear_in_outcome_range():
    base = theorem_bound(0.3, 0.02, 1.0, 0.1)
    assert theorem_bound(0.3, 0.02, 5.0, 0.1) == pytest.approx(5.0 * base)


def test_bound_grows_with_divergence():
    assert theorem_bound(1.0, 0.02, 1.0, 0.1) - theorem_bound(0.0, 0.02, 1.0, 0.1) == pytest.approx(0.5)


@pytest.mark.parametrize(
    "dH, sq, M_Y, delta",
    [(-0.1, 0.1, 1.0, 0.05), (2.1, 0.1, 1.0, 0.05), (0.5, 0.0, 1.0, 0.05), (0.5, 1.5, 1.0, 0.05),
     (0.5, 0.1, 0.0, 0.05), (0.5, 0.1, 1.0, 0.0), (0.5, 0.1, 1.0, 1.0)],
)
def test_bound_rejects_out_of_range_inputs(dH, sq, M_Y, delta):
    with pytest.raises(InvalidInputError):
        theorem_bound(dH, sq, M_Y, delta)


# ===========================================================
# REPORT
# ===========================================================
def test_report_fields(rng):
    prob = BalancingProblem(source=rng.normal(size=(30, 2)), target=rng.normal(loc=0.3, size=(30, 2)))
    report = build_report(prob, WeightVector.uniform(30), LR, M_Y=2.0, delta=0.05)
    assert 0.0 <= report.h_divergence <= 2.0
    assert len(report.smd) == 2
    assert report.weight_sq_norm == pytest.approx(1.0 / 30)
    assert report.ess == pytest.approx(30.0)
    assert report.bound == pytest.approx(theorem_bound(report.h_divergence, 1.0 / 30, 2.0, 0.05))
    assert set(json.loads(report.model_dump_json())) == {"h_divergence", "smd", "weight_sq_norm", "ess", "bound"}


def test_report_without_outcome_bound_and_with_degenerate_column():
    prob = BalancingProblem(source=[[0.0, 1.0], [1.0, 1.0]], target=[[0.5, 2.0], [1.5, 2.0]])
    report = build_report(prob, WeightVector.uniform(2), STUMP)
    assert report.bound is None
    assert report.smd[1] is None
    assert report.smd[0] is not None


# ===========================================================
# BOUND COVERAGE
# ===========================================================
@pytest.mark.slow
def test_bound_holds_with_stated_probability():
    rng = np.random.default_rng(7)
    delta, n = 0.05, 200
    violations = 0
    for _ in range(500):
        S = rng.uniform(0.0, 1.0, size=(n, 1))
        T = rng.uniform(0.2, 1.0, size=(n, 1))
        y = rng.binomial(1, S[:, 0]).astype(float)
        w = WeightVector.uniform(n)
        prob = BalancingProblem(source=S, target=T)
        dH = h_divergence(prob, w, STUMP)
        error = abs(np.mean(y) - 0.6)
        violations += error > theorem_bound(dH, weight_sq_norm(w), 1.0, delta)
    assert violations / 500 <= delta

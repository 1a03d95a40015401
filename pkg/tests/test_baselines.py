import numpy as np
import pytest

from adversarial_balancing.baselines import (
    QpProblem,
    ipw_fit,
    ipw_weights,
    mmd_qp,
    mmd_squared,
    mmd_solve,
    mmd_weights,
    project_scaled_simplex,
    rbf_kernel_matrix,
    simplex_qp_solve,
)
from adversarial_balancing.benchgen import gen_circular, gen_kang_schafer
from adversarial_balancing.classifiers import FamilySpec
from adversarial_balancing.core import Dataset, Estimand, WeightVector, build_balancing_problem
from adversarial_balancing.core.problem import BalancingProblem
from adversarial_balancing.core.weights import weighted_outcome_estimate
from adversarial_balancing.exceptions import InvalidInputError
from adversarial_balancing.experiment import estimate_with
from adversarial_balancing.registry import MethodRegistry

LR = FamilySpec.logistic()
EPO1 = Estimand.expected_potential_outcome(1)


def simplex_grid(total: float, step: float) -> np.ndarray:
    ticks = np.arange(0.0, total + step / 2, step)
    grid = np.array([(a, b, total - a - b) for a in ticks for b in ticks if a + b <= total + 1e-12])
    return np.clip(grid, 0.0, None)


# ===========================================================
# RBF KERNEL
# ===========================================================
def test_rbf_diagonal_is_one(rng):
    A = rng.normal(size=(7, 3))
    np.testing.assert_array_equal(np.diag(rbf_kernel_matrix(A, A, 0.7)), 1.0)


def test_rbf_value_at_scale_sqrt_two():
    K = rbf_kernel_matrix([[0.0, 0.0]], [[2.0 * np.sqrt(2.0), 0.0]], 2.0)
    assert K[0, 0] == pytest.approx(np.exp(-1.0))


def test_rbf_wide_scale_tends_to_one(rng):
    A = rng.normal(size=(5, 2))
    assert rbf_kernel_matrix(A, A, 1e6).min() > 1 - 1e-9


def test_rbf_gram_is_psd(rng):
    A = rng.normal(size=(50, 3))
    K = rbf_kernel_matrix(A, A, 1.0)
    np.testing.assert_allclose(K, K.T)
    assert np.linalg.eigvalsh(K).min() >= -1e-8


def test_rbf_errors():
    with pytest.raises(InvalidInputError):
        rbf_kernel_matrix(np.zeros((2, 2)), np.zeros((2, 3)), 1.0)
    with pytest.raises(InvalidInputError):
        rbf_kernel_matrix(np.zeros((2, 2)), np.zeros((2, 2)), 0.0)


# ===========================================================
# SIMPLEX PROJECTION / QP
# ===========================================================
def test_projection_is_feasible(rng):
    for _ in range(20):
        w = project_scaled_simplex(rng.normal(scale=3.0, size=9))
        assert np.all(w >= 0)
        assert abs(w.mean() - 1.0) < 1e-12


def test_projection_matches_grid_oracle(rng):
    grid = simplex_grid(3.0, 0.01)
    for _ in range(5):
        x = rng.normal(scale=2.0, size=3)
        w = project_scaled_simplex(x)
        nearest = grid[np.argmin(np.sum((grid - x) ** 2, axis=1))]
        assert np.sum((w - x) ** 2) <= np.sum((nearest - x) ** 2) + 1e-12
        np.testing.assert_allclose(w, nearest, atol=0.02)


def test_projection_keeps_feasible_points(rng):
    w = rng.dirichlet(np.ones(4)) * 4
    np.testing.assert_allclose(project_scaled_simplex(w), w, atol=1e-12)


def test_identity_qp_gives_uniform():
    sol = simplex_qp_solve(QpProblem(np.eye(3), np.zeros(3)))
    assert sol.converged
    np.testing.assert_allclose(sol.weights.w, 1.0, atol=1e-8)


def test_diagonal_qp_closed_form():
    sol = simplex_qp_solve(QpProblem(np.diag([1.0, 100.0]), np.zeros(2)))
    np.testing.assert_allclose(sol.weights.w, [200 / 101, 2 / 101], atol=1e-6)


def test_random_qp_satisfies_kkt(rng):
    A = rng.normal(size=(4, 4))
    qp = QpProblem(A @ A.T + 0.1 * np.eye(4), rng.normal(scale=2.0, size=4))
    sol = simplex_qp_solve(qp, tol=1e-10)
    w = sol.weights.w
    g = qp.gradient(w)
    support = w > 1e-8
    level = g[support].mean()
    np.testing.assert_allclose(g[support], level, atol=1e-6)
    assert np.all(g[~support] >= level - 1e-6)


def test_qp_problem_validation():
    with pytest.raises(InvalidInputError):
        QpProblem(np.array([[1.0, 0.5], [0.0, 1.0]]), np.zeros(2))
    with pytest.raises(InvalidInputError):
        QpProblem(np.diag([1.0, -1.0]), np.zeros(2))
    with pytest.raises(InvalidInputError):
        QpProblem(np.eye(2), np.zeros(3))


# ===========================================================
# MMD
# ===========================================================
def test_mmd_identical_samples_gives_uniform(rng):
    S = rng.normal(size=(40, 2))
    w = mmd_weights(BalancingProblem(source=S, target=S.copy()))
    assert np.max(np.abs(w.w - 1.0)) < 1e-4


def test_mmd_matches_grid_oracle(rng):
    source = np.array([[0.0, 0.0], [2.0, 0.0], [0.0, 2.0]])
    target = rng.normal(loc=0.6, size=(6, 2))
    prob = BalancingProblem(source=source, target=target)
    sol = mmd_solve(prob)
    qp = mmd_qp(prob)
    grid = simplex_grid(3.0, 0.003)
    values = 0.5 * np.einsum("ij,jk,ik->i", grid, qp.Q, grid) + grid @ qp.c
    best = grid[np.argmin(values)]
    assert qp.objective(sol.weights.w) <= values.min() + 1e-9
    np.testing.assert_allclose(sol.weights.w, best, atol=1e-2)


def test_mmd_never_worse_than_uniform():
    ds = gen_circular(120, seed=5)
    prob = build_balancing_problem(ds, Estimand.ate(), 1)
    qp = mmd_qp(prob)
    w = mmd_weights(prob)
    assert qp.objective(w.w) <= qp.objective(np.ones(prob.n))


# ===========================================================
# IPW
# ===========================================================
def test_ipw_constant_covariate_gives_unit_weights():
    ds = Dataset(
        covariates=np.ones((12, 1)),
        treatment=[1, 0, 0, 1, 0, 1, 0, 0, 1, 0, 0, 1],
        outcome=np.arange(12.0),
        column_names=("x",),
    )
    for estimand, arm in ((EPO1, 1), (Estimand.ate(), 0), (Estimand.att(1), 0)):
        np.testing.assert_allclose(ipw_weights(ds, LR, estimand, arm).w, 1.0, atol=1e-12)


def test_ipw_weights_have_mean_one():
    ds = gen_kang_schafer(300, seed=2, transformed=True)
    w = ipw_weights(ds, LR, EPO1, 1)
    assert abs(w.w.mean() - 1.0) < 1e-9
    assert w.n == int(ds.treatment.sum())


def test_ipw_att_uses_odds():
    ds = gen_circular(200, seed=1)
    res = ipw_fit(ds, LR, Estimand.att(1), 0)
    p0 = res.propensity
    expected = WeightVector.normalized((1 - p0) / p0)
    np.testing.assert_allclose(res.weights.w, expected.w, rtol=1e-10)


def test_ipw_reports_positivity_violations():
    ds = Dataset(
        covariates=np.arange(10.0)[:, None],
        treatment=[1, 0, 0, 0, 0, 1, 1, 1, 1, 1],
        outcome=np.zeros(10),
        column_names=("x",),
    )
    res = ipw_fit(ds, FamilySpec.stump(), EPO1, 1)
    np.testing.assert_array_equal(res.positivity_violations, [0])
    assert np.all(np.isfinite(res.weights.w))


def test_ipw_missing_arm():
    ds = gen_circular(50, seed=0)
    with pytest.raises(InvalidInputError):
        ipw_weights(ds, LR, Estimand.expected_potential_outcome(2), 2)


@pytest.mark.slow
def test_ipw_kang_schafer_correctly_specified_is_centred():
    close = 0
    for seed in range(100):
        ds = gen_kang_schafer(2000, seed)
        estimate = weighted_outcome_estimate(ipw_weights(ds, LR, EPO1, 1), ds.outcome[ds.arm(1)])
        close += abs(estimate - 210.0) < 2.0
    assert close >= 80


@pytest.mark.slow
def test_ipw_bias_grows_under_transformed_covariates():
    plain, transformed = [], []
    for seed in range(100):
        for estimates, flag in ((plain, False), (transformed, True)):
            ds = gen_kang_schafer(2000, seed, transformed=flag)
            estimates.append(weighted_outcome_estimate(ipw_weights(ds, LR, EPO1, 1), ds.outcome[ds.arm(1)]))
    assert abs(np.mean(transformed) - 210.0) > abs(np.mean(plain) - 210.0)


@pytest.mark.slow
def test_mmd_beats_ipw_on_circular_benchmark():
    ipw, mmd = MethodRegistry.create("ipw:lr"), MethodRegistry.create("mmd_v1")
    wins = 0
    for seed in range(100):
        ds = gen_circular(1000, seed)
        ipw_error = abs(estimate_with(ipw, ds, Estimand.ate(), seed).estimate)
        mmd_error = abs(estimate_with(mmd, ds, Estimand.ate(), seed).estimate)
        wins += mmd_error < ipw_error
    assert wins >= 70


def test_mmd_squared_is_non_negative(rng):
    prob = BalancingProblem(source=rng.normal(size=(15, 2)), target=rng.normal(loc=0.5, size=(20, 2)))
    for w in (WeightVector.uniform(15), mmd_weights(prob), WeightVector.normalized(rng.uniform(size=15))):
        assert mmd_squared(prob, w) >= -1e-12
    assert mmd_squared(prob, mmd_weights(prob)) <= mmd_squared(prob, WeightVector.uniform(15)) + 1e-9

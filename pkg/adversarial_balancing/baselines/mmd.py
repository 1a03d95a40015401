# adversarial_balancing/baselines/mmd.py

import numpy as np

from adversarial_balancing.baselines.qp import QpProblem, QpSolution, simplex_qp_solve
from adversarial_balancing.core.kernels import rbf_kernel_matrix
from adversarial_balancing.core.problem import BalancingProblem
from adversarial_balancing.core.weights import WeightVector

DEFAULT_RIDGE = 1e-6


def mmd_qp(prob: BalancingProblem, scale: float = 1.0, ridge: float = DEFAULT_RIDGE) -> QpProblem:
    """
    Squared MMD between the reweighted source and the uniform target as a QP:
    (1/n^2) w'K_SS w - (2/(n n')) w'K_ST 1 + ridge ||w/n||^2.
    """
    n, n_prime = prob.n, prob.n_prime
    K_ss = rbf_kernel_matrix(prob.source, prob.source, scale)
    K_st = rbf_kernel_matrix(prob.source, prob.target, scale)
    Q = (2.0 / n**2) * (K_ss + ridge * np.eye(n))
    Q = 0.5 * (Q + Q.T)
    c = -(2.0 / (n * n_prime)) * K_st.sum(axis=1)
    return QpProblem(Q, c)


def mmd_solve(prob: BalancingProblem, scale: float = 1.0, ridge: float = DEFAULT_RIDGE,
              tol: float = 1e-8, max_iter: int = 10_000) -> QpSolution:
    return simplex_qp_solve(mmd_qp(prob, scale, ridge), WeightVector.uniform(prob.n), tol, max_iter)


def mmd_weights(prob: BalancingProblem, scale: float = 1.0, ridge: float = DEFAULT_RIDGE) -> WeightVector:
    """MMD-V1 weights: RBF sigma fixed to ``scale`` (1 by default)."""
    return mmd_solve(prob, scale, ridge).weights


def mmd_squared(prob: BalancingProblem, w: WeightVector, scale: float = 1.0) -> float:
    """Squared MMD of the weighted source against the target (no ridge)."""
    K_ss = rbf_kernel_matrix(prob.source, prob.source, scale)
    K_st = rbf_kernel_matrix(prob.source, prob.target, scale)
    K_tt = rbf_kernel_matrix(prob.target, prob.target, scale)
    u = w.w / prob.n
    v = np.full(prob.n_prime, 1.0 / prob.n_prime)
    return float(u @ K_ss @ u - 2.0 * u @ K_st @ v + v @ K_tt @ v)

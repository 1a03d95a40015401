# adversarial_balancing/baselines/qp.py

from dataclasses import dataclass

import numpy as np

from adversarial_balancing.core.weights import WeightVector
from adversarial_balancing.exceptions import InvalidInputError
from adversarial_balancing.shared.logger import ns_logger

logger = ns_logger("SimplexQP")

SYMMETRY_TOL = 1e-10
PSD_FLOOR = -1e-8
# eigenvalue check is O(n^3); larger Q come from kernel Gram matrices
PSD_CHECK_MAX_N = 500


@dataclass(frozen=True, eq=False)
class QpProblem:
    """min 1/2 w'Qw + c'w over {w >= 0, mean(w) = 1}."""

    Q: np.ndarray
    c: np.ndarray

    def __post_init__(self):
        Q = np.asarray(self.Q, dtype=float)
        c = np.asarray(self.c, dtype=float)
        if Q.ndim != 2 or Q.shape[0] != Q.shape[1] or c.shape != (Q.shape[0],):
            raise InvalidInputError("SimplexQP", "Q must be n x n and c length n", q_shape=Q.shape, c_shape=c.shape)
        if np.max(np.abs(Q - Q.T), initial=0.0) > SYMMETRY_TOL:
            raise InvalidInputError("SimplexQP", "Q is not symmetric")
        min_eig = float(np.linalg.eigvalsh(Q).min()) if Q.shape[0] <= PSD_CHECK_MAX_N else 0.0
        if min_eig < PSD_FLOOR:
            raise InvalidInputError("SimplexQP", "Q is not positive semidefinite", min_eigenvalue=min_eig)
        object.__setattr__(self, "Q", Q)
        object.__setattr__(self, "c", c)

    @property
    def n(self) -> int:
        return int(self.c.size)

    def objective(self, w) -> float:
        w = np.asarray(w, dtype=float)
        return float(0.5 * w @ self.Q @ w + self.c @ w)

    def gradient(self, w) -> np.ndarray:
        return self.Q @ np.asarray(w, dtype=float) + self.c


@dataclass(frozen=True, eq=False)
class QpSolution:
    weights: WeightVector
    converged: bool
    grad_map_norm: float
    n_iter: int
    objective: float


def project_scaled_simplex(x, total: float | None = None) -> np.ndarray:
    """
    Euclidean projection onto {w >= 0, sum w = total} (default total = n),
    by the sort-and-threshold rule.
    """
    x = np.asarray(x, dtype=float)
    total = float(x.size if total is None else total)
    u = np.sort(x)[::-1]
    css = np.cumsum(u) - total
    ind = np.arange(1, x.size + 1)
    rho = np.flatnonzero(u - css / ind > 0)[-1]
    theta = css[rho] / (rho + 1.0)
    w = np.maximum(x - theta, 0.0)
    return w * (total / w.sum())


def lipschitz_bound(Q: np.ndarray) -> float:
    """Gershgorin bound on the largest eigenvalue."""
    return float(np.max(np.sum(np.abs(Q), axis=1)))


def simplex_qp_solve(qp: QpProblem, init: WeightVector | None = None, tol: float = 1e-8, max_iter: int = 10_000) -> QpSolution:
    """
    Accelerated projected gradient with step 1/L on the mean-1 simplex.
    A momentum step that increases the objective is replaced by a plain
    projected-gradient step, so iterates never ascend.
    """
    n = qp.n
    x = np.asarray(init.w if init is not None else np.ones(n), dtype=float)
    L = lipschitz_bound(qp.Q)
    if L <= 0:
        return QpSolution(WeightVector.normalized(x), True, 0.0, 0, qp.objective(x))
    step = 1.0 / L

    y = x.copy()
    t = 1.0
    f_x = qp.objective(x)
    grad_map = np.inf
    it = 0
    for it in range(1, max_iter + 1):
        g_x = qp.gradient(x)
        grad_map = float(L * np.linalg.norm(x - project_scaled_simplex(x - step * g_x, n)))
        if grad_map <= tol:
            break

        x_new = project_scaled_simplex(y - step * qp.gradient(y), n)
        f_new = qp.objective(x_new)
        if f_new > f_x:
            # restart momentum
            x_new = project_scaled_simplex(x - step * g_x, n)
            f_new = qp.objective(x_new)
            t = 1.0
            y = x_new
        else:
            t_next = 0.5 * (1.0 + np.sqrt(1.0 + 4.0 * t * t))
            y = x_new + ((t - 1.0) / t_next) * (x_new - x)
            t = t_next
        x, f_x = x_new, f_new

    converged = grad_map <= tol
    if not converged:
        logger.warning(f"Not converged after {max_iter} iterations (gradient-mapping norm {grad_map:.3e})")
    return QpSolution(WeightVector.normalized(x), converged, grad_map, it, f_x)

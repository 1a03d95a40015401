from adversarial_balancing.baselines.ipw import IpwResult, ipw_fit, ipw_weights
from adversarial_balancing.baselines.mmd import mmd_qp, mmd_solve, mmd_squared, mmd_weights
from adversarial_balancing.baselines.qp import (
    QpProblem,
    QpSolution,
    project_scaled_simplex,
    simplex_qp_solve,
)
from adversarial_balancing.core.kernels import rbf_kernel_matrix

__all__ = [
    "IpwResult",
    "QpProblem",
    "QpSolution",
    "ipw_fit",
    "ipw_weights",
    "mmd_qp",
    "mmd_solve",
    "mmd_squared",
    "mmd_weights",
    "project_scaled_simplex",
    "rbf_kernel_matrix",
    "simplex_qp_solve",
]

# adversarial_balancing/core/kernels.py

import numpy as np
from scipy.spatial.distance import cdist

from adversarial_balancing.exceptions import InvalidInputError


def rbf_kernel_matrix(A, B, scale: float) -> np.ndarray:
    """K_ij = exp(-||a_i - b_j||^2 / (2 scale^2))."""
    A = np.atleast_2d(np.asarray(A, dtype=float))
    B = np.atleast_2d(np.asarray(B, dtype=float))
    if A.shape[1] != B.shape[1]:
        raise InvalidInputError("Kernel", "column counts differ", d_a=A.shape[1], d_b=B.shape[1])
    if not scale > 0:
        raise InvalidInputError("Kernel", "scale must be positive", scale=scale)
    sq = cdist(A, B, metric="sqeuclidean")
    return np.exp(-sq / (2.0 * scale * scale))

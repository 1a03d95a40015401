# adversarial_balancing/benchgen/circular.py

import numpy as np

from adversarial_balancing.benchgen.rng import RngStream
from adversarial_balancing.core.dataset import Dataset
from adversarial_balancing.exceptions import InvalidInputError

OUTCOME_SD = np.sqrt(3.0)


def circular_propensity(X: np.ndarray) -> np.ndarray:
    return 0.95 / (1.0 + (3.0 / np.sqrt(2.0)) * np.linalg.norm(X, axis=1))


def gen_circular(n: int, seed: int) -> Dataset:
    """
    X1, X2 ~ U[-1, 1]; radially decaying propensity; both potential outcomes
    drawn, the factual one emitted and both kept in the oracle.
    """
    if n < 10:
        raise InvalidInputError("Circular", "n must be at least 10", n=n)
    rng = RngStream(seed)
    X = 2.0 * rng.uniform(2 * n).reshape(n, 2) - 1.0
    p = circular_propensity(X)
    a = rng.bernoulli(p)
    sq = np.sum(X * X, axis=1)
    y0 = sq - X[:, 0] / 2.0 - X[:, 1] / 2.0 + OUTCOME_SD * rng.normal(n)
    y1 = sq + OUTCOME_SD * rng.normal(n)
    return Dataset(
        covariates=X,
        treatment=a,
        outcome=np.where(a == 1, y1, y0),
        column_names=("x1", "x2"),
        treatment_set=(0, 1),
        oracle={"y0": y0, "y1": y1, "propensity": p},
    )

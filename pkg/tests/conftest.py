import numpy as np
import pytest

from adversarial_balancing.core.dataset import Dataset


@pytest.fixture
def rng():
    return np.random.default_rng(0)


@pytest.fixture
def toy_dataset():
    """Ten rows, two covariates, four treated units with observed outcomes everywhere."""
    X = np.column_stack([np.arange(10, dtype=float), np.arange(10, dtype=float) % 3])
    a = np.array([0, 1, 0, 1, 0, 0, 1, 0, 1, 0])
    y = np.arange(10, dtype=float) * 2.0
    return Dataset(covariates=X, treatment=a, outcome=y, column_names=("x1", "x2"))


@pytest.fixture
def circles(rng):
    """Uniform square with class 1 inside a circle covering about half of it."""
    X = rng.uniform(-1.0, 1.0, size=(500, 2))
    labels = (np.linalg.norm(X, axis=1) < np.sqrt(2.0 / np.pi)).astype(int)
    return X, labels

# adversarial_balancing/core/weights.py

from dataclasses import dataclass

import numpy as np

from adversarial_balancing.exceptions import InvalidInputError

MEAN_TOLERANCE = 1e-9


def _readonly(a: np.ndarray) -> np.ndarray:
    a = np.array(a, dtype=float, copy=True)
    a.setflags(write=False)
    return a


@dataclass(frozen=True, eq=False)
class WeightVector:
    """
    Nonnegative weights over the n source units with mean exactly 1 (sum n).
    """

    w: np.ndarray

    def __post_init__(self):
        w = np.asarray(self.w, dtype=float)
        if w.ndim != 1 or w.size == 0:
            raise InvalidInputError("WeightVector", "weights must be a non-empty vector", shape=w.shape)
        if not np.all(np.isfinite(w)):
            raise InvalidInputError("WeightVector", "weights must be finite")
        if np.any(w < 0):
            raise InvalidInputError("WeightVector", "weights must be nonnegative", min=float(w.min()))
        mean = float(w.mean())
        if abs(mean - 1.0) > MEAN_TOLERANCE:
            raise InvalidInputError("WeightVector", "weights must have mean 1", mean=mean)
        object.__setattr__(self, "w", _readonly(w))

    @classmethod
    def uniform(cls, n: int) -> "WeightVector":
        return cls(np.ones(n))

    @classmethod
    def normalized(cls, raw) -> "WeightVector":
        """Rescale nonnegative raw weights to mean 1."""
        raw = np.asarray(raw, dtype=float)
        total = raw.sum()
        if not np.isfinite(total) or total <= 0:
            raise InvalidInputError("WeightVector", "cannot normalise weights with non-positive sum", total=float(total))
        return cls(raw * (raw.size / total))

    @property
    def n(self) -> int:
        return int(self.w.size)

    def __len__(self):
        return self.n

    def __array__(self, dtype=None, copy=None):
        return self.w if dtype is None else self.w.astype(dtype)


def weighted_outcome_estimate(w: WeightVector, y) -> float:
    """(1/n) sum w_i y_i under mean-1 weights."""
    y = np.asarray(y, dtype=float)
    weights = w.w if isinstance(w, WeightVector) else np.asarray(w, dtype=float)
    if y.shape != weights.shape:
        raise InvalidInputError(
            "Estimator", "weights and outcomes differ in length",
            n_weights=int(weights.size), n_outcomes=int(y.size),
        )
    if not np.all(np.isfinite(y)):
        raise InvalidInputError("Estimator", "outcomes must be finite (missing outcomes in the source arm?)")
    return float(np.dot(weights, y) / weights.size)

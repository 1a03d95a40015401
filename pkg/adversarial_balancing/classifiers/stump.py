# adversarial_balancing/classifiers/stump.py

import numpy as np


class ThresholdStump:
    """
    Exhaustive axis-aligned threshold family: h(x) = 1[x_j > t] and its
    inverse 1[x_j <= t], t ranging over -inf and every observed value.
    Closed under h -> 1 - h, so it is a symmetric family.
    """

    def __init__(self, feature: int = 0, threshold: float = -np.inf, inverted: bool = False):
        self.feature = feature
        self.threshold = threshold
        self.inverted = inverted

    def proba(self, theta, X):
        above = X[:, self.feature] > self.threshold
        return (~above if self.inverted else above).astype(float)

    @classmethod
    def fit(cls, X: np.ndarray, y: np.ndarray, w: np.ndarray) -> tuple["ThresholdStump", float]:
        """Minimise the weighted 0-1 error; ties keep the first candidate."""
        best = (np.inf, 0, -np.inf, False)
        total = float(w.sum())
        w0 = np.where(y == 0, w, 0.0)
        w1 = np.where(y == 1, w, 0.0)
        for j in range(X.shape[1]):
            order = np.argsort(X[:, j], kind="stable")
            xs = X[order, j]
            uniq, first = np.unique(xs, return_index=True)
            last = np.r_[first[1:], xs.size] - 1
            w0_le = np.cumsum(w0[order])[last]
            w1_le = np.cumsum(w1[order])[last]
            thresholds = np.r_[-np.inf, uniq]
            # predict 1 iff x > t
            err = np.r_[w0.sum(), (w0.sum() - w0_le) + w1_le]
            err_inv = total - err
            for errs, inverted in ((err, False), (err_inv, True)):
                k = int(np.argmin(errs))
                if errs[k] < best[0]:
                    best = (float(errs[k]), j, float(thresholds[k]), inverted)
        error, j, t, inverted = best
        return cls(j, t, inverted), error

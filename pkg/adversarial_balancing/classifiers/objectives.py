# adversarial_balancing/classifiers/objectives.py

"""
Weighted, L2-regularised log-loss objectives over a flat parameter vector.

Every objective returns J(theta) = (1/N) [ sum_i w_i l(z_i, y_i) + penalty(theta) ]
and its gradient, where z are logits, l(z, y) = log(1 + e^z) - y z and the
weights have mean 1.
"""

from abc import ABC, abstractmethod

import numpy as np
from scipy.special import expit

from adversarial_balancing.classifiers.family import FamilyKind, FamilySpec
from adversarial_balancing.core.kernels import rbf_kernel_matrix


def _weighted_logloss(z, y, w):
    return float(np.dot(w, np.logaddexp(0.0, z) - y * z))


class LogitObjective(ABC):
    """Structure of a fitted model: everything except the parameter vector."""

    n_params: int

    def features(self, X: np.ndarray) -> np.ndarray:
        return X

    @abstractmethod
    def initial(self, rng: np.random.Generator) -> np.ndarray: ...

    @abstractmethod
    def logits(self, theta: np.ndarray, F: np.ndarray) -> np.ndarray: ...

    @abstractmethod
    def loss_and_grad(self, theta, F, y, w) -> tuple[float, np.ndarray]: ...

    def proba(self, theta: np.ndarray, X: np.ndarray) -> np.ndarray:
        return expit(self.logits(theta, self.features(X)))


# ===========================================================
# LOGISTIC REGRESSION
# ===========================================================
class LinearLogit(LogitObjective):
    def __init__(self, d: int, lam: float):
        self.d = d
        self.lam = lam
        self.n_params = d + 1

    def initial(self, rng):
        return np.zeros(self.n_params)

    def logits(self, theta, F):
        return F @ theta[:-1] + theta[-1]

    def loss_and_grad(self, theta, F, y, w):
        N = F.shape[0]
        beta = theta[:-1]
        z = self.logits(theta, F)
        r = w * (expit(z) - y)
        value = _weighted_logloss(z, y, w) + 0.5 * self.lam * float(beta @ beta)
        grad = np.empty_like(theta)
        grad[:-1] = F.T @ r + self.lam * beta
        grad[-1] = r.sum()
        return value / N, grad / N


# ===========================================================
# RBF KERNEL LOGISTIC REGRESSION
# ===========================================================
class KernelLogit(LogitObjective):
    """f(x) = sum_j alpha_j k(x, z_j) + b over support points z_j."""

    def __init__(self, support: np.ndarray, scale: float, lam: float):
        self.support = support
        self.scale = scale
        self.lam = lam
        self.n_params = support.shape[0] + 1
        self.K_support = rbf_kernel_matrix(support, support, scale)

    def features(self, X):
        return rbf_kernel_matrix(X, self.support, self.scale)

    def initial(self, rng):
        return np.zeros(self.n_params)

    def logits(self, theta, F):
        return F @ theta[:-1] + theta[-1]

    def loss_and_grad(self, theta, F, y, w):
        N = F.shape[0]
        alpha = theta[:-1]
        z = self.logits(theta, F)
        r = w * (expit(z) - y)
        K_alpha = self.K_support @ alpha
        value = _weighted_logloss(z, y, w) + 0.5 * self.lam * float(alpha @ K_alpha)
        grad = np.empty_like(theta)
        grad[:-1] = F.T @ r + self.lam * K_alpha
        grad[-1] = r.sum()
        return value / N, grad / N


# ===========================================================
# MULTILAYER PERCEPTRON (ReLU hidden layers, width 2d)
# ===========================================================
class MlpLogit(LogitObjective):
    def __init__(self, d: int, depth: int, lam: float):
        width = 2 * d
        self.sizes = [d] + [width] * depth + [1]
        self.lam = lam
        self.shapes = []
        for fan_in, fan_out in zip(self.sizes[:-1], self.sizes[1:]):
            self.shapes.append(((fan_in, fan_out), (fan_out,)))
        self.n_params = sum(a * b + b for (a, b), _ in self.shapes)

    def unpack(self, theta):
        layers = []
        pos = 0
        for (fan_in, fan_out), _ in self.shapes:
            W = theta[pos:pos + fan_in * fan_out].reshape(fan_in, fan_out)
            pos += fan_in * fan_out
            b = theta[pos:pos + fan_out]
            pos += fan_out
            layers.append((W, b))
        return layers

    def initial(self, rng):
        parts = []
        for (fan_in, fan_out), _ in self.shapes:
            bound = 1.0 / np.sqrt(fan_in)
            parts.append(rng.uniform(-bound, bound, size=fan_in * fan_out))
            parts.append(rng.uniform(-bound, bound, size=fan_out))
        return np.concatenate(parts)

    def _forward(self, layers, F):
        activations = [F]
        pre = []
        a = F
        for W, b in layers[:-1]:
            z = a @ W + b
            pre.append(z)
            a = np.maximum(z, 0.0)
            activations.append(a)
        W, b = layers[-1]
        return (a @ W + b)[:, 0], activations, pre

    def logits(self, theta, F):
        return self._forward(self.unpack(theta), F)[0]

    def loss_and_grad(self, theta, F, y, w):
        N = F.shape[0]
        layers = self.unpack(theta)
        z, activations, pre = self._forward(layers, F)
        penalty = sum(float(np.sum(W * W)) for W, _ in layers)
        value = _weighted_logloss(z, y, w) + 0.5 * self.lam * penalty

        grads = []
        delta = (w * (expit(z) - y))[:, None]
        for layer in range(len(layers) - 1, -1, -1):
            W, _ = layers[layer]
            a_prev = activations[layer]
            grads.append((a_prev.T @ delta + self.lam * W, delta.sum(axis=0)))
            if layer > 0:
                delta = (delta @ W.T) * (pre[layer - 1] > 0)
        flat = []
        for gW, gb in reversed(grads):
            flat.append(gW.ravel())
            flat.append(gb)
        return value / N, np.concatenate(flat) / N


def build_objective(family: FamilySpec, X_std: np.ndarray, rng: np.random.Generator) -> LogitObjective:
    d = X_std.shape[1]
    if family.kind is FamilyKind.LOGISTIC:
        return LinearLogit(d, family.regularization)
    if family.kind is FamilyKind.MLP:
        return MlpLogit(d, family.depth, family.regularization)
    if family.kind is FamilyKind.KERNEL_RBF:
        scale = family.kernel_scale
        if scale is None:
            var = float(X_std.var())
            gamma = 1.0 / (d * var) if var > 0 else 1.0
            scale = float(np.sqrt(1.0 / (2.0 * gamma)))
        n = X_std.shape[0]
        if n > family.max_support:
            rows = np.sort(rng.choice(n, size=family.max_support, replace=False))
            support = X_std[rows]
        else:
            support = X_std
        return KernelLogit(np.array(support, copy=True), scale, family.regularization)
    raise ValueError(f"no logit objective for family kind {family.kind}")

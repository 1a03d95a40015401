# adversarial_balancing/benchgen/kang_schafer.py

import numpy as np
from scipy.special import expit

from adversarial_balancing.benchgen.rng import RngStream
from adversarial_balancing.core.dataset import Dataset
from adversarial_balancing.exceptions import InvalidInputError

INTERCEPT = 210.0
OUTCOME_COEF = np.array([27.4, 13.7, 13.7, 13.7])
PROPENSITY_COEF = np.array([-1.0, 0.5, -0.25, -0.1])
COLUMNS = ("x1", "x2", "x3", "x4")


def kang_schafer_propensity(Z: np.ndarray) -> np.ndarray:
    return expit(Z @ PROPENSITY_COEF)


def transform_covariates(Z: np.ndarray) -> np.ndarray:
    z1, z2, z3, z4 = Z.T
    return np.column_stack([
        np.exp(z1 / 2.0),
        z2 / (1.0 + np.exp(z1)) + 10.0,
        (z1 * z3 / 25.0 + 0.6) ** 3,
        (z2 + z4 + 20.0) ** 2,
    ])


def gen_kang_schafer(n: int, seed: int, transformed: bool = False) -> Dataset:
    """
    Four N(0,1) latent covariates, logistic treatment, linear outcome observed
    only for A = 1. Draw order (latents, noise, treatment uniforms) does not
    depend on ``transformed``, so both scenarios share A and Y for a seed.
    """
    if n < 10:
        raise InvalidInputError("KangSchafer", "n must be at least 10", n=n)
    rng = RngStream(seed)
    Z = rng.normal(4 * n).reshape(n, 4)
    eps = rng.normal(n)
    p = kang_schafer_propensity(Z)
    a = rng.bernoulli(p)
    y = INTERCEPT + Z @ OUTCOME_COEF + eps

    oracle = {f"z{j + 1}": Z[:, j] for j in range(4)}
    oracle["y_full"] = y
    oracle["propensity"] = p
    return Dataset(
        covariates=transform_covariates(Z) if transformed else Z,
        treatment=a,
        outcome=np.where(a == 1, y, np.nan),
        column_names=COLUMNS,
        treatment_set=(0, 1),
        oracle=oracle,
    )

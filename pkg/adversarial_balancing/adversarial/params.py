# adversarial_balancing/adversarial/params.py

from dataclasses import dataclass, field
from typing import Callable

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from adversarial_balancing.classifiers.family import CvSelect, FamilySpec
from adversarial_balancing.classifiers.selection import PredictionMode
from adversarial_balancing.core.losses import LossKind
from adversarial_balancing.exceptions import InvalidInputError


class DecaySchedule(BaseModel):
    """alpha_t = base / (1 + decay * t), t = 0, 1, ...  (decay = 0 gives a constant rate)."""

    model_config = ConfigDict(frozen=True)

    base: float = Field(default=1.0, gt=0)
    decay: float = Field(default=0.5, ge=0)

    def __call__(self, t: int) -> float:
        return self.base / (1.0 + self.decay * t)


class AdversarialParams(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    n_iter: int = Field(default=20, ge=1)
    loss: LossKind = LossKind.ZERO_ONE
    learning_rate: DecaySchedule | Callable[[int], float] = Field(default_factory=DecaySchedule)
    prediction_mode: PredictionMode = Field(default_factory=PredictionMode.train)
    family: FamilySpec | CvSelect = Field(default_factory=lambda: FamilySpec.logistic(name="lr"))
    seed: int = 0

    def alpha(self, t: int) -> float:
        a = float(self.learning_rate(t))
        if not (np.isfinite(a) and a > 0):
            raise InvalidInputError("Adversarial", "learning rate must be positive", t=t, alpha=a)
        return a


@dataclass
class AdversarialTrace:
    """
    Per-iteration record: two-term 0-1 discriminator loss L_n (fit on the
    weights entering the iteration), the weights leaving it, ||w/n||^2 of
    those weights and the divergence estimate 2 (1 - L_n).
    """

    losses: list[float] = field(default_factory=list)
    weights: list[np.ndarray] = field(default_factory=list)
    sq_norms: list[float] = field(default_factory=list)
    divergences: list[float] = field(default_factory=list)
    alphas: list[float] = field(default_factory=list)
    family: FamilySpec | None = None

    def record(self, loss: float, w: np.ndarray, alpha: float):
        n = w.size
        self.losses.append(float(loss))
        self.weights.append(np.array(w, copy=True))
        self.sq_norms.append(float(np.sum((w / n) ** 2)))
        self.divergences.append(2.0 * (1.0 - float(loss)))
        self.alphas.append(float(alpha))

    def __len__(self):
        return len(self.losses)

    def best_iteration(self) -> int:
        """Index of the lowest recorded divergence (earliest on ties)."""
        return int(np.argmin(self.divergences))

# adversarial_balancing/diagnostics/report.py

from pydantic import BaseModel, ConfigDict, Field

from adversarial_balancing.classifiers.family import FamilySpec
from adversarial_balancing.classifiers.selection import PredictionMode
from adversarial_balancing.core.problem import BalancingProblem
from adversarial_balancing.core.weights import WeightVector
from adversarial_balancing.diagnostics.bound import theorem_bound
from adversarial_balancing.diagnostics.divergence import h_divergence
from adversarial_balancing.diagnostics.variability import (
    effective_sample_size,
    standardized_mean_difference,
    weight_sq_norm,
)


class BalanceReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    h_divergence: float = Field(ge=0.0, le=2.0)
    smd: list[float | None]
    weight_sq_norm: float
    ess: float
    bound: float | None = None


def build_report(
    prob: BalancingProblem,
    w: WeightVector,
    family: FamilySpec,
    mode: PredictionMode | None = None,
    M_Y: float | None = None,
    delta: float = 0.05,
    seed: int = 0,
) -> BalanceReport:
    dH = h_divergence(prob, w, family, mode, seed=seed)
    sq = weight_sq_norm(w)
    smd = standardized_mean_difference(prob, w).values
    return BalanceReport(
        h_divergence=dH,
        smd=[None if v != v else float(v) for v in smd],
        weight_sq_norm=sq,
        ess=effective_sample_size(w),
        bound=theorem_bound(dH, sq, M_Y, delta) if M_Y is not None else None,
    )

# adversarial_balancing/baselines/ipw.py

from dataclasses import dataclass

import numpy as np

from adversarial_balancing.classifiers.family import CvSelect, FamilySpec
from adversarial_balancing.classifiers.model import fit, predict_proba
from adversarial_balancing.classifiers.selection import resolve_selection
from adversarial_balancing.core.dataset import Dataset
from adversarial_balancing.core.problem import Estimand
from adversarial_balancing.core.weights import WeightVector
from adversarial_balancing.exceptions import DegenerateProblemError, InvalidInputError
from adversarial_balancing.shared.logger import ns_logger

logger = ns_logger("IPW")

PROPENSITY_FLOOR = 1e-12


@dataclass(frozen=True, eq=False)
class IpwResult:
    weights: WeightVector
    source_rows: np.ndarray
    propensity: np.ndarray
    positivity_violations: np.ndarray


def ipw_fit(ds: Dataset, family: FamilySpec | CvSelect, estimand: Estimand, treatment_value: int, seed: int = 0) -> IpwResult:
    """
    Hajek-normalised inverse propensity weights for the units with
    A = treatment_value.

    EPO/ATE: w_i ∝ P(A=a) / P(A=a | x_i).
    ATT (control arm to reference arm): w_i ∝ P(A=ref | x_i) / P(A=a | x_i).
    """
    source_rows = ds.arm(treatment_value)
    if source_rows.size == 0:
        raise InvalidInputError("IPW", f"treatment value {treatment_value} not present")
    if source_rows.size < 2:
        raise DegenerateProblemError("IPW", "too few units in the source arm", n_source=int(source_rows.size))

    labels = (ds.treatment == treatment_value).astype(int)
    uniform = np.ones(ds.n_rows)
    family = resolve_selection(family, ds.covariates, labels, uniform, seed=seed)
    model = fit(family, ds.covariates, labels, uniform, seed=seed)
    p_a = predict_proba(model, ds.covariates[source_rows])

    if estimand.kind == "att":
        ref = estimand.reference_treatment
        if ref == treatment_value or ds.arm(ref).size == 0:
            raise InvalidInputError("IPW", "ATT needs a distinct, present reference arm", reference=ref)
        # binary treatment: P(A=ref | x) = 1 - P(A=a | x)
        numerator = 1.0 - p_a
        marginal = labels.mean() / (1.0 - labels.mean())
    else:
        numerator = np.ones_like(p_a)
        marginal = labels.mean()

    violations = source_rows[p_a <= PROPENSITY_FLOOR]
    if violations.size:
        logger.warning(
            f"Positivity violation: {violations.size} unit(s) with propensity <= {PROPENSITY_FLOOR}: "
            f"rows {violations[:20].tolist()}"
        )
    raw = marginal * numerator / np.maximum(p_a, PROPENSITY_FLOOR)
    return IpwResult(
        weights=WeightVector.normalized(raw),
        source_rows=source_rows,
        propensity=p_a,
        positivity_violations=violations,
    )


def ipw_weights(ds: Dataset, family: FamilySpec | CvSelect, estimand: Estimand, treatment_value: int, seed: int = 0) -> WeightVector:
    return ipw_fit(ds, family, estimand, treatment_value, seed).weights

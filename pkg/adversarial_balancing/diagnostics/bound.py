# adversarial_balancing/diagnostics/bound.py

import numpy as np

from adversarial_balancing.exceptions import InvalidInputError


def theorem_bound(dH: float, w_sq_norm: float, M_Y: float, delta: float) -> float:
    """
    High-probability (1 - delta) bound on the estimation error for outcomes
    bounded by M_Y: (M_Y / 2) d_H + 2 M_Y sqrt(2 ||w/n||^2 ln(2/delta)).
    """
    if not 0.0 <= dH <= 2.0:
        raise InvalidInputError("Bound", "dH must lie in [0, 2]", dH=dH)
    if not 0.0 < w_sq_norm <= 1.0:
        raise InvalidInputError("Bound", "||w/n||^2 must lie in (0, 1]", w_sq_norm=w_sq_norm)
    if not M_Y > 0:
        raise InvalidInputError("Bound", "M_Y must be positive", M_Y=M_Y)
    if not 0.0 < delta < 1.0:
        raise InvalidInputError("Bound", "delta must lie in (0, 1)", delta=delta)
    return float(0.5 * M_Y * dH + 2.0 * M_Y * np.sqrt(2.0 * w_sq_norm * np.log(2.0 / delta)))

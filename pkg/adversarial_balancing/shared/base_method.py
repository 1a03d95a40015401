# adversarial_balancing/shared/base_method.py

from adversarial_balancing.core.dataset import Dataset
from adversarial_balancing.core.problem import BalancingProblem, Estimand, build_balancing_problem
from adversarial_balancing.core.weights import WeightVector


class BaseWeightingMethod:
    """
    Base class for every weighting method the experiment runner and CLI can use.
    Provides:
    - Registry metadata (public/command name)
    - Optional classifier family argument (``name:family`` in configs)
    - Per-instance configuration
    """

    # Human-friendly name (for tables)
    public_name: str = None

    # Unique name used in configs and on the command line
    command_name: str = None

    # Whether ``name:family`` is accepted / required
    accepts_family: bool = False
    default_family: str | None = None

    def __init__(self, family: str | None = None, **config):
        self.family = family or self.default_family
        self.config = config or {}

    @property
    def label(self) -> str:
        if self.accepts_family and self.family:
            return f"{self.command_name}:{self.family}"
        return self.command_name

    # ---------- WEIGHTS ----------
    def compute_weights(self, ds: Dataset, estimand: Estimand, treatment_value: int, seed: int = 0) -> WeightVector:
        """
        Weights (mean 1) over the units with A = treatment_value that balance
        them toward the estimand's target population.
        """
        raise NotImplementedError("Weighting methods must implement `compute_weights`.")

    # ---------- HELPER ----------
    @staticmethod
    def problem(ds: Dataset, estimand: Estimand, treatment_value: int) -> BalancingProblem:
        return build_balancing_problem(ds, estimand, treatment_value)

    def __repr__(self):
        return f"<{self.__class__.__name__} {self.label}>"

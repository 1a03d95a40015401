# adversarial_balancing/registry/builtin.py

from adversarial_balancing.adversarial.balance import adversarial_balance
from adversarial_balancing.adversarial.params import AdversarialParams
from adversarial_balancing.baselines.ipw import ipw_weights
from adversarial_balancing.baselines.mmd import DEFAULT_RIDGE, mmd_weights
from adversarial_balancing.classifiers.family import resolve_family
from adversarial_balancing.classifiers.selection import PredictionMode
from adversarial_balancing.core.losses import LossKind
from adversarial_balancing.core.weights import WeightVector
from adversarial_balancing.decorators.weighting_method import WeightingMethod
from adversarial_balancing.shared.base_method import BaseWeightingMethod


@WeightingMethod("unweighted")
class UnweightedMethod(BaseWeightingMethod):
    public_name = "Unweighted"

    def compute_weights(self, ds, estimand, treatment_value, seed=0):
        return WeightVector.uniform(self.problem(ds, estimand, treatment_value).n)


@WeightingMethod("ipw")
class IpwMethod(BaseWeightingMethod):
    public_name = "IPW"
    accepts_family = True
    default_family = "lr"

    def compute_weights(self, ds, estimand, treatment_value, seed=0):
        # validates arm sizes the same way as the other methods
        self.problem(ds, estimand, treatment_value)
        return ipw_weights(ds, resolve_family(self.family), estimand, treatment_value, seed=seed)


@WeightingMethod("mmd_v1")
class MmdMethod(BaseWeightingMethod):
    public_name = "MMD-V1"

    def compute_weights(self, ds, estimand, treatment_value, seed=0):
        return mmd_weights(
            self.problem(ds, estimand, treatment_value),
            scale=self.config.get("scale", 1.0),
            ridge=self.config.get("ridge", DEFAULT_RIDGE),
        )


@WeightingMethod("adversarial")
class AdversarialMethod(BaseWeightingMethod):
    public_name = "Adversarial"
    accepts_family = True
    default_family = "lr"

    def params(self, seed: int) -> AdversarialParams:
        k = self.config.get("kfold")
        return AdversarialParams(
            n_iter=self.config.get("n_iter", 20),
            loss=LossKind(self.config.get("loss", LossKind.ZERO_ONE)),
            prediction_mode=PredictionMode.kfold(k) if k else PredictionMode.train(),
            family=resolve_family(self.family),
            seed=seed,
        )

    def compute_weights(self, ds, estimand, treatment_value, seed=0):
        weights, _ = adversarial_balance(self.problem(ds, estimand, treatment_value), self.params(seed))
        return weights

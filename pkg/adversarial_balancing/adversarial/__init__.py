from adversarial_balancing.adversarial.balance import (
    adversarial_balance,
    augment_labeled_dataset,
    exp_gradient_step,
    two_term_zero_one_loss,
)
from adversarial_balancing.adversarial.params import AdversarialParams, AdversarialTrace, DecaySchedule

__all__ = [
    "AdversarialParams",
    "AdversarialTrace",
    "DecaySchedule",
    "adversarial_balance",
    "augment_labeled_dataset",
    "exp_gradient_step",
    "two_term_zero_one_loss",
]

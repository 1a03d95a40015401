from adversarial_balancing.benchgen.circular import circular_propensity, gen_circular
from adversarial_balancing.benchgen.kang_schafer import (
    gen_kang_schafer,
    kang_schafer_propensity,
    transform_covariates,
)
from adversarial_balancing.benchgen.rng import RngStream
from adversarial_balancing.benchgen.truth import SIZE_PRESETS, BenchmarkTruth, true_values

__all__ = [
    "SIZE_PRESETS",
    "BenchmarkTruth",
    "RngStream",
    "circular_propensity",
    "gen_circular",
    "gen_kang_schafer",
    "kang_schafer_propensity",
    "transform_covariates",
    "true_values",
]

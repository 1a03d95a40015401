# adversarial_balancing/benchgen/truth.py

from pydantic import BaseModel, ConfigDict

from adversarial_balancing.core.problem import Estimand
from adversarial_balancing.exceptions import InvalidInputError

SIZE_PRESETS = (200, 500, 1000, 2000, 5000)


class BenchmarkTruth(BaseModel):
    model_config = ConfigDict(frozen=True)

    name: str
    true_value: float
    estimand: Estimand


_TRUTHS = {
    "kang_schafer": BenchmarkTruth(
        name="kang_schafer", true_value=210.0, estimand=Estimand.expected_potential_outcome(1)
    ),
    "circular": BenchmarkTruth(name="circular", true_value=0.0, estimand=Estimand.ate()),
}


def true_values(benchmark_name: str) -> BenchmarkTruth:
    if benchmark_name not in _TRUTHS:
        raise InvalidInputError("Benchmarks", f"unknown benchmark '{benchmark_name}'", known=sorted(_TRUTHS))
    return _TRUTHS[benchmark_name]

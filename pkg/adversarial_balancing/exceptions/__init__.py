from adversarial_balancing.exceptions.balancing_exception import (
    BalancingException,
    BalancingRuntimeException,
    ConfigError,
    DatasetParseError,
    DegenerateLabelsError,
    DegenerateProblemError,
    InvalidInputError,
)

__all__ = [
    "BalancingException",
    "BalancingRuntimeException",
    "ConfigError",
    "DatasetParseError",
    "DegenerateLabelsError",
    "DegenerateProblemError",
    "InvalidInputError",
]

# adversarial_balancing/decorators/weighting_method.py

from adversarial_balancing.registry.method import MethodRegistry


def WeightingMethod(name: str):
    """
    Decorator factory that registers a ``BaseWeightingMethod`` subclass under
    ``name`` so configs and the CLI can refer to it.

    Example
    -------
    @WeightingMethod("trimmed_ipw")
    class TrimmedIpw(BaseWeightingMethod):
        ...
    """
    def decorator(cls):
        MethodRegistry.register(name, cls)
        return cls
    return decorator

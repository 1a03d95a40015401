from adversarial_balancing.registry.method import MethodRegistry
__all__ = ["MethodRegistry"]

from adversarial_balancing.utils.import_string import import_string
__all__ = ["import_string"]

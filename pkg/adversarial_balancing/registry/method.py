# adversarial_balancing/registry/method.py

from adversarial_balancing.exceptions import ConfigError
from adversarial_balancing.shared.base_method import BaseWeightingMethod
from adversarial_balancing.shared.logger import ns_logger
from adversarial_balancing.utils import import_string

logger = ns_logger("MethodRegistry")


class MethodRegistry:
    """
    Name -> weighting-method class registry.

    Methods are registered with ``@WeightingMethod("name")`` and instantiated
    from spec strings ``name`` or ``name:family``. A name containing a dot is
    treated as the import path of a ``BaseWeightingMethod`` subclass.
    """

    _methods: dict[str, type[BaseWeightingMethod]] = {}
    _builtins_loaded = False

    @classmethod
    def _load_builtins(cls):
        if not cls._builtins_loaded:
            cls._builtins_loaded = True
            import adversarial_balancing.registry.builtin  # noqa: F401

    @classmethod
    def register(cls, name: str, method_cls: type[BaseWeightingMethod]):
        if not issubclass(method_cls, BaseWeightingMethod):
            raise ConfigError("MethodRegistry", f"{method_cls!r} must derive from BaseWeightingMethod")
        existing = cls._methods.get(name)
        if existing is not None and existing is not method_cls:
            raise ConfigError(
                "MethodRegistry", f"method name '{name}' already registered by {existing.__name__}"
            )
        method_cls.command_name = name
        cls._methods[name] = method_cls

    @classmethod
    def names(cls) -> list[str]:
        cls._load_builtins()
        return sorted(cls._methods)

    @classmethod
    def resolve(cls, name: str) -> type[BaseWeightingMethod]:
        cls._load_builtins()
        if name in cls._methods:
            return cls._methods[name]
        if "." in name:
            method_cls = import_string(name)
            if not (isinstance(method_cls, type) and issubclass(method_cls, BaseWeightingMethod)):
                raise ConfigError("MethodRegistry", f"'{name}' is not a BaseWeightingMethod subclass")
            if method_cls.command_name is None:
                method_cls.command_name = name
            return method_cls
        raise ConfigError("MethodRegistry", f"unknown method '{name}'", known=cls.names())

    @classmethod
    def create(cls, spec: str, **config) -> BaseWeightingMethod:
        """Instantiate from ``name`` or ``name:family``."""
        name, _, family = spec.strip().partition(":")
        method_cls = cls.resolve(name)
        if family and not method_cls.accepts_family:
            raise ConfigError("MethodRegistry", f"method '{name}' takes no classifier family", spec=spec)
        instance = method_cls(family=family or None, **config)
        logger.debug(f"Created method {instance.label}")
        return instance

import importlib

from adversarial_balancing.exceptions import ConfigError


def import_string(path: str):
    """Resolve ``package.module.Name`` to the named attribute."""
    if "." not in path:
        raise ConfigError("Registry", f"'{path}' is not a dotted import path")
    module_path, class_name = path.rsplit(".", 1)
    try:
        module = importlib.import_module(module_path)
        return getattr(module, class_name)
    except (ImportError, AttributeError) as e:
        raise ConfigError("Registry", f"Cannot import '{path}'", cause=e) from e

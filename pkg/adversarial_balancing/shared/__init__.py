from .logger import logger, ns_logger  # noqa: F401
from .settings import BalancingSettings, get_settings  # noqa: F401
__all__ = ["BalancingSettings", "get_settings", "logger", "ns_logger"]

import logging
import os
import time
from datetime import datetime

from adversarial_balancing.shared.settings import get_settings

LOGGER_NAME = "AdversarialBalancing"

RESET = "\033[0m"
GREY = "\033[37m"
GREEN = "\033[32m"
COLORS = {
    "DEBUG": GREY,
    "INFO": "\033[36m",
    "WARNING": "\033[33m",
    "ERROR": "\033[31m",
    "CRITICAL": "\033[41m",
    "SUCCESS": GREEN,
}


# ======================================================
#  Elapsed-time stamp (ms since the previous record)
# ======================================================
class ElapsedFilter(logging.Filter):
    def __init__(self):
        super().__init__()
        self._last = time.perf_counter()

    def filter(self, record):
        now = time.perf_counter()
        record.delta = round((now - self._last) * 1000, 3)
        self._last = now
        return True


# ======================================================
#  Formatter: [pid] - time  LEVEL [namespace] message +Nms
# ======================================================
class NamespaceFormatter(logging.Formatter):
    def format(self, record):
        stamp = datetime.fromtimestamp(record.created).strftime("%m/%d/%Y, %I:%M:%S %p")
        namespace = getattr(record, "ns", None) or f"{record.filename}:{record.lineno}"
        color = COLORS.get(record.levelname, RESET)

        line = (
            f"{GREY}[{os.getpid()}]{RESET} - "
            f"{GREY}{stamp}{RESET}  "
            f"{color}{record.levelname}{RESET} "
            f"{GREEN}[{namespace}]{RESET} "
            f"{color}{record.getMessage()}{RESET}"
        )
        delta = getattr(record, "delta", None)
        if delta is not None:
            line += f" {GREY}+{delta}ms{RESET}"
        if record.exc_info:
            line += "\n" + self.formatException(record.exc_info)
        return line


# ======================================================
#  Setup
# ======================================================
def setup_logging(level: str | None = None) -> logging.Logger:
    # stderr: stdout carries CLI data (reports, tables)
    handler = logging.StreamHandler()
    handler.setFormatter(NamespaceFormatter())
    handler.addFilter(ElapsedFilter())

    app_logger = logging.getLogger(LOGGER_NAME)
    app_logger.setLevel((level or get_settings().log_level).upper())
    app_logger.handlers = [handler]
    app_logger.propagate = False
    return app_logger


logger = setup_logging()


def set_level(level: str):
    logger.setLevel(level.upper())


# ======================================================
#  Namespaced logger
# ======================================================
class NamespaceAdapter(logging.LoggerAdapter):
    def process(self, msg, kwargs):
        kwargs["extra"] = {**kwargs.get("extra", {}), "ns": self.extra["ns"]}
        return msg, kwargs


def ns_logger(namespace: str) -> NamespaceAdapter:
    """
    ns_logger("Adversarial").info("Hello")
    -> INFO [Adversarial] Hello
    """
    return NamespaceAdapter(logger, {"ns": namespace})

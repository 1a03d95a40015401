def _compose(component: str, message: str, cause: Exception | None, context: dict) -> str:
    text = f"[{component}] {message}"
    if cause is not None:
        text += f" | Cause: {cause!r}"
    if context:
        text += f" | Context: {context}"
    return text


class BalancingException(Exception):
    """
    Base exception for every failure raised by the library.
    Carries: component, message, the original cause and free-form context
    (row/column coordinates, offending sizes, ...).
    """

    def __init__(
        self,
        component: str,
        message: str = "Balancing error occurred",
        cause: Exception | None = None,
        **context
    ):
        self.component = component
        self.message = message
        self.cause = cause
        self.context = context
        super().__init__(_compose(component, message, cause, context))


class InvalidInputError(BalancingException, ValueError):
    """Non-finite values, shape mismatches, out-of-range parameters."""


class DegenerateProblemError(BalancingException):
    """Too few source/target rows to define a balancing problem."""


class DegenerateLabelsError(BalancingException):
    """Training labels that cannot support a binary discriminator."""


class DatasetParseError(BalancingException):
    """Unparseable or missing CSV cell; context carries ``row`` and ``column``."""


class ConfigError(BalancingException):
    """Invalid experiment or CLI configuration."""


class BalancingRuntimeException(RuntimeError):
    """
    Fatal internal failure: non-finite losses inside the adversarial loop,
    result files that cannot be written.
    """

    def __init__(
        self,
        component: str,
        message: str = "Balancing runtime error occurred",
        cause: Exception | None = None,
        **context
    ):
        self.component = component
        self.message = message
        self.cause = cause
        self.context = context
        super().__init__(_compose(component, message, cause, context))

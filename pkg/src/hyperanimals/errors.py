"""Exception hierarchy shared by all modules."""

import os

DEFAULT_BUDGET = 10**7


class HyperAnimalsError(Exception):
    pass


class FieldMismatchError(HyperAnimalsError, ValueError):
    """Two quadratic numbers from different fields were combined."""


class InvalidSignatureError(HyperAnimalsError, ValueError):
    pass


class UnsupportedClassError(HyperAnimalsError, ValueError):
    """Operation is not defined for this tessellation class (e.g. spherical)."""


class DomainError(HyperAnimalsError, ValueError):
    pass


class BudgetExceededError(HyperAnimalsError, RuntimeError):
    """A symbol or node budget was exhausted.

    ``best`` carries whatever partial result the caller had when the budget
    ran out (``None`` if nothing useful).
    """

    def __init__(self, message, best=None):
        super().__init__(message)
        self.best = best


class PartialLayerError(HyperAnimalsError):
    """Raised when a layer-only quantity is requested mid-layer.

    The computed value is attached as ``word`` so callers may still inspect it.
    """

    def __init__(self, message, word=None):
        super().__init__(message)
        self.word = word


class InvalidContinuedFractionError(HyperAnimalsError, ValueError):
    pass


def budget(default=DEFAULT_BUDGET):
    """Symbol/node budget, overridable through ``HYPER_BUDGET``."""
    raw = os.environ.get("HYPER_BUDGET")
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw)
    except ValueError as exc:
        raise ValueError(f"HYPER_BUDGET must be an integer, got {raw!r}") from exc
    if value <= 0:
        raise ValueError("HYPER_BUDGET must be positive")
    return value

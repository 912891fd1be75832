"""Exception types shared across the package."""


class LocalModelsError(Exception):
    pass


class SizeMismatch(LocalModelsError, ValueError):
    """Two partitions that must have equal size do not."""


class RangeError(LocalModelsError, ValueError):
    """An integer parameter lies outside the admissible range."""


class ContextMismatch(LocalModelsError, TypeError):
    """Polynomials or ideals from incompatible rings were combined."""


class NotNilpotent(LocalModelsError, ValueError):
    pass


class DistinctnessError(LocalModelsError, ValueError):
    """Eigenvalue data collides in the chosen coefficient field."""


class ResourceLimit(LocalModelsError, RuntimeError):
    """A configured work budget was exhausted.

    ``budget`` names the limit that was hit and ``used`` how much work had
    been done when it tripped.
    """

    def __init__(self, message, budget=None, used=None):
        super().__init__(message)
        self.budget = budget
        self.used = used


class BudgetExceeded(ResourceLimit):
    """An enumeration would exceed its size budget; ``estimate`` is the predicted size."""

    def __init__(self, message, budget=None, estimate=None):
        super().__init__(message, budget=budget, used=estimate)
        self.estimate = estimate

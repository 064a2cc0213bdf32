"""Exception types shared across the package."""


class InputError(ValueError):
    """Malformed or out-of-contract input."""


class BudgetExceededError(RuntimeError):
    """An enumeration would exceed its configured budget; never truncated silently."""

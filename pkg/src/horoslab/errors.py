"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the domain where a formula or inversion is defined."""


class ConvergenceError(RuntimeError):
    """A numerical routine failed to reach its tolerance within its iteration budget."""

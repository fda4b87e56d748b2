"""Exception hierarchy shared by all modules."""


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class ValidationError(ValueError):
    """Input data violates a structural invariant (prime set, matrix, ...)."""


class DimensionError(ValueError):
    """Two objects that must share a dimension do not."""


class LimitError(RuntimeError):
    """A configured size limit (brute force, sieve, enumeration) was exceeded."""


class BudgetError(LimitError):
    """An exhaustive scan would exceed the configured subset budget."""

    def __init__(self, required, budget):
        super().__init__(f"scan needs {required} subsets, budget is {budget}")
        self.required = required
        self.budget = budget


class NotEvenError(ValueError):
    """The graph has an odd-degree vertex, so it has no Euler decomposition."""

    def __init__(self, vertex, degree):
        super().__init__(f"vertex {vertex} has odd degree {degree}")
        self.vertex = vertex
        self.degree = degree


class InternalError(RuntimeError):
    """Two computations that must agree did not; indicates a bug."""

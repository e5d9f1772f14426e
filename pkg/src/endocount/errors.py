"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the domain of an operation."""


class ConsistencyError(ArithmeticError):
    """An exact identity that must hold did not (signals an arithmetic bug)."""


class BudgetExceeded(RuntimeError):
    """A brute-force enumeration would exceed its configured work budget."""

    def __init__(self, what, size, budget):
        self.what = what
        self.size = size
        self.budget = budget
        super().__init__(
            f"{what}: required work {size} exceeds oracle budget {budget} "
            f"(raise it with budget=... or ENDOCOUNT_ORACLE_BUDGET)"
        )

"""Exception types shared across the package."""


class DegreeMismatch(ValueError):
    """Raised when combining transformations or wreath elements of different degrees."""

    def __init__(self, left, right):
        self.left = left
        self.right = right
        super().__init__(f"degree mismatch: {left} vs {right}")


class CapacityError(RuntimeError):
    """A computation exceeded its configured budget.

    ``count`` holds the partial count reached (elements enumerated, subsets
    searched, ...) when the budget ran out.
    """

    def __init__(self, message, count=None):
        self.count = count
        super().__init__(message if count is None else f"{message} (reached {count})")


class MonoidValidationError(ValueError):
    """A raw Cayley table failed validation; ``witness`` names the offending data."""

    def __init__(self, message, witness=None):
        self.witness = witness
        super().__init__(message)


class ActionError(ValueError):
    """A semigroup action violated one of its axioms."""

    def __init__(self, axiom, witness):
        self.axiom = axiom
        self.witness = witness
        super().__init__(f"action axiom {axiom} fails at {witness}")


class PreconditionError(ValueError):
    """A theorem hypothesis required by an operation does not hold."""

    def __init__(self, message, witness=None):
        self.witness = witness
        super().__init__(message)


class ForeignElementError(ValueError):
    """An element was passed that does not belong to the expected carrier."""

"""Exception types shared across the package."""


class InvalidIndexError(ValueError):
    """A partition index is outside the set it is required to belong to."""


class ArgumentOrderError(ValueError):
    """Arguments were given in an order the operation does not accept."""


class InvalidDegreeError(ValueError):
    """A special-class degree is out of range."""


class InadmissibleQueryError(ValueError):
    """A Gromov-Witten query fails the degree (grading) condition.

    Distinct from an admissible query whose invariant happens to vanish.
    """


class InvariantViolation(ArithmeticError):
    """An exact computation produced a result that is mathematically impossible.

    Raised for things like a non-exact divided difference or an unsolvable
    basis expansion; it always signals an implementation bug.
    """

"""Exception hierarchy."""


class NewtonBifError(Exception):
    pass


class ParseError(NewtonBifError, ValueError):
    """Malformed expression; ``offset`` is the byte offset of the offending token."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at byte {offset})")
        self.message = message
        self.offset = offset


class BudgetExceededError(NewtonBifError):
    """A configured work limit was hit.  ``context`` names the task that hit it."""

    def __init__(self, message: str, context: str | None = None):
        super().__init__(message if context is None else f"{message} [{context}]")
        self.message = message
        self.context = context

    def with_context(self, context: str) -> "BudgetExceededError":
        return BudgetExceededError(self.message, context)


class ZeroRestrictionError(NewtonBifError, ValueError):
    """The polynomial vanishes identically on the requested coordinate subspace."""


class SizeLimitError(NewtonBifError, ValueError):
    """Instance too large for brute-force face enumeration."""


class NonFiniteValueSetError(NewtonBifError):
    """An elimination that should yield finitely many values produced the zero ideal."""


class NonConvergenceError(NewtonBifError):
    def __init__(self, message: str, residual: float):
        super().__init__(f"{message} (residual {residual:.3e})")
        self.message = message
        self.residual = residual


class ConstraintViolationError(NewtonBifError, ValueError):
    """A probe point does not lie on the constraint set."""


class NonconstantFamilyError(NewtonBifError, ValueError):
    """A family member is constant on S, so it cannot be dominant."""

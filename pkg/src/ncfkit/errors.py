"""Exception types shared across the package."""


class NcfKitError(Exception):
    """Base class for all package-specific errors."""


class ZeroInverse(NcfKitError):
    """Raised when asked to invert 0 in a prime field."""


class ArityMismatch(NcfKitError):
    """Point, table, or polynomial arity differs from the expected n."""


class BadVariable(NcfKitError):
    """Variable index outside 1..n."""


class BadExponent(NcfKitError):
    """Exponent outside 0..p-1."""


class InvalidDescriptor(NcfKitError):
    """Descriptor violates a structural requirement."""


class DegenerateDescriptor(NcfKitError):
    """Descriptor with equal last two outputs; the coefficient relations
    divide by b_{n+1} - b_n and are meaningless in that case."""


class BadArity(NcfKitError):
    """Arity outside the domain of a counting formula."""


class BudgetExceeded(NcfKitError):
    """A sweep would exceed its budget.

    Carries the exact required size so callers can decide whether to retry
    with a larger budget.
    """

    def __init__(self, required: int, budget: int, what: str = "items"):
        super().__init__(f"sweep needs {required} {what}, budget is {budget}")
        self.required = required
        self.budget = budget


class ParseError(NcfKitError):
    """Malformed input text; carries a 1-based line and column."""

    def __init__(self, line: int, column: int, message: str):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column

"""Exception types shared across the package."""


class BlowupColoringError(Exception):
    """Base class for all errors raised by this package."""


class InvalidParameterError(BlowupColoringError, ValueError):
    """An argument violates an operation's precondition."""


class InvalidWitnessError(InvalidParameterError):
    """A list-coloring witness fails its structural requirements."""


class ParseError(BlowupColoringError, ValueError):
    """A graph, coloring, list, witness or partition file is malformed."""


class SearchInvariantError(BlowupColoringError, RuntimeError):
    """A search that is guaranteed to succeed came back empty (a bug signal)."""


class BudgetExhaustedError(BlowupColoringError, RuntimeError):
    """A search budget ran out inside an operation that must return a value."""

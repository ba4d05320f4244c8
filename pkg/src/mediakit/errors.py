"""Exception types shared across the package."""


class InputError(ValueError):
    """A malformed object, unknown label, or violated precondition."""


class EnumerationLimitError(RuntimeError):
    """An enumeration exceeded its hard cap before completing."""


class EmptyReductionError(InputError):
    """A reduction produced no tokens, so the result is not a token system."""

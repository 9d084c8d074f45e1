"""Exception types shared across the package."""


class BraidinvError(Exception):
    """Base class for all package-specific errors."""


class InputError(BraidinvError, ValueError):
    """Malformed input: bad shapes, unknown names, out-of-range labels."""


class ZeroObjectError(InputError):
    """A trace-like operation received the zero object."""


class NumericalError(BraidinvError, ArithmeticError):
    """Numerical failure: non-convergence, singular blocks, division hazards."""


class ResourceLimitError(BraidinvError, RuntimeError):
    """An enumeration or search exceeded its configured candidate cap."""


class CategoryFileError(InputError):
    """A category or functor file failed to parse or validate.

    Carries per-field diagnostics in ``problems``.
    """

    def __init__(self, source: str, problems):
        self.source = source
        self.problems = list(problems)
        lines = "; ".join(self.problems)
        super().__init__(f"{source}: {lines}")

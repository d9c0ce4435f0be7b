"""Exception types shared across the package."""


class ValidationError(ValueError):
    """Input does not satisfy an operation's preconditions."""


class DegeneratePolytopeError(ValidationError):
    """The polytope is a single point (trivial orbit) where a proper polytope is needed."""


class ConsistencyError(RuntimeError):
    """Two independent computations disagreed, or an internal invariant broke."""


class EnumerationLimitError(RuntimeError):
    """An enumeration would exceed the configured point cap."""

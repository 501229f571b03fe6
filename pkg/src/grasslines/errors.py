"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the domain where the quantity is defined."""


class IndexRangeError(DomainError):
    """An exterior-algebra index exceeds the rank bound of the module."""


class DegreeMismatchError(DomainError):
    """A query violates the top-degree constraint a + 2b = 2n."""

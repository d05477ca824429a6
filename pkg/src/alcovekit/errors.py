"""Exception types shared across the package."""


class AlcoveKitError(ValueError):
    """Base class for all errors raised by alcovekit."""


class ConstructionError(AlcoveKitError):
    """Invalid Dynkin type or rank."""


class DomainError(AlcoveKitError):
    """An argument lies outside the domain of an operation."""


class HypothesisError(AlcoveKitError):
    """A genus or characteristic bound required by a dimension formula fails."""

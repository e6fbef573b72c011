"""Exceptions shared across the package."""


class KronmotError(Exception):
    """Base class for all errors raised by this package."""


class NonPolynomialError(KronmotError):
    """An exact polynomial division left a remainder."""


class NotInvertibleError(KronmotError):
    """Series inversion requires a nonzero constant term."""


class NonZeroConstantError(KronmotError):
    """The difference-operator inversion needs a vanishing constant term."""


class ExactDivisionError(KronmotError):
    """A division that must be exact (quantum-integer prefactors) failed."""


class NoConvergenceError(KronmotError):
    """The functional-equation fixed point did not stabilize."""


class NonIntegerError(KronmotError):
    """A closed-form expression failed to reduce to an integer."""


class NonCoprimeError(KronmotError):
    """Moduli motives are only defined here for coprime dimension vectors."""


class InsufficientBoundError(KronmotError):
    """The precomputed table does not reach far enough for the request."""


class ResourceLimitError(KronmotError):
    """An enumeration would exceed the configured size cap."""

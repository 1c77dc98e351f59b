"""Exception types raised by ghwforge."""

from __future__ import annotations


class GHWForgeError(Exception):
    """Base class for all library errors."""


class NotPrime(GHWForgeError, ValueError):
    pass


class TooLarge(GHWForgeError):
    """An enumeration would exceed the configured budget."""


class DivisionByZero(GHWForgeError, ZeroDivisionError):
    pass


class FieldMismatch(GHWForgeError, ValueError):
    pass


class AmbientMismatch(GHWForgeError, ValueError):
    pass


class ShapeMismatch(GHWForgeError, ValueError):
    pass


class BadRank(GHWForgeError, ValueError):
    pass


class BadIndex(GHWForgeError, IndexError):
    pass


class EmptyIndexSet(GHWForgeError, ValueError):
    pass


class BadDims(GHWForgeError, ValueError):
    pass


class DuplicatePoints(GHWForgeError, ValueError):
    pass


class ConditionViolated(GHWForgeError, ValueError):
    pass


class DegenerateFunctional(GHWForgeError, ValueError):
    pass


class PointOnLine(GHWForgeError, ValueError):
    pass


class PointOffCurve(GHWForgeError, ValueError):
    pass


class AssumptionViolated(GHWForgeError, ValueError):
    pass


class InternalError(GHWForgeError, AssertionError):
    """A result contradicted a proven invariant; always a bug."""

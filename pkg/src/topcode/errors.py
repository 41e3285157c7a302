"""Typed domain errors.

Every error raised by the library derives from :class:`TopcodeError`, so
callers (and the CLI) can separate domain failures from programming bugs.
"""

from __future__ import annotations


class TopcodeError(Exception):
    """Base class for all domain errors."""


class LengthMismatch(TopcodeError, ValueError):
    pass


class ColumnDegenerate(TopcodeError, ValueError):
    pass


class NegativeLabel(TopcodeError, ValueError):
    pass


class IndexOutOfRange(TopcodeError, IndexError):
    pass


class EmptyInput(TopcodeError, ValueError):
    pass


class RuleNotApplicable(TopcodeError, ValueError):
    pass


class InstanceTooLarge(TopcodeError, ValueError):
    pass


class NotSorted(TopcodeError, ValueError):
    pass


class UnknownLabel(TopcodeError, LookupError):
    pass


class DuplicateEdgeLabels(TopcodeError, ValueError):
    pass


class LabelNotSplittable(TopcodeError, ValueError):
    pass


class BadPartition(TopcodeError, ValueError):
    pass


class Disconnected(TopcodeError, ValueError):
    pass


class NotATree(TopcodeError, ValueError):
    pass


class MissingParams(TopcodeError, ValueError):
    pass


class ShapeMismatch(TopcodeError, ValueError):
    pass


class NotInClass(TopcodeError, ValueError):
    pass


class ParityViolation(TopcodeError, ValueError):
    pass


class ClosureViolation(TopcodeError, ValueError):
    pass


class LayoutMismatch(TopcodeError, ValueError):
    pass


class SizeMismatch(TopcodeError, ValueError):
    pass


class UnknownVertex(TopcodeError, LookupError):
    pass


class OutOfBounds(TopcodeError, IndexError):
    pass


class RepeatedPoint(TopcodeError, ValueError):
    pass


class InvalidCode(TopcodeError, ValueError):
    pass


class NotInvertibleMod10(TopcodeError, ValueError):
    pass

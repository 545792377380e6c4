"""Exception taxonomy shared by all modules."""


class WittliftError(Exception):
    pass


# field construction / arithmetic
class NotPrime(WittliftError):
    pass


class ReducibleModulus(WittliftError):
    pass


class UnsupportedSize(WittliftError):
    pass


class FieldMismatch(WittliftError):
    pass


class DivisionByZero(WittliftError):
    pass


class ZeroPolynomial(WittliftError):
    pass


class DegreeTooLarge(WittliftError):
    pass


# Witt vectors
class NonUnit(WittliftError):
    pass


class NotPrimeField(WittliftError):
    pass


# linear algebra
class ShapeMismatch(WittliftError):
    pass


class RingMismatch(WittliftError):
    pass


class Singular(WittliftError):
    pass


class NotSplit(WittliftError):
    pass


# groups
class BoundExceeded(WittliftError):
    pass


class NotInvertible(WittliftError):
    pass


class NotSubgroup(WittliftError):
    pass


class NotFixedBySubgroup(WittliftError):
    pass


class NotPGroup(WittliftError):
    pass


class NotHomomorphism(WittliftError):
    pass


# obstruction solvers
class NotCommuting(WittliftError):
    pass


class WrongOrders(WittliftError):
    pass


class NotTriangular(WittliftError):
    pass


class KernelEscape(WittliftError):
    pass


class NotACocycle(WittliftError):
    pass


class NotFixed(WittliftError):
    pass


# verification CLI
class UnknownCheckId(WittliftError):
    pass


class RelationFailure(WittliftError):
    pass


class CheckFailure(WittliftError):
    """Raised inside a check body when an expectation is not met."""

"""Exception hierarchy shared by all modules."""


class CoxeterError(Exception):
    """Base class for every error raised by this package."""


class InvalidMatrix(CoxeterError, ValueError):
    pass


class NonFiniteGroup(CoxeterError):
    """Root or element closure exceeded its cap; the group is (almost surely) infinite."""


class GroupTooLarge(CoxeterError):
    pass


class BadLetter(CoxeterError, ValueError):
    pass


class BadIndex(CoxeterError, ValueError):
    pass


class NotInvolution(CoxeterError, ValueError):
    pass


class NotReverser(CoxeterError, ValueError):
    pass


class NotStronglyReal(CoxeterError):
    pass


class WrongType(CoxeterError, ValueError):
    """Operation only defined for a particular Coxeter type (e.g. type A formulas)."""


class InternalProofViolation(CoxeterError, AssertionError):
    """A certificate failed verification; this is a bug, not bad input."""

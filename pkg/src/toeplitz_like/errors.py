"""Exception hierarchy.

Domain errors (the input is mathematically outside an operation's reach)
derive from :class:`DomainError`; numerical failures derive from
:class:`NumericalError`. The CLI maps the two families to distinct exit codes.
"""


class ToeplitzError(Exception):
    pass


class DomainError(ToeplitzError):
    pass


class NumericalError(ToeplitzError):
    pass


class DivisionByZeroPoly(DomainError, ZeroDivisionError):
    pass


class NotCoprime(DomainError):
    pass


class NotInDomain(DomainError):
    pass


class NotInvertible(DomainError):
    pass


class NotSupported(DomainError):
    pass


class CircleRoot(DomainError):
    pass


class PreconditionError(DomainError, ValueError):
    pass


class SingularSystem(NumericalError):
    pass


class NoConvergence(NumericalError):
    pass

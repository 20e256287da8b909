# exceptions.py
"""Errors raised by the ring library and the expression front end."""


class RingError(Exception):
    """Base class for failures inside the ring library."""


class ParameterError(RingError):
    """The pair (p, m) cannot define the rings Z_p and Z_{p^m}."""


class NotPrime(ParameterError):
    def __init__(self, p):
        super().__init__(f"p = {p} is not prime")
        self.p = p


class BadExponent(ParameterError):
    def __init__(self, m):
        super().__init__(f"m = {m} must be at least 2")
        self.m = m


class Overflow(ParameterError):
    """A value does not fit the host integer width."""


class ParamMismatch(RingError):
    def __init__(self, left, right):
        super().__init__(f"operands live over different rings: {left} and {right}")
        self.left = left
        self.right = right


class NotAUnit(RingError):
    """An element of Z_{p^m} with u_0 = 0 has no inverse."""


class NotInvertible(RingError):
    """A matrix fails the criterion a != 0 and u_0 != 0."""

    def __init__(self, criterion):
        super().__init__(f"matrix is not invertible: {criterion}")
        self.criterion = criterion


class NotCoprime(RingError):
    def __init__(self, n, modulus):
        super().__init__(f"{n} has no inverse modulo {modulus}")
        self.n = n
        self.modulus = modulus


class BudgetExceeded(RingError):
    def __init__(self, size, budget):
        super().__init__(f"{size} elements exceed the enumeration budget of {budget}")
        self.size = size
        self.budget = budget


class NotAnEndomorphism(RingError):
    """Generator images that no element of E_{p,p^m} produces."""


class UnboundVariable(RingError):
    def __init__(self, name):
        super().__init__(f"'{name}' is not bound")
        self.name = name


class TypeMismatch(RingError):
    """Operands of an expression have kinds the operator cannot combine."""


class ExpressionError(Exception):
    """Base class for malformed input text; offset is a position in the line."""

    def __init__(self, message, offset=None):
        super().__init__(message)
        self.message = message
        self.offset = offset

    def __str__(self):
        if self.offset is None:
            return f"{type(self).__name__}: {self.message}"
        return f"{type(self).__name__} at offset {self.offset}: {self.message}"


class LexError(ExpressionError):
    pass


class ParseError(ExpressionError):
    pass


class LiteralError(ParseError):
    """A matrix or point literal with an entry outside its ring."""

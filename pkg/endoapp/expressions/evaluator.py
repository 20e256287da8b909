# expressions/evaluator.py
"""
Evaluation of parsed statements against a session.

Values are EndoMatrix, ModulePoint, IntPoly, or plain int for scalars of
Z_{p^m}; integer atoms arrive from the parser already in [0, p^m). A
scalar n meets a matrix as n*I under + and -, and as scalar_mul under *.
All arithmetic is delegated to the algebra package.
"""
import logging
from dataclasses import dataclass, field

from ..algebra import (
    EndoMatrix, IntPoly, ModulePoint, RingParams,
    add, annihilating_poly, apply, digits_from_int, digits_one, inv, inverse_via_minpoly,
    mat_add, mat_identity, mat_mul, mat_neg, mat_pow, mat_sub, minimal_poly, mul, neg,
    point_add, point_neg, point_scale, scalar_mul, sub,
)
from ..exceptions import TypeMismatch, UnboundVariable
from .parser import BinOp, Call, IntLit, Let, MatrixLit, PointLit, Power, Var, parse_statement

logger = logging.getLogger(__name__)


@dataclass
class Session:
    """Ring parameters plus the names bound by let."""
    params: RingParams
    bindings: dict = field(default_factory=dict)

    def bind(self, name, value):
        if isinstance(value, IntPoly):
            raise TypeMismatch(f"cannot bind the polynomial to '{name}'; only matrices, points and scalars")
        self.bindings[name] = value
        logger.debug("bound %s", name)

    def lookup(self, name):
        try:
            return self.bindings[name]
        except KeyError:
            raise UnboundVariable(name) from None

    def execute(self, source):
        """Parse and run one line; the value of an expression, None otherwise."""
        statement = parse_statement(source, self.params)
        if statement is None:
            return None
        return run_statement(statement, self)


def kind_of(value):
    if isinstance(value, EndoMatrix):
        return 'matrix'
    if isinstance(value, ModulePoint):
        return 'point'
    if isinstance(value, IntPoly):
        return 'poly'
    return 'scalar'


def _scalar(op, params, *values):
    """Apply a zp_digits operation to int scalars and return an int."""
    return int(op(*(digits_from_int(params, value) for value in values)))


def _scalar_pow(base, exponent, params):
    result = digits_one(params)
    square = digits_from_int(params, base)
    while exponent:
        if exponent & 1:
            result = mul(result, square)
        square = mul(square, square)
        exponent >>= 1
    return int(result)


def _as_matrix(value, params):
    if isinstance(value, int):
        return scalar_mul(value, mat_identity(params))
    return value


def _mismatch(op, left, right):
    return TypeMismatch(f"cannot combine {kind_of(left)} {op} {kind_of(right)}")


def _add(op, left, right, params):
    if isinstance(left, int) and isinstance(right, int):
        return _scalar(add if op == '+' else sub, params, left, right)
    if isinstance(left, ModulePoint) and isinstance(right, ModulePoint):
        return point_add(left, right if op == '+' else point_neg(right))
    if {kind_of(left), kind_of(right)} <= {'matrix', 'scalar'}:
        combine = mat_add if op == '+' else mat_sub
        return combine(_as_matrix(left, params), _as_matrix(right, params))
    raise _mismatch(op, left, right)


def _multiply(left, right, params):
    if isinstance(left, int) and isinstance(right, int):
        return _scalar(mul, params, left, right)
    if isinstance(left, EndoMatrix) and isinstance(right, EndoMatrix):
        return mat_mul(left, right)
    if isinstance(left, int) and isinstance(right, EndoMatrix):
        return scalar_mul(left, right)
    if isinstance(left, EndoMatrix) and isinstance(right, int):
        return scalar_mul(right, left)
    if isinstance(left, int) and isinstance(right, ModulePoint):
        return point_scale(left, right)
    if isinstance(left, ModulePoint) and isinstance(right, int):
        return point_scale(right, left)
    raise _mismatch('*', left, right)


def _call(name, args, params):
    if name == 'apply':
        matrix, point = args
        if not (isinstance(matrix, EndoMatrix) and isinstance(point, ModulePoint)):
            raise TypeMismatch(f"apply takes a matrix and a point, not {kind_of(matrix)} and {kind_of(point)}")
        return apply(matrix, point)
    (value,) = args
    if name == 'neg':
        if isinstance(value, int):
            return _scalar(neg, params, value)
        if isinstance(value, ModulePoint):
            return point_neg(value)
        if isinstance(value, EndoMatrix):
            return mat_neg(value)
    elif name == 'inv':
        if isinstance(value, int):
            return _scalar(inv, params, value)
        if isinstance(value, EndoMatrix):
            return inverse_via_minpoly(value)
    elif isinstance(value, EndoMatrix):
        if name == 'minpoly':
            return minimal_poly(value)
        return annihilating_poly(value).as_int_poly()
    raise TypeMismatch(f"{name} does not accept a {kind_of(value)}")


def evaluate(node, session):
    """The value of an expression tree."""
    params = session.params
    if isinstance(node, (IntLit, MatrixLit, PointLit)):
        return node.value
    if isinstance(node, Var):
        return session.lookup(node.name)
    if isinstance(node, BinOp):
        left = evaluate(node.left, session)
        right = evaluate(node.right, session)
        if node.op == '*':
            return _multiply(left, right, params)
        return _add(node.op, left, right, params)
    if isinstance(node, Power):
        base = evaluate(node.base, session)
        if isinstance(base, int):
            return _scalar_pow(base, node.exponent, params)
        if isinstance(base, EndoMatrix):
            return mat_pow(base, node.exponent)
        raise TypeMismatch(f"cannot raise a {kind_of(base)} to a power")
    if isinstance(node, Call):
        return _call(node.name, [evaluate(arg, session) for arg in node.args], params)
    raise TypeError(f"unknown expression node {node!r}")


def run_statement(statement, session):
    if isinstance(statement, Let):
        session.bind(statement.name, evaluate(statement.expr, session))
        return None
    value = evaluate(statement, session)
    logger.debug("evaluated %r", statement)
    return value

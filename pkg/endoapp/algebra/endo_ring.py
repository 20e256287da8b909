# algebra/endo_ring.py
"""
The matrix ring E_{p,p^m}.

An element is a 2x2 matrix [[a, b], [p^{m-1}c, d]] with a, b, c in Z_p and
d in Z_{p^m}. Only the cofactor c of the bottom-left entry is stored. All
Z_{p^m} work goes through the digit arithmetic of zp_digits; a Z_{p^m} value
meeting a Z_p entry is first reduced to its residue mod p.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction

from sympy import ZZ, Poly, symbols

from ..exceptions import NotInvertible, Overflow, ParamMismatch
from .zp_digits import (
    WORD_MAX, Digits, RingParams, add, digits_from_int, digits_one, digits_top, digits_zero,
    inv, mul, neg, residue, sub,
)

logger = logging.getLogger(__name__)

_X = symbols('x')


@dataclass(frozen=True)
class EndoMatrix:
    params: RingParams
    a: int
    b: int
    c: int
    d: Digits

    def __post_init__(self):
        p = self.params.p
        if not all(0 <= entry < p for entry in (self.a, self.b, self.c)):
            raise ValueError(f"a, b, c = {self.a}, {self.b}, {self.c} must lie in [0, {p})")
        if self.d.params != self.params:
            raise ParamMismatch(self.params, self.d.params)

    @property
    def c_full(self):
        """The bottom-left entry p^{m-1}*c as an element of Z_{p^m}."""
        return self.params.top_place * self.c

    @property
    def u0(self):
        return residue(self.d)

    def rows(self):
        return ((self.a, self.b), (self.c_full, int(self.d)))


@dataclass(frozen=True)
class IntPoly:
    """Integer polynomial, coeffs[i] multiplies x^i; () is the zero polynomial."""
    coeffs: tuple

    def __post_init__(self):
        coeffs = tuple(self.coeffs)
        while coeffs and coeffs[-1] == 0:
            coeffs = coeffs[:-1]
        object.__setattr__(self, 'coeffs', coeffs)

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else None

    @property
    def is_monic(self):
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def as_sympy(self):
        return Poly(list(reversed(self.coeffs)) or [0], _X, domain=ZZ)


@dataclass(frozen=True)
class AnnPoly:
    """f_A(x) = x^2 + r*x + s, annihilating its source matrix."""
    r: Digits
    s: Digits

    def as_int_poly(self):
        return IntPoly((int(self.s), int(self.r), 1))


def _check_same(left, right):
    if left.params != right.params:
        raise ParamMismatch(left.params, right.params)


def make_matrix(params, a, b, c, d):
    """Build [[a, b], [p^{m-1}c, d]], reducing a, b, c mod p and d mod p^m."""
    p = params.p
    return EndoMatrix(params, a % p, b % p, c % p, digits_from_int(params, d))


def mat_zero(params):
    return EndoMatrix(params, 0, 0, 0, digits_zero(params))


def mat_identity(params):
    return EndoMatrix(params, 1, 0, 0, digits_one(params))


def mat_add(A1, A2):
    _check_same(A1, A2)
    p = A1.params.p
    return EndoMatrix(
        A1.params,
        (A1.a + A2.a) % p,
        (A1.b + A2.b) % p,
        (A1.c + A2.c) % p,
        add(A1.d, A2.d),
    )


def mat_neg(A):
    p = A.params.p
    return EndoMatrix(A.params, -A.a % p, -A.b % p, -A.c % p, neg(A.d))


def mat_sub(A1, A2):
    return mat_add(A1, mat_neg(A2))


def mat_mul(A1, A2):
    _check_same(A1, A2)
    params = A1.params
    p = params.p
    return EndoMatrix(
        params,
        A1.a * A2.a % p,
        (A1.a * A2.b + A1.b * A2.u0) % p,
        (A1.c * A2.a + A2.c * A1.u0) % p,
        add(digits_top(params, A1.c * A2.b), mul(A1.d, A2.d)),
    )


def scalar_mul(n, A):
    """n*A for an integer n or a Z_{p^m} element n."""
    params = A.params
    if isinstance(n, Digits):
        _check_same(n, A)
        scalar = n
    else:
        scalar = digits_from_int(params, n)
    k = residue(scalar)
    p = params.p
    return EndoMatrix(params, k * A.a % p, k * A.b % p, k * A.c % p, mul(scalar, A.d))


def mat_pow(A, n):
    if n < 0:
        raise ValueError(f"negative exponent {n}; use an inverse instead")
    result = mat_identity(A.params)
    base = A
    while n:
        if n & 1:
            result = mat_mul(result, base)
        base = mat_mul(base, base)
        n >>= 1
    return result


def invertibility_failure(A):
    """Which half of the criterion a != 0, u_0 != 0 fails, or None."""
    failures = []
    if A.a == 0:
        failures.append("a = 0")
    if A.u0 == 0:
        failures.append("u_0 = 0")
    return " and ".join(failures) or None


def is_invertible(A):
    return invertibility_failure(A) is None


def _require_invertible(A):
    failure = invertibility_failure(A)
    if failure:
        raise NotInvertible(failure)


def inverse_direct(A):
    """
    Closed-form inverse.

    The first row is (a^{-1}, -a^{-1} b u_0^{-1}), the bottom-left cofactor
    is -a^{-1} c u_0^{-1}, and the bottom-right entry is d^{-1} with its last
    digit shifted by c a^{-1} b u_0^{-2}.
    """
    _require_invertible(A)
    params = A.params
    p = params.p
    a_inv = pow(A.a, -1, p)
    u0_inv = pow(A.u0, -1, p)
    d_inv = inv(A.d)
    correction = A.c * a_inv * A.b * u0_inv * u0_inv
    top = (d_inv.u[-1] + correction) % p
    return EndoMatrix(
        params,
        a_inv,
        -a_inv * A.b * u0_inv % p,
        -a_inv * A.c * u0_inv % p,
        Digits(params, d_inv.u[:-1] + (top,)),
    )


def annihilating_poly(A):
    """r = -(a + d) and s = a*d - p^{m-1}bc, both in Z_{p^m}."""
    params = A.params
    a = digits_from_int(params, A.a)
    r = neg(add(a, A.d))
    s = sub(mul(a, A.d), digits_top(params, A.b * A.c))
    return AnnPoly(r, s)


def inverse_via_minpoly(A):
    """A^{-1} = -s^{-1} (A + rI), read off the annihilating quadratic."""
    _require_invertible(A)
    f = annihilating_poly(A)
    shifted = mat_add(A, scalar_mul(f.r, mat_identity(A.params)))
    return scalar_mul(neg(inv(f.s)), shifted)


def minimal_poly(A):
    """
    Least-degree monic annihilator.

    A is annihilated by a linear x + e exactly when it is a scalar matrix:
    b = c = 0 and a = d mod p, with e = -d. Everything else needs the
    quadratic of annihilating_poly.
    """
    if A.b == 0 and A.c == 0 and A.a == A.u0:
        return IntPoly((int(neg(A.d)), 1))
    return annihilating_poly(A).as_int_poly()


def poly_eval(g, A):
    """g(A), computed from the remainder of g divided by f_A over the integers."""
    divisor = annihilating_poly(A).as_int_poly().as_sympy()
    remainder = g.as_sympy().rem(divisor)
    low_first = [int(coeff) for coeff in reversed(remainder.all_coeffs())]
    result = mat_zero(A.params)
    power = mat_identity(A.params)
    for coeff in low_first:
        result = mat_add(result, scalar_mul(coeff, power))
        power = mat_mul(power, A)
    return result


def census(params):
    """(|E_{p,p^m}|, number of units) = (p^{m+3}, p^{m+1}(p-1)^2)."""
    p, m = params.p, params.m
    ring_size = p ** (m + 3)
    if ring_size > WORD_MAX:
        raise Overflow(f"|E| = {p}^{m + 3} does not fit a 64-bit word")
    unit_count = p ** (m + 1) * (p - 1) ** 2
    logger.debug("census %s: %d elements, %d units", params, ring_size, unit_count)
    return ring_size, unit_count


def unit_density(params):
    ring_size, unit_count = census(params)
    return Fraction(unit_count, ring_size)

# algebra/zp_digits.py
"""
Arithmetic in Z_{p^m} on canonical base-p digit vectors.

An element d is held as its digits (u_0, ..., u_{m-1}), little-endian, with
d = u_0 + p*u_1 + ... + p^{m-1}*u_{m-1}. Every operation walks the digits
from u_0 upwards and threads a carry from one position into the next. The
unreduced accumulator of a position is a CarryState; digit vectors handed
back to callers are always reduced.
"""
import logging
from dataclasses import dataclass, field

from sympy import isprime

from ..exceptions import BadExponent, NotAUnit, NotPrime, Overflow, ParamMismatch

logger = logging.getLogger(__name__)

# Moduli and counts must fit a signed 64-bit word.
WORD_MAX = 2**63 - 1


@dataclass(frozen=True)
class RingParams:
    """The pair (p, m) fixing the ambient rings Z_p and Z_{p^m}."""
    p: int
    m: int
    modulus: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if not isprime(self.p):
            raise NotPrime(self.p)
        if self.m < 2:
            raise BadExponent(self.m)
        # p^m >= 2^(m * (bitlength - 1)); reject before raising huge powers
        if self.m * (self.p.bit_length() - 1) >= 64 or self.p ** self.m > WORD_MAX:
            raise Overflow(f"{self.p}^{self.m} does not fit a 64-bit word")
        object.__setattr__(self, 'modulus', self.p ** self.m)

    @property
    def top_place(self):
        """p^{m-1}, the place value of the last digit."""
        return self.p ** (self.m - 1)

    def __str__(self):
        return f"(p={self.p}, m={self.m})"


@dataclass(frozen=True)
class Digits:
    """An element of Z_{p^m}; u[i] is the coefficient of p^i."""
    params: RingParams
    u: tuple

    def __post_init__(self):
        if len(self.u) != self.params.m:
            raise ValueError(f"expected {self.params.m} digits, got {len(self.u)}")
        if any(not 0 <= digit < self.params.p for digit in self.u):
            raise ValueError(f"digits {self.u} are not all in [0, {self.params.p})")

    def __int__(self):
        return digits_to_int(self)

    def __str__(self):
        return str(digits_to_int(self))


@dataclass(frozen=True)
class CarryState:
    """The accumulator of one digit position before reduction."""
    value: int
    p: int

    @property
    def digit(self):
        return self.value % self.p

    @property
    def carry(self):
        return self.value // self.p


def carry_bound(params):
    """Strict upper bound on any accumulator: a full convolution row plus carry."""
    return params.m * params.p * (params.p - 1) + params.p


def _settle(params, value):
    state = CarryState(value, params.p)
    if not 0 <= value < carry_bound(params):
        raise Overflow(f"accumulator {value} escaped its bound {carry_bound(params)}")
    return state


def _check_same(left, right):
    if left.params != right.params:
        raise ParamMismatch(left.params, right.params)


def make_params(p, m):
    params = RingParams(p, m)
    logger.debug("ring parameters %s, modulus %d", params, params.modulus)
    return params


def digits_from_int(params, n):
    """Base-p expansion of n; integers outside [0, p^m) are reduced first."""
    n %= params.modulus
    digits = []
    for _ in range(params.m):
        n, digit = divmod(n, params.p)
        digits.append(digit)
    return Digits(params, tuple(digits))


def digits_to_int(d):
    value = 0
    for digit in reversed(d.u):
        value = value * d.params.p + digit
    return value


def digits_zero(params):
    return Digits(params, (0,) * params.m)


def digits_one(params):
    return Digits(params, (1,) + (0,) * (params.m - 1))


def digits_top(params, c):
    """The element p^{m-1}*c: only the last digit is set."""
    return Digits(params, (0,) * (params.m - 1) + (c % params.p,))


def residue(d):
    """d mod p, which is the first digit."""
    return d.u[0]


def add(d1, d2):
    _check_same(d1, d2)
    params = d1.params
    digits = []
    carry = 0
    for x, y in zip(d1.u, d2.u):
        state = _settle(params, x + y + carry)
        digits.append(state.digit)
        carry = state.carry
    return Digits(params, tuple(digits))


def neg(d):
    # Each v_k cancels u_k plus the incoming carry, so u_k + v_k + carry
    # is always 0 or p.
    params = d.params
    digits = []
    carry = 0
    for u_k in d.u:
        v_k = (-u_k - carry) % params.p
        state = _settle(params, u_k + v_k + carry)
        digits.append(v_k)
        carry = state.carry
    return Digits(params, tuple(digits))


def sub(d1, d2):
    return add(d1, neg(d2))


def mul(d1, d2):
    _check_same(d1, d2)
    params = d1.params
    digits = []
    carry = 0
    for k in range(params.m):
        row = sum(d1.u[i] * d2.u[k - i] for i in range(k + 1))
        state = _settle(params, row + carry)
        digits.append(state.digit)
        carry = state.carry
    return Digits(params, tuple(digits))


def is_unit(d):
    return residue(d) != 0


def inv(d):
    """
    Inverse of a unit, one digit at a time.

    s_0 is u_0^{-1} mod p. Each later s_k is chosen so that digit k of the
    running product d * (s_0 + p*s_1 + ...) vanishes, leaving the product
    equal to 1.
    """
    if not is_unit(d):
        raise NotAUnit(f"{digits_to_int(d)} has u_0 = 0 and no inverse modulo {d.params.modulus}")
    params = d.params
    p = params.p
    u0_inv = pow(d.u[0], -1, p)
    digits = []
    carry = 0
    for k in range(params.m):
        target = 1 if k == 0 else 0
        partial = sum(d.u[k - j] * digits[j] for j in range(k)) + carry
        s_k = u0_inv * (target - partial) % p
        state = _settle(params, partial + d.u[0] * s_k)
        digits.append(s_k)
        carry = state.carry
    return Digits(params, tuple(digits))

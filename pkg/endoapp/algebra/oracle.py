# algebra/oracle.py
"""
Brute-force reference arithmetic for E_{p,p^m}.

Everything here works on plain integers reduced with %, never on digit
vectors, so a fault in the carry chains of zp_digits cannot be mirrored
here. The bottom-left entry is held in full (a multiple of p^{m-1}), not as
a cofactor. Enumerations refuse to run past an explicit budget.
"""
import logging
from dataclasses import dataclass
from itertools import islice, product

from ..exceptions import BudgetExceeded, NotCoprime, ParamMismatch
from .endo_ring import make_matrix
from .zp_digits import RingParams

logger = logging.getLogger(__name__)

DEFAULT_ENUMERATION_BUDGET = 10**6
DEFAULT_PAIR_BUDGET = 2048


@dataclass(frozen=True)
class NaiveMatrix:
    params: RingParams
    a: int
    b: int
    c_full: int
    d: int

    def __post_init__(self):
        p, modulus = self.params.p, self.params.modulus
        if not (0 <= self.a < p and 0 <= self.b < p):
            raise ValueError(f"a, b = {self.a}, {self.b} must lie in [0, {p})")
        if not 0 <= self.c_full < modulus or self.c_full % self.params.top_place:
            raise ValueError(f"{self.c_full} is not a multiple of {self.params.top_place} below {modulus}")
        if not 0 <= self.d < modulus:
            raise ValueError(f"d = {self.d} must lie in [0, {modulus})")


def _check_same(left, right):
    if left.params != right.params:
        raise ParamMismatch(left.params, right.params)


def euclid_inv(n, modulus):
    """Inverse of n modulo modulus by the extended Euclidean algorithm."""
    r0, r1 = modulus, n % modulus
    t0, t1 = 0, 1
    while r1:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        t0, t1 = t1, t0 - q * t1
    if r0 != 1:
        raise NotCoprime(n, modulus)
    return t0 % modulus


def naive_zero(params):
    return NaiveMatrix(params, 0, 0, 0, 0)


def naive_identity(params):
    return NaiveMatrix(params, 1 % params.p, 0, 0, 1)


def naive_mat_add(M1, M2):
    _check_same(M1, M2)
    p, n = M1.params.p, M1.params.modulus
    return NaiveMatrix(
        M1.params,
        (M1.a + M2.a) % p,
        (M1.b + M2.b) % p,
        (M1.c_full + M2.c_full) % n,
        (M1.d + M2.d) % n,
    )


def naive_mat_mul(M1, M2):
    _check_same(M1, M2)
    p, n = M1.params.p, M1.params.modulus
    return NaiveMatrix(
        M1.params,
        M1.a * M2.a % p,
        (M1.a * M2.b + M1.b * M2.d) % p,
        (M1.c_full * M2.a + M2.c_full * M1.d) % n,
        (M1.c_full * M2.b + M1.d * M2.d) % n,
    )


def naive_scalar(k, M):
    p, n = M.params.p, M.params.modulus
    return NaiveMatrix(M.params, k * M.a % p, k * M.b % p, k * M.c_full % n, k * M.d % n)


def naive_apply(M, x, y):
    p, n = M.params.p, M.params.modulus
    return (M.a * x + M.b * y) % p, (M.c_full * x + M.d * y) % n


def naive_poly_eval(coeffs, M):
    """Horner evaluation of sum(coeffs[i] * M^i)."""
    result = naive_zero(M.params)
    for coeff in reversed(coeffs):
        result = naive_mat_add(naive_mat_mul(result, M), naive_scalar(coeff, naive_identity(M.params)))
    return result


def ring_size(params):
    return params.p ** 3 * params.modulus


def enumerate_ring(params, budget=DEFAULT_ENUMERATION_BUDGET, start=0, stop=None):
    """
    Every element of E_{p,p^m} exactly once, in a fixed order.

    start and stop select an index range so that disjoint slices can be
    checked independently.
    """
    size = ring_size(params)
    if size > budget:
        logger.warning("refusing to enumerate %d elements of E over %s", size, params)
        raise BudgetExceeded(size, budget)
    logger.debug("enumerating %s elements [%d, %s) of %d", params, start, stop, size)
    p, top = params.p, params.top_place
    entries = product(range(p), range(p), range(p), range(params.modulus))
    for a, b, c, d in islice(entries, start, stop):
        yield NaiveMatrix(params, a, b, c * top, d)


def find_inverse_bruteforce(M, elements):
    """The element of elements that is a two-sided inverse of M, or None."""
    identity = naive_identity(M.params)
    for candidate in elements:
        if naive_mat_mul(M, candidate) == identity and naive_mat_mul(candidate, M) == identity:
            return candidate
    return None


def count_units_bruteforce(params, budget=DEFAULT_PAIR_BUDGET):
    elements = list(enumerate_ring(params, budget))
    return sum(1 for M in elements if find_inverse_bruteforce(M, elements) is not None)


# Bridge to the digit representation. Only these two functions touch
# EndoMatrix; the arithmetic above never does.

def to_naive(A):
    return NaiveMatrix(A.params, A.a, A.b, A.c_full, int(A.d))


def from_naive(M):
    return make_matrix(M.params, M.a, M.b, M.c_full // M.params.top_place, M.d)

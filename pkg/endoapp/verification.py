# verification.py
"""
Checks of the digit and matrix arithmetic against the brute-force oracle.

Each check compares one family of library operations with its naive
counterpart over every element the budget allows, or over seeded random
samples where an exhaustive sweep would be cubic. run_checks refuses, with
BudgetExceeded, rings too large to sweep pairwise.
"""
import logging
import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .algebra import (
    RingParams,
    add, annihilating_poly, apply, census, count_units_bruteforce, digits_from_int,
    digits_to_int, enumerate_ring, euclid_inv, find_inverse_bruteforce, from_naive,
    inv, inverse_direct, inverse_via_minpoly, is_invertible, is_unit, make_point,
    mat_add, mat_identity, mat_mul, mat_zero, minimal_poly, mul, naive_apply,
    naive_mat_add, naive_mat_mul, neg, point_add, poly_eval, ring_size, scalar_mul,
    to_naive, unit_density,
)
from .exceptions import BudgetExceeded

logger = logging.getLogger(__name__)

CHECKS = []


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    cases: int
    detail: str = ''


@dataclass
class Context:
    params: RingParams
    elements: list
    matrices: list
    rng: random.Random
    trials: int


def check(name):
    def register(func):
        CHECKS.append((name, func))
        return func
    return register


@check("digit round trip")
def check_round_trip(ctx):
    for n in range(ctx.params.modulus):
        yield n, digits_to_int(digits_from_int(ctx.params, n)) == n


@check("digit add, neg, mul against integers")
def check_digit_arithmetic(ctx):
    params = ctx.params
    modulus = params.modulus
    values = [digits_from_int(params, n) for n in range(modulus)]
    for n, d in enumerate(values):
        yield f"-{n}", int(neg(d)) == -n % modulus
    for (n1, d1), (n2, d2) in product(enumerate(values), repeat=2):
        ok = int(add(d1, d2)) == (n1 + n2) % modulus and int(mul(d1, d2)) == n1 * n2 % modulus
        yield (n1, n2), ok


@check("digit inverse against extended Euclid")
def check_digit_inverse(ctx):
    params = ctx.params
    for n in range(params.modulus):
        d = digits_from_int(params, n)
        if n % params.p:
            yield n, is_unit(d) and int(inv(d)) == euclid_inv(n, params.modulus)
        else:
            yield n, not is_unit(d)


@check("mat_add and mat_mul against naive matrices")
def check_matrix_arithmetic(ctx):
    for (M1, A1), (M2, A2) in product(zip(ctx.elements, ctx.matrices), repeat=2):
        ok = (
            to_naive(mat_add(A1, A2)) == naive_mat_add(M1, M2)
            and to_naive(mat_mul(A1, A2)) == naive_mat_mul(M1, M2)
        )
        yield (A1, A2), ok


@check("invertibility criterion against exhaustive search")
def check_invertibility(ctx):
    for M, A in zip(ctx.elements, ctx.matrices):
        yield A, is_invertible(A) == (find_inverse_bruteforce(M, ctx.elements) is not None)


@check("closed-form inverse against the annihilating-polynomial inverse")
def check_inverse_routes(ctx):
    identity = mat_identity(ctx.params)
    for A in filter(is_invertible, ctx.matrices):
        B = inverse_direct(A)
        ok = B == inverse_via_minpoly(A) and mat_mul(A, B) == identity == mat_mul(B, A)
        yield A, ok


@check("annihilating polynomial vanishes")
def check_annihilation(ctx):
    zero = mat_zero(ctx.params)
    for A in ctx.matrices:
        yield A, poly_eval(annihilating_poly(A).as_int_poly(), A) == zero


@check("minimal polynomial is least-degree")
def check_minimality(ctx):
    params = ctx.params
    zero = mat_zero(params)
    identity = mat_identity(params)
    for A in ctx.matrices:
        g = minimal_poly(A)
        linear = any(
            mat_add(A, scalar_mul(e, identity)) == zero for e in range(params.modulus)
        )
        yield A, poly_eval(g, A) == zero and (g.degree == 1) == linear


@check("action is additive and multiplicative")
def check_action(ctx):
    params = ctx.params
    pairs = list(zip(ctx.elements, ctx.matrices))
    for _ in range(ctx.trials):
        (M1, A1), (M2, A2) = ctx.rng.choices(pairs, k=2)
        x, y = ctx.rng.randrange(params.p), ctx.rng.randrange(params.modulus)
        v, w = make_point(params, x, y), make_point(params, *naive_apply(M2, x, y))
        ok = (
            apply(mat_mul(A1, A2), v) == apply(A1, apply(A2, v))
            and apply(mat_add(A1, A2), v) == point_add(apply(A1, v), apply(A2, v))
            and apply(A1, point_add(v, w)) == point_add(apply(A1, v), apply(A1, w))
        )
        yield (A1, A2, v), ok


@check("ring associativity and distributivity")
def check_ring_axioms(ctx):
    for _ in range(ctx.trials):
        A, B, C = ctx.rng.choices(ctx.matrices, k=3)
        ok = (
            mat_mul(mat_mul(A, B), C) == mat_mul(A, mat_mul(B, C))
            and mat_mul(A, mat_add(B, C)) == mat_add(mat_mul(A, B), mat_mul(A, C))
            and mat_mul(mat_add(A, B), C) == mat_add(mat_mul(A, C), mat_mul(B, C))
        )
        yield (A, B, C), ok


@check("census against enumeration")
def check_census(ctx):
    size, units = census(ctx.params)
    p = ctx.params.p
    yield 'size', size == len(ctx.elements)
    yield 'units', units == count_units_bruteforce(ctx.params, budget=len(ctx.elements))
    yield 'density', unit_density(ctx.params) == (1 - Fraction(1, p)) ** 2


def _run(name, func, ctx):
    cases = 0
    for case, ok in func(ctx):
        cases += 1
        if not ok:
            logger.info("check %r failed at %r", name, case)
            return CheckResult(name, False, cases, f"fails at {case!r}")
    logger.info("check %r passed %d cases", name, cases)
    return CheckResult(name, True, cases)


def run_checks(params, budget, trials=10_000, seed=0):
    """Run every registered check; BudgetExceeded when |E| > budget."""
    size = ring_size(params)
    if size > budget:
        logger.warning("verification of %s refused: %d elements, budget %d", params, size, budget)
        raise BudgetExceeded(size, budget)
    elements = list(enumerate_ring(params, budget))
    ctx = Context(
        params=params,
        elements=elements,
        matrices=[from_naive(M) for M in elements],
        rng=random.Random(seed),
        trials=trials,
    )
    return [_run(name, func, ctx) for name, func in CHECKS]

# algebra/endo_iso.py
"""
Matrices of E_{p,p^m} acting on the module Z_p x Z_{p^m}.

A point (x, y) is x*(1_p, 0) + y*(0, 1_{p^m}). A matrix [[a, b], [p^{m-1}c, d]]
sends (1_p, 0) to (a, p^{m-1}c) and (0, 1_{p^m}) to (b, d); the action on
any other point follows by linearity. Matrix multiplication is composition
of these maps.
"""
from dataclasses import dataclass

from ..exceptions import NotAnEndomorphism, ParamMismatch
from .endo_ring import EndoMatrix
from .zp_digits import (
    Digits, RingParams, add, digits_from_int, digits_one, digits_top, digits_zero,
    mul, neg, residue,
)


@dataclass(frozen=True)
class ModulePoint:
    params: RingParams
    x: int
    y: Digits

    def __post_init__(self):
        if not 0 <= self.x < self.params.p:
            raise ValueError(f"x = {self.x} must lie in [0, {self.params.p})")
        if self.y.params != self.params:
            raise ParamMismatch(self.params, self.y.params)


def _check_same(left, right):
    if left.params != right.params:
        raise ParamMismatch(left.params, right.params)


def make_point(params, x, y):
    return ModulePoint(params, x % params.p, digits_from_int(params, y))


def generators(params):
    """(1_p, 0) and (0, 1_{p^m})."""
    return (
        ModulePoint(params, 1, digits_zero(params)),
        ModulePoint(params, 0, digits_one(params)),
    )


def point_add(v1, v2):
    _check_same(v1, v2)
    return ModulePoint(v1.params, (v1.x + v2.x) % v1.params.p, add(v1.y, v2.y))


def point_neg(v):
    return ModulePoint(v.params, -v.x % v.params.p, neg(v.y))


def point_scale(n, v):
    return ModulePoint(v.params, n * v.x % v.params.p, mul(digits_from_int(v.params, n), v.y))


def apply(A, v):
    """
    The image of v under A: x*(a, p^{m-1}c) + y*(b, d).

    b lives in Z_p, so it meets y through y mod p.
    """
    _check_same(A, v)
    params = A.params
    return ModulePoint(
        params,
        (A.a * v.x + A.b * residue(v.y)) % params.p,
        add(digits_top(params, A.c * v.x), mul(A.d, v.y)),
    )


def matrix_from_images(image_e1, image_e2):
    """
    The matrix whose map sends (1_p, 0) to image_e1 and (0, 1_{p^m}) to image_e2.

    p*(1_p, 0) = 0 forces p times the second coordinate of image_e1 to vanish,
    i.e. that coordinate is a multiple of p^{m-1}.
    """
    _check_same(image_e1, image_e2)
    e = image_e1.y
    if any(e.u[:-1]):
        raise NotAnEndomorphism(
            f"{int(e)} is not a multiple of {e.params.top_place}; "
            "(1_p, 0) cannot map to it"
        )
    return EndoMatrix(image_e1.params, image_e1.x, image_e2.x, e.u[-1], image_e2.y)

# algebra/__init__.py
# The ring library: digit arithmetic, the matrix ring, its action on
# Z_p x Z_{p^m}, and the brute-force oracle the tests check them against.

from .zp_digits import (
    WORD_MAX, RingParams, Digits, CarryState, carry_bound, make_params,
    digits_from_int, digits_to_int, digits_zero, digits_one, digits_top,
    residue, add, neg, sub, mul, inv, is_unit,
)
from .endo_ring import (
    EndoMatrix, IntPoly, AnnPoly, make_matrix, mat_zero, mat_identity,
    mat_add, mat_neg, mat_sub, mat_mul, scalar_mul, mat_pow,
    invertibility_failure, is_invertible, inverse_direct, annihilating_poly,
    inverse_via_minpoly, minimal_poly, poly_eval, census, unit_density,
)
from .endo_iso import (
    ModulePoint, make_point, generators, point_add, point_neg, point_scale,
    apply, matrix_from_images,
)
from .oracle import (
    DEFAULT_ENUMERATION_BUDGET, DEFAULT_PAIR_BUDGET, NaiveMatrix, euclid_inv,
    naive_zero, naive_identity, naive_mat_add, naive_mat_mul, naive_scalar,
    naive_apply, naive_poly_eval, ring_size, enumerate_ring,
    find_inverse_bruteforce, count_units_bruteforce, to_naive, from_naive,
)

__all__ = [
    # Z_{p^m} digits
    'WORD_MAX', 'RingParams', 'Digits', 'CarryState', 'carry_bound', 'make_params',
    'digits_from_int', 'digits_to_int', 'digits_zero', 'digits_one', 'digits_top',
    'residue', 'add', 'neg', 'sub', 'mul', 'inv', 'is_unit',

    # E_{p,p^m}
    'EndoMatrix', 'IntPoly', 'AnnPoly', 'make_matrix', 'mat_zero', 'mat_identity',
    'mat_add', 'mat_neg', 'mat_sub', 'mat_mul', 'scalar_mul', 'mat_pow',
    'invertibility_failure', 'is_invertible', 'inverse_direct', 'annihilating_poly',
    'inverse_via_minpoly', 'minimal_poly', 'poly_eval', 'census', 'unit_density',

    # Action on Z_p x Z_{p^m}
    'ModulePoint', 'make_point', 'generators', 'point_add', 'point_neg', 'point_scale',
    'apply', 'matrix_from_images',

    # Oracle
    'DEFAULT_ENUMERATION_BUDGET', 'DEFAULT_PAIR_BUDGET', 'NaiveMatrix', 'euclid_inv',
    'naive_zero', 'naive_identity', 'naive_mat_add', 'naive_mat_mul', 'naive_scalar',
    'naive_apply', 'naive_poly_eval', 'ring_size', 'enumerate_ring',
    'find_inverse_bruteforce', 'count_units_bruteforce', 'to_naive', 'from_naive',
]

import random

from django.test import SimpleTestCase

from endoapp.algebra import (
    Digits, add, carry_bound, digits_from_int, digits_one, digits_to_int, digits_top,
    digits_zero, euclid_inv, inv, is_unit, make_params, mul, neg, residue, sub,
)
from endoapp.algebra.zp_digits import CarryState
from endoapp.exceptions import (
    BadExponent, NotAUnit, NotPrime, Overflow, ParamMismatch, ParameterError,
)

SMALL_PARAMS = [(2, 2), (2, 3), (3, 2), (5, 2), (7, 2), (3, 4), (2, 6)]
# Swept over every pair of elements; the largest ring here has 625 of them.
PAIRWISE_PARAMS = SMALL_PARAMS + [(5, 3), (7, 3), (3, 5), (2, 8), (5, 4)]


class RingParamsTests(SimpleTestCase):
    def test_modulus(self):
        params = make_params(5, 3)
        self.assertEqual((params.p, params.m, params.modulus), (5, 3, 125))
        self.assertEqual(params.top_place, 25)
        self.assertEqual(str(params), "(p=5, m=3)")

    def test_rejects_composite_p(self):
        for p in (0, 1, 4, 9, 15):
            with self.subTest(p=p), self.assertRaises(NotPrime):
                make_params(p, 2)

    def test_rejects_m_below_two(self):
        with self.assertRaises(BadExponent):
            make_params(5, 1)

    def test_rejects_moduli_wider_than_a_word(self):
        with self.assertRaises(Overflow):
            make_params(2, 64)
        with self.assertRaises(Overflow):
            make_params(1_000_003, 4)
        self.assertEqual(make_params(2, 62).modulus, 2**62)

    def test_parameter_errors_share_a_base(self):
        for p, m in ((4, 2), (5, 1), (2, 100)):
            with self.subTest(p=p, m=m), self.assertRaises(ParameterError):
                make_params(p, m)

    def test_equal_params_compare_equal(self):
        self.assertEqual(make_params(5, 3), make_params(5, 3))
        self.assertNotEqual(make_params(5, 3), make_params(5, 2))


class ConversionTests(SimpleTestCase):
    def setUp(self):
        self.params = make_params(5, 3)

    def test_digits_of_67(self):
        self.assertEqual(digits_from_int(self.params, 67).u, (2, 3, 2))

    def test_digits_to_int(self):
        self.assertEqual(digits_to_int(Digits(self.params, (2, 3, 2))), 67)
        self.assertEqual(int(Digits(self.params, (4, 2, 4))), 114)

    def test_negative_and_large_inputs_are_reduced(self):
        self.assertEqual(int(digits_from_int(self.params, -1)), 124)
        self.assertEqual(int(digits_from_int(self.params, 125 + 67)), 67)

    def test_round_trip(self):
        for p, m in SMALL_PARAMS + [(5, 5)]:
            params = make_params(p, m)
            with self.subTest(p=p, m=m):
                for n in range(params.modulus):
                    self.assertEqual(digits_to_int(digits_from_int(params, n)), n)

    def test_non_canonical_digits_are_rejected(self):
        with self.assertRaises(ValueError):
            Digits(self.params, (5, 0, 0))
        with self.assertRaises(ValueError):
            Digits(self.params, (1, 0))

    def test_constants(self):
        self.assertEqual(int(digits_zero(self.params)), 0)
        self.assertEqual(int(digits_one(self.params)), 1)
        self.assertEqual(int(digits_top(self.params, 3)), 75)
        self.assertEqual(int(digits_top(self.params, 8)), 75)
        self.assertEqual(residue(digits_from_int(self.params, 67)), 2)


class ArithmeticTests(SimpleTestCase):
    def setUp(self):
        self.params = make_params(5, 3)

    def digits(self, n):
        return digits_from_int(self.params, n)

    def test_examples(self):
        self.assertEqual(int(add(self.digits(67), self.digits(114))), 56)
        self.assertEqual(int(neg(self.digits(114))), 11)
        self.assertEqual(neg(self.digits(114)).u, (1, 2, 0))
        self.assertEqual(int(mul(self.digits(34), self.digits(114))), 1)
        self.assertEqual(int(sub(self.digits(3), self.digits(5))), 123)

    def test_all_pairs_against_integers(self):
        for p, m in PAIRWISE_PARAMS:
            params = make_params(p, m)
            modulus = params.modulus
            values = [digits_from_int(params, n) for n in range(modulus)]
            with self.subTest(p=p, m=m):
                for n1, d1 in enumerate(values):
                    self.assertEqual(int(neg(d1)), -n1 % modulus)
                    for n2, d2 in enumerate(values):
                        self.assertEqual(int(add(d1, d2)), (n1 + n2) % modulus)
                        self.assertEqual(int(mul(d1, d2)), n1 * n2 % modulus)

    def test_largest_small_modulus_against_integers(self):
        # 3125 elements: unary operations on all of them. The 9.7 million
        # pairs are not swept; each element meets 40 fixed random partners.
        params = make_params(5, 5)
        modulus = params.modulus
        rng = random.Random(5)
        partners = rng.sample(range(modulus), 40)
        for n in range(modulus):
            d = digits_from_int(params, n)
            self.assertEqual(int(neg(d)), -n % modulus)
            for k in partners:
                e = digits_from_int(params, k)
                self.assertEqual(int(add(d, e)), (n + k) % modulus)
                self.assertEqual(int(mul(d, e)), n * k % modulus)

    def test_ring_axioms_randomized(self):
        rng = random.Random(0)
        params = make_params(97, 3)
        one = digits_one(params)
        zero = digits_zero(params)
        for _ in range(10_000):
            x, y, z = (digits_from_int(params, rng.randrange(params.modulus)) for _ in range(3))
            self.assertEqual(add(add(x, y), z), add(x, add(y, z)))
            self.assertEqual(mul(mul(x, y), z), mul(x, mul(y, z)))
            self.assertEqual(add(x, y), add(y, x))
            self.assertEqual(mul(x, y), mul(y, x))
            self.assertEqual(mul(x, add(y, z)), add(mul(x, y), mul(x, z)))
            self.assertEqual(add(x, neg(x)), zero)
            if is_unit(x):
                self.assertEqual(mul(x, inv(x)), one)

    def test_mismatched_params(self):
        with self.assertRaises(ParamMismatch):
            add(digits_one(make_params(5, 3)), digits_one(make_params(5, 2)))
        with self.assertRaises(ParamMismatch):
            mul(digits_one(make_params(5, 3)), digits_one(make_params(7, 3)))


class InverseTests(SimpleTestCase):
    def setUp(self):
        self.params = make_params(5, 3)

    def test_inverse_of_34(self):
        s_inv = inv(digits_from_int(self.params, 34))
        self.assertEqual(int(s_inv), 114)
        self.assertEqual(s_inv.u, (4, 2, 4))

    def test_inverse_of_67(self):
        self.assertEqual(int(inv(digits_from_int(self.params, 67))), 28)

    def test_non_units(self):
        for n in (0, 5, 25, 100):
            d = digits_from_int(self.params, n)
            with self.subTest(n=n):
                self.assertFalse(is_unit(d))
                with self.assertRaises(NotAUnit):
                    inv(d)
        self.assertTrue(is_unit(digits_from_int(self.params, 67)))

    def test_against_extended_euclid(self):
        for p, m in SMALL_PARAMS + [(5, 5)]:
            params = make_params(p, m)
            with self.subTest(p=p, m=m):
                for n in range(params.modulus):
                    d = digits_from_int(params, n)
                    if n % p:
                        self.assertEqual(int(inv(d)), euclid_inv(n, params.modulus))
                    else:
                        self.assertFalse(is_unit(d))

    def test_unit_criterion_by_search(self):
        for p, m in [(2, 3), (3, 2), (5, 2)]:
            params = make_params(p, m)
            with self.subTest(p=p, m=m):
                for n in range(params.modulus):
                    has_inverse = any(n * k % params.modulus == 1 for k in range(params.modulus))
                    self.assertEqual(is_unit(digits_from_int(params, n)), has_inverse)

    def test_printed_recurrence_diverges(self):
        # Carrying out of position k >= 1 only the cross terms, without
        # u_0*s_k, keeps s_1 right but loses a carry into s_2: the result
        # for 34^{-1} mod 125 is 64, which is not an inverse.
        params = self.params
        p = params.p
        u = digits_from_int(params, 34).u
        u0_inv = pow(u[0], -1, p)
        s = [u0_inv]
        carry = u[0] * s[0] // p
        for k in range(1, params.m):
            partial = sum(u[k - j] * s[j] for j in range(k)) + carry
            s.append(-u0_inv * partial % p)
            carry = partial // p
        literal = s[0] + p * s[1] + p * p * s[2]
        self.assertEqual(s[:2], [4, 2])
        self.assertEqual(literal, 64)
        self.assertNotEqual(34 * literal % 125, 1)
        self.assertEqual(int(inv(digits_from_int(params, 34))), 114)


class CarryBoundTests(SimpleTestCase):
    def test_carry_state(self):
        state = CarryState(13, 5)
        self.assertEqual((state.digit, state.carry), (3, 2))

    def test_bound_holds_where_the_squared_bound_fails(self):
        params = make_params(2, 5)
        self.assertEqual(carry_bound(params), 12)
        # position 4 of 31*31 accumulates five ones plus a carry of 3
        self.assertGreater(8, params.m * (params.p - 1) ** 2 + params.p)
        self.assertEqual(int(mul(digits_from_int(params, 31), digits_from_int(params, 31))), 961 % 32)

    def test_worst_case_products_stay_in_bound(self):
        for p, m in [(2, 8), (3, 6), (97, 4), (7, 10)]:
            params = make_params(p, m)
            top = digits_from_int(params, -1)
            with self.subTest(p=p, m=m):
                self.assertEqual(int(mul(top, top)), 1)
                self.assertEqual(int(add(top, top)), params.modulus - 2)

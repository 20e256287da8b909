from django.test import SimpleTestCase

from endoapp.algebra import (
    IntPoly, inverse_via_minpoly, make_matrix, make_params, make_point, mat_add,
    mat_identity, mat_mul, mat_pow, scalar_mul,
)
from endoapp.exceptions import LiteralError, NotAUnit, NotInvertible, TypeMismatch, UnboundVariable
from endoapp.expressions import Session, kind_of
from endoapp.formatting import format_matrix


class SessionTests(SimpleTestCase):
    def setUp(self):
        self.params = make_params(5, 3)
        self.session = Session(self.params)
        self.A = make_matrix(self.params, 2, 3, 3, 67)

    def execute(self, source):
        return self.session.execute(source)

    def test_let_binds_and_returns_nothing(self):
        self.assertIsNone(self.execute("let A = [[2,3],[75,67]]"))
        self.assertEqual(self.session.lookup('A'), self.A)
        self.assertEqual(self.execute("A"), self.A)

    def test_rebinding(self):
        self.execute("let A = [[2,3],[75,67]]")
        self.execute("let A = A * A")
        self.assertEqual(self.execute("A"), mat_mul(self.A, self.A))

    def test_unbound_variable(self):
        with self.assertRaises(UnboundVariable) as caught:
            self.execute("B + [[1,0],[0,1]]")
        self.assertEqual(caught.exception.name, 'B')

    def test_worked_example_inverse(self):
        expected = make_matrix(self.params, 3, 3, 3, 103)
        self.assertEqual(self.execute("inv([[2,3],[75,67]])"), expected)
        self.execute("let A = [[2,3],[75,67]]")
        self.assertEqual(self.execute("A * inv(A)"), mat_identity(self.params))
        self.assertEqual(self.execute("inv(A) * A"), mat_identity(self.params))

    def test_minpoly_and_annpoly(self):
        self.execute("let A = [[2,3],[75,67]]")
        self.assertEqual(self.execute("minpoly(A)"), IntPoly((34, 56, 1)))
        self.assertEqual(self.execute("annpoly(A)"), IntPoly((34, 56, 1)))
        self.assertEqual(self.execute("minpoly([[1,0],[0,1]])"), IntPoly((124, 1)))
        self.assertEqual(self.execute("annpoly([[1,0],[0,1]])"), IntPoly((1, 123, 1)))

    def test_not_invertible(self):
        with self.assertRaises(NotInvertible) as caught:
            self.execute("inv([[0,1],[0,1]])")
        self.assertEqual(caught.exception.criterion, "a = 0")

    def test_arithmetic_matches_library_calls(self):
        self.execute("let A = [[2,3],[75,67]]")
        self.execute("let B = [[1,4],[50,9]]")
        B = make_matrix(self.params, 1, 4, 2, 9)
        self.assertEqual(self.execute("A + B * A"), mat_add(self.A, mat_mul(B, self.A)))
        self.assertEqual(self.execute("(A + B) * A"), mat_mul(mat_add(self.A, B), self.A))
        self.assertEqual(self.execute("A^3 - B"), mat_add(mat_pow(self.A, 3), scalar_mul(-1, B)))
        self.assertEqual(self.execute("neg(A) + A"), make_matrix(self.params, 0, 0, 0, 0))
        self.assertEqual(self.execute("inv(A)"), inverse_via_minpoly(self.A))

    def test_scalars_meet_matrices(self):
        self.execute("let A = [[2,3],[75,67]]")
        self.assertEqual(self.execute("A + 56"), make_matrix(self.params, 3, 3, 3, 123))
        self.assertEqual(self.execute("11 * (A + 56)"), make_matrix(self.params, 3, 3, 3, 103))
        self.assertEqual(self.execute("A * 11"), scalar_mul(11, self.A))
        self.assertEqual(self.execute("A^2 + 56*A + 34"), make_matrix(self.params, 0, 0, 0, 0))

    def test_scalar_arithmetic(self):
        self.assertEqual(self.execute("inv(34)"), 114)
        self.assertEqual(self.execute("neg(inv(34))"), 11)
        self.assertEqual(self.execute("100 + 50"), 25)
        self.assertEqual(self.execute("3 - 5"), 123)
        self.assertEqual(self.execute("2^7"), 3)
        with self.assertRaises(NotAUnit):
            self.execute("inv(25)")

    def test_reduction_is_explicit(self):
        self.execute("let A = [[2,3],[75,67]]")
        self.assertEqual(self.execute("A + mod(130)"), self.execute("A + 5"))
        self.assertEqual(self.execute("mod(-1) * A"), self.execute("neg(A)"))
        with self.assertRaises(LiteralError):
            self.execute("A + 130")

    def test_points(self):
        self.execute("let A = [[2,3],[75,67]]")
        self.execute("let v = (1, 1)")
        self.assertEqual(self.execute("apply(A, v)"), make_point(self.params, 0, 17))
        self.assertEqual(self.execute("apply(A, (1, 0)) + apply(A, (0, 1))"), make_point(self.params, 0, 17))
        self.assertEqual(self.execute("v - v"), make_point(self.params, 0, 0))
        self.assertEqual(self.execute("3 * v"), make_point(self.params, 3, 3))
        self.assertEqual(self.execute("neg(v)"), make_point(self.params, 4, 124))

    def test_type_mismatches(self):
        self.execute("let A = [[2,3],[75,67]]")
        self.execute("let v = (1, 1)")
        for source in ("A + v", "v * A", "v * v", "apply(v, A)", "inv(v)", "minpoly(3)", "v^2", "minpoly(A) + A"):
            with self.subTest(source=source), self.assertRaises(TypeMismatch):
                self.execute(source)

    def test_polynomials_cannot_be_bound(self):
        with self.assertRaises(TypeMismatch):
            self.execute("let f = minpoly([[2,3],[75,67]])")
        self.assertEqual(self.session.bindings, {})

    def test_kinds(self):
        self.assertEqual(kind_of(self.A), 'matrix')
        self.assertEqual(kind_of(make_point(self.params, 0, 0)), 'point')
        self.assertEqual(kind_of(IntPoly((1, 1))), 'poly')
        self.assertEqual(kind_of(7), 'scalar')

    def test_printed_matrices_parse_back(self):
        self.execute("let A = [[2,3],[75,67]]")
        for source in ("A", "inv(A)", "A^7 + 3", "neg(A) * A"):
            with self.subTest(source=source):
                value = self.execute(source)
                literal = format_matrix(value).splitlines()[0]
                self.assertEqual(self.execute(literal), value)

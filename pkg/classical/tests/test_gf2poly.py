from django.test import SimpleTestCase, override_settings

from classical.gf2poly import (
    MINUS_INFINITY,
    Poly2,
    coset_representatives,
    cyclic_modulus,
    cyclic_reduce,
    cyclotomic_coset,
    field_new,
    gcd_identity,
    idempotent,
    is_irreducible,
    minimal_polynomial,
    poly_divides,
    poly_divmod,
    poly_eval,
    poly_gcd,
    poly_mod,
    poly_mul,
)
from main.exceptions import ConstructionError


class PolynomialArithmeticTests(SimpleTestCase):
    def test_zero_polynomial_has_minus_infinity_degree(self):
        self.assertEqual(Poly2(0).degree, MINUS_INFINITY)
        self.assertEqual(Poly2(0).coeffs, [])
        self.assertEqual(Poly2(0b1011).degree, 3)

    def test_square_of_z_plus_one(self):
        self.assertEqual(poly_mul(Poly2(0b11), Poly2(0b11)), Poly2(0b101))

    def test_divmod_reconstructs_dividend(self):
        a, b = Poly2(0b1101101110), Poly2(0b1011)
        q, r = poly_divmod(a, b)
        self.assertEqual(q * b + r, a)
        self.assertLess(r.degree, b.degree)

    def test_division_by_zero(self):
        with self.assertRaises(ZeroDivisionError):
            poly_mod(Poly2(0b101), Poly2(0))

    def test_modulus_reduces_to_zero(self):
        self.assertEqual(poly_mod(cyclic_modulus(31), cyclic_modulus(31)), Poly2(0))

    def test_gcd(self):
        a = Poly2(0b11) * Poly2(0b111)
        b = Poly2(0b11) * Poly2(0b1011)
        self.assertEqual(poly_gcd(a, b), Poly2(0b11))

    def test_cyclic_reduce_folds_exponents(self):
        self.assertEqual(cyclic_reduce(Poly2.from_exponents([0, 7, 9]), 7), Poly2.from_exponents([2]))

    def test_irreducibility(self):
        self.assertTrue(is_irreducible(Poly2(0b100101)))
        self.assertFalse(is_irreducible(Poly2(0b111111)))

    def test_hex_round_trip(self):
        p = Poly2(0b100101)
        self.assertEqual(p.to_hex(), "25")
        self.assertEqual(Poly2.from_hex("25"), p)
        self.assertEqual(str(p), "z^5 + z^2 + 1")

    def test_gcd_identity(self):
        for m in (4, 6, 8, 10):
            self.assertEqual(gcd_identity(m), (1, 1))


class FieldTableTests(SimpleTestCase):
    def setUp(self):
        self.F = field_new(5, Poly2(0b100101))

    def test_tables_are_inverse(self):
        self.assertEqual(self.F.n, 31)
        self.assertEqual(self.F.power(0), 1)
        self.assertEqual(self.F.power(31), 1)
        for x in range(1, 32):
            self.assertEqual(self.F.power(int(self.F.log[x])), x)
        self.assertEqual(len({self.F.power(i) for i in range(31)}), 31)

    def test_alpha_is_root_of_modulus(self):
        self.assertEqual(poly_eval(self.F, self.F.modulus, self.F.alpha), 0)

    def test_default_modulus(self):
        self.assertEqual(field_new(5).modulus, Poly2(0b100101))

    @override_settings(QGP_PRIMITIVE_POLYNOMIALS={5: 0b111101})
    def test_modulus_override(self):
        self.assertEqual(field_new(5).modulus, Poly2(0b111101))

    def test_degenerate_field(self):
        with self.assertRaises(ConstructionError):
            field_new(1, Poly2(0b11))

    def test_reducible_modulus(self):
        with self.assertRaises(ConstructionError):
            field_new(5, Poly2(0b111111))

    def test_irreducible_but_not_primitive(self):
        # z^4 + z^3 + z^2 + z + 1 has order 5
        with self.assertRaises(ConstructionError):
            field_new(4, Poly2(0b11111))

    def test_arithmetic(self):
        F = self.F
        a = F.power(7)
        self.assertEqual(F.mul(a, F.inv(a)), 1)
        self.assertEqual(F.pow(a, 5), F.power(35))
        self.assertEqual(F.pow(0, 3), 0)

    def test_poly_eval(self):
        F = self.F
        self.assertEqual(poly_eval(F, Poly2(0b11), 1), 0)
        self.assertEqual(poly_eval(F, Poly2.monomial(3), F.power(2)), F.power(6))


class CyclotomicTests(SimpleTestCase):
    def test_cosets_mod_31(self):
        self.assertEqual(cyclotomic_coset(31, 0).members, (0,))
        self.assertEqual(cyclotomic_coset(31, 1).members, (1, 2, 4, 8, 16))
        self.assertEqual(cyclotomic_coset(31, 3).members, (3, 6, 12, 17, 24))
        self.assertEqual(cyclotomic_coset(31, 24).representative, 3)

    def test_even_modulus_is_rejected(self):
        with self.assertRaises(ConstructionError):
            cyclotomic_coset(32, 1)

    def test_minimal_polynomials(self):
        F = field_new(5, Poly2(0b100101))
        self.assertEqual(minimal_polynomial(F, 0), Poly2(0b11))
        self.assertEqual(minimal_polynomial(F, 1), F.modulus)
        mu3 = minimal_polynomial(F, 3)
        self.assertEqual(mu3.degree, 5)
        for j in (3, 6, 12, 24, 17):
            self.assertEqual(poly_eval(F, mu3, F.power(j)), 0)

    def test_minimal_polynomials_divide_cyclic_modulus(self):
        for w in (5, 7):
            F = field_new(w)
            for i in coset_representatives(F.n):
                mu = minimal_polynomial(F, i)
                self.assertTrue(poly_divides(mu, cyclic_modulus(F.n)))
                self.assertEqual(mu.degree, len(cyclotomic_coset(F.n, i).members))

    def test_product_of_three_minimal_polynomials(self):
        F = field_new(5)
        g = minimal_polynomial(F, 1) * minimal_polynomial(F, 3) * minimal_polynomial(F, 5)
        self.assertEqual(g.degree, 15)
        self.assertTrue(poly_divides(g, cyclic_modulus(31)))


class IdempotentTests(SimpleTestCase):
    def setUp(self):
        self.F = field_new(5)

    def test_theta_zero_is_all_ones(self):
        self.assertEqual(idempotent(self.F, 0), Poly2((1 << 31) - 1))

    def test_theta_one_evaluations(self):
        F = self.F
        theta = idempotent(F, 1)
        self.assertEqual(poly_eval(F, theta, F.alpha), 1)
        self.assertEqual(poly_eval(F, theta, F.power(3)), 0)
        self.assertEqual(poly_eval(F, theta, 1), 0)

    def test_idempotents_square_to_themselves(self):
        F = self.F
        total = Poly2(0)
        for i in coset_representatives(F.n):
            theta = idempotent(F, i)
            self.assertEqual(cyclic_reduce(theta * theta, F.n), theta)
            total = total + theta
        # Each evaluation point is covered by exactly one idempotent
        self.assertEqual(total, Poly2(1))

from django.test import SimpleTestCase

import numpy as np

from classical.gf2poly import Poly2, field_new, idempotent, minimal_polynomial, poly_eval
from classical.lincode import (
    BitMatrix,
    BitVector,
    LinearCode,
    contains,
    coset_reps_gp,
    cyclic_code,
    dual,
    extend_parity,
    ideal_code,
    reed_muller,
    span_code,
    u_u_plus_v,
)
from classical.cosetcode import gp_tower
from main.exceptions import ConstructionError


def repetition(n: int) -> LinearCode:
    return LinearCode.from_generator(np.ones((1, n), dtype=np.uint8), label="repetition")


def hamming_7_4() -> LinearCode:
    return cyclic_code(7, Poly2(0b1011), label="Hamming")


class BitVectorTests(SimpleTestCase):
    def test_padding_is_rejected(self):
        with self.assertRaises(ValueError):
            BitVector(3, 0b1000)

    def test_array_round_trip(self):
        v = BitVector.from_support(70, [0, 5, 69])
        self.assertEqual(v.weight, 3)
        self.assertEqual(v.support, [0, 5, 69])
        self.assertEqual(BitVector.from_array(v.to_array()), v)

    def test_hex_layout(self):
        v = BitVector.from_support(8, [0, 4])
        self.assertEqual(v.to_hex(), "11")
        self.assertEqual(BitVector.from_hex(8, "11"), v)

    def test_concat_and_slice(self):
        u, w = BitVector(3, 0b101), BitVector(2, 0b10)
        joined = u.concat(w)
        self.assertEqual(joined, BitVector(5, 0b10101))
        self.assertEqual(joined.slice(3, 5), w)


class LinearCodeTests(SimpleTestCase):
    def test_parity_code(self):
        C = cyclic_code(7, Poly2(0b11))
        self.assertEqual((C.n, C.k), (7, 6))
        self.assertTrue(C.contains_vector(BitVector.from_support(7, [1, 4])))
        self.assertFalse(C.contains_vector(BitVector.from_support(7, [1])))

    def test_generator_rows_are_shifts(self):
        g = Poly2(0b1011)
        C = cyclic_code(7, g)
        self.assertEqual(C.generator.rows[2], BitVector(7, g.value << 2))

    def test_non_divisor_is_rejected(self):
        with self.assertRaises(ConstructionError):
            cyclic_code(7, Poly2(0b111))

    def test_hamming_31(self):
        F = field_new(5)
        C = cyclic_code(31, minimal_polynomial(F, 1))
        self.assertEqual(C.k, 26)
        columns = C.column_syndromes()
        # No zero and no repeated columns: distance at least 3
        self.assertEqual(len(set(columns.tolist())), 31)
        self.assertNotIn(0, columns.tolist())
        extended = extend_parity(C)
        self.assertEqual((extended.n, extended.k), (32, 26))

    def test_extension_of_even_weight_code(self):
        extended = extend_parity(cyclic_code(7, Poly2(0b11)))
        self.assertEqual((extended.n, extended.k), (8, 6))
        self.assertFalse(extended.generator.array[:, -1].any())
        self.assertTrue((extended.generator.array.sum(axis=1) % 2 == 0).all())

    def test_u_u_plus_v_small(self):
        rep2 = repetition(2)
        C = u_u_plus_v(rep2, rep2)
        self.assertEqual((C.n, C.k), (4, 2))
        for word in ([1, 1, 1, 1], [0, 0, 1, 1], [1, 1, 0, 0]):
            self.assertTrue(C.contains_vector(BitVector.from_array(word)))
        self.assertFalse(C.contains_vector(BitVector.from_array([1, 0, 1, 0])))

    def test_u_u_plus_v_length_mismatch(self):
        with self.assertRaises(ConstructionError):
            u_u_plus_v(repetition(2), repetition(3))

    def test_dual(self):
        even = dual(repetition(8))
        self.assertEqual(even.k, 7)
        self.assertTrue(contains(even, dual(dual(even))))
        self.assertTrue(contains(dual(dual(even)), even))
        self.assertEqual(even.redundancy, 1)
        ones = repetition(8).generator.rows[0]
        self.assertTrue(all(row.dot(ones) == 0 for row in even.generator.rows))

    def test_span_code_drops_dependent_rows(self):
        rows = [BitVector(4, 0b0011), BitVector(4, 0b0110), BitVector(4, 0b0101)]
        self.assertEqual(span_code(rows, 4).k, 2)

    def test_zero_dimensional_code(self):
        C = ideal_code(7, Poly2(0))
        self.assertEqual(C.k, 0)
        self.assertEqual(C.parity_check.nrows, 7)

    def test_ideal_code_uses_gcd(self):
        # (z + 1)(z^2 + 1) generates the same ideal as z + 1
        C = ideal_code(7, Poly2(0b11) * Poly2(0b101))
        self.assertEqual(C.k, 6)

    def test_random_codewords(self):
        C = hamming_7_4()
        rng = np.random.default_rng(7)
        for _ in range(20):
            self.assertTrue(C.contains_vector(C.random_codeword(rng)))

    def test_bit_matrix_combine(self):
        M = BitMatrix.from_rows([BitVector(3, 0b011), BitVector(3, 0b110)], 3)
        self.assertEqual(M.combine([1, 1]), BitVector(3, 0b101))
        self.assertEqual(M.rank, 2)


class ReedMullerTests(SimpleTestCase):
    def test_dimensions(self):
        self.assertEqual(reed_muller(0, 3).k, 1)
        self.assertEqual(reed_muller(3, 6).k, 42)
        self.assertEqual(reed_muller(4, 6).k, 57)

    def test_repetition(self):
        self.assertTrue(reed_muller(0, 3).contains_vector(BitVector(8, 0xFF)))


class GPTowerTests(SimpleTestCase):
    def setUp(self):
        self.tower = gp_tower(6)

    def test_dimensions(self):
        t = self.tower
        self.assertEqual((t.c1.n, t.c1.k), (32, 26))
        self.assertEqual(t.c2.k, 16)
        self.assertEqual(t.c3.k, 21)
        self.assertEqual((t.c_g.n, t.c_g.k), (64, 42))
        self.assertEqual((t.c_p.n, t.c_p.k), (64, 47))

    def test_lattice(self):
        t = self.tower
        self.assertTrue(contains(t.c_p, t.c_g))
        self.assertTrue(contains(t.c_g, dual(t.c_g)))
        self.assertFalse(contains(t.c_g, t.c_p))
        self.assertEqual(dual(t.c_g).k, 22)
        self.assertEqual(reed_muller(3, 6).k, t.c_g.k)

    def test_coset_representatives(self):
        t = self.tower
        F = t.field
        reps = coset_reps_gp(F, 6)
        self.assertEqual(len(reps), 32)
        self.assertFalse(reps[-1])
        self.assertEqual(reps[-1].length, 64)
        theta = idempotent(F, 1)
        first = reps[0]
        self.assertEqual(first.slice(0, 32), BitVector.from_support(32, [0, 31]))
        self.assertEqual(first.slice(32, 64), BitVector(32, theta.value))
        self.assertEqual(poly_eval(F, theta, 1), 0)

    def test_representatives_distinct_modulo_both_codes(self):
        t = self.tower
        for code in (t.c_g, t.c_p):
            self.assertEqual(len({code.syndrome(r) for r in t.reps}), 32)

    def test_field_mismatch(self):
        with self.assertRaises(ConstructionError):
            coset_reps_gp(field_new(6), 6)

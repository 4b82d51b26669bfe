from django.test import SimpleTestCase

import numpy as np

from classical.lincode import BitVector
from main.exceptions import BudgetError, ConstructionError
from quantum.symplectic import (
    AdditiveSympCode,
    SympVector,
    gf4_symbols,
    is_self_orthogonal,
    same_span,
    symp_columns,
    symp_inner,
    symp_min_weight,
    symp_weight_half_sum,
    symplectic_dual,
    symplectic_gram,
)

FIVE_QUBIT = ["XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"]


def five_qubit_stabilizer() -> AdditiveSympCode:
    return AdditiveSympCode.from_rows(5, [SympVector.from_symbols(s) for s in FIVE_QUBIT])


def random_vector(n: int, rng) -> SympVector:
    return SympVector.from_vector(BitVector.from_array(rng.integers(0, 2, 2 * n, dtype=np.uint8)))


class SympVectorTests(SimpleTestCase):
    def test_symbols(self):
        v = SympVector.from_symbols("XYZI")
        self.assertEqual(v.x.support, [0, 1])
        self.assertEqual(v.z.support, [1, 2])
        self.assertEqual(str(v), "XYZI")
        self.assertEqual(v.weight, 3)

    def test_gf4_symbols(self):
        y = SympVector(1, BitVector(1, 1), BitVector(1, 1))
        self.assertEqual(gf4_symbols(y), "Y")
        xz = SympVector(2, BitVector.from_support(2, [0]), BitVector.from_support(2, [1]))
        self.assertEqual(gf4_symbols(xz), "XZ")
        self.assertEqual(gf4_symbols(xz, elements=True), "1 w")
        self.assertEqual(gf4_symbols(SympVector.from_symbols("IY"), elements=True), "0 w^2")

    def test_dict_round_trip(self):
        v = SympVector.from_symbols("ZZIYX")
        self.assertEqual(SympVector.from_dict(5, v.to_dict()), v)
        self.assertEqual(SympVector.from_vector(v.to_vector()), v)

    def test_commutation(self):
        self.assertEqual(symp_inner(SympVector.from_symbols("X"), SympVector.from_symbols("Z")), 1)
        self.assertEqual(symp_inner(SympVector.from_symbols("XX"), SympVector.from_symbols("ZZ")), 0)
        self.assertEqual(symp_inner(SympVector.from_symbols("Y"), SympVector.from_symbols("Y")), 0)

    def test_half_sum_weight(self):
        rng = np.random.default_rng(11)
        for _ in range(200):
            v = random_vector(9, rng)
            self.assertEqual(v.weight, symp_weight_half_sum(v))

    def test_sizes_must_match(self):
        with self.assertRaises(ConstructionError):
            symp_inner(SympVector.zeros(2), SympVector.zeros(3))
        with self.assertRaises(ConstructionError):
            SympVector(3, BitVector.zeros(3), BitVector.zeros(4))


class AdditiveCodeTests(SimpleTestCase):
    def test_five_qubit_stabilizer(self):
        stab = five_qubit_stabilizer()
        self.assertEqual(stab.rank, 4)
        self.assertTrue(is_self_orthogonal(stab))
        self.assertFalse(symplectic_gram(stab).any())

    def test_dual(self):
        stab = five_qubit_stabilizer()
        norm = symplectic_dual(stab)
        self.assertEqual(norm.rank, 6)
        self.assertTrue(norm.contains_code(stab))
        self.assertTrue(same_span(symplectic_dual(norm), stab))
        for v in norm.vectors:
            self.assertEqual(stab.symp_syndrome(v), 0)

    def test_dependent_rows_are_reduced(self):
        rows = [SympVector.from_symbols(s) for s in ("XX", "ZZ", "YY")]
        code = AdditiveSympCode.from_rows(2, rows)
        self.assertEqual(code.rank, 2)
        self.assertTrue(code.contains(SympVector.from_symbols("YY")))
        self.assertFalse(code.contains(SympVector.from_symbols("XI")))

    def test_elements(self):
        stab = five_qubit_stabilizer()
        elements = stab.elements()
        self.assertEqual(len({e.to_vector().bits for e in elements}), 16)
        self.assertTrue(all(stab.contains(e) for e in elements))

    def test_elements_budget(self):
        rows = np.eye(50, dtype=np.uint8)
        with self.assertRaises(BudgetError):
            AdditiveSympCode.from_rows(25, rows).elements()


class SympMinWeightTests(SimpleTestCase):
    def test_five_qubit_normalizer(self):
        norm = symplectic_dual(five_qubit_stabilizer())
        outcome = symp_min_weight(norm, SympVector.zeros(5), 3, exclude_zero=True)
        self.assertTrue(outcome.found)
        self.assertEqual(outcome.weight, 3)
        witness = SympVector.from_vector(outcome.witness)
        self.assertEqual(witness.weight, 3)
        self.assertTrue(norm.contains(witness))

    def test_not_found_below_distance(self):
        norm = symplectic_dual(five_qubit_stabilizer())
        outcome = symp_min_weight(norm, SympVector.zeros(5), 2, exclude_zero=True)
        self.assertFalse(outcome.found)

    def test_coset_weight(self):
        stab = five_qubit_stabilizer()
        shift = SympVector.from_symbols("IIYII")
        outcome = symp_min_weight(stab, shift, 2)
        self.assertEqual(outcome.weight, 1)
        self.assertEqual(SympVector.from_vector(outcome.witness), shift)

    def test_columns_follow_pauli_order(self):
        columns = symp_columns(symplectic_dual(five_qubit_stabilizer()))
        self.assertEqual(columns.shape, (5, 3))
        self.assertEqual(columns.dtype, np.uint64)
        self.assertTrue((columns[:, 2] == columns[:, 0] ^ columns[:, 1]).all())


class WideSympSearchTests(SimpleTestCase):
    """More than 64 check rows: the column syndromes are Python integers."""

    def setUp(self):
        self.g1 = SympVector.from_symbols("XZ" + "I" * 32)
        self.g2 = SympVector.from_symbols("IIYYY" + "I" * 29)
        self.code = AdditiveSympCode.from_rows(34, [self.g1, self.g2])

    def test_columns_are_objects(self):
        self.assertEqual(self.code.check_matrix.shape[0], 66)
        columns = symp_columns(self.code)
        self.assertEqual(columns.dtype, object)
        self.assertEqual(columns[3, 2], columns[3, 0] ^ columns[3, 1])

    def test_min_weight(self):
        outcome = symp_min_weight(self.code, SympVector.zeros(34), 3, exclude_zero=True)
        self.assertEqual(outcome.weight, 2)
        self.assertEqual(SympVector.from_vector(outcome.witness), self.g1)
        self.assertFalse(symp_min_weight(self.code, SympVector.zeros(34), 1, exclude_zero=True).found)

    def test_coset_weight_matches_enumeration(self):
        error = SympVector.from_symbols("I" * 10 + "X" + "I" * 9 + "Y" + "I" * 13)
        for shift in (self.g2 ^ error, self.g1 ^ self.g2 ^ error, error ^ SympVector.from_symbols("Z" + "I" * 33)):
            expected = min((e ^ shift).weight for e in self.code.elements())
            outcome = symp_min_weight(self.code, shift, 3)
            self.assertTrue(outcome.found)
            self.assertEqual(outcome.weight, expected)
            self.assertTrue(self.code.contains(SympVector.from_vector(outcome.witness) ^ shift))

from django.core.exceptions import ValidationError
from django.test import SimpleTestCase

from itertools import product

import numpy as np

from classical.cosetcode import gp_tower
from classical.distsearch import (
    Searcher,
    binary_columns,
    check_budget,
    coset_min_weight,
    coset_min_weights,
    enumerate_patterns,
    min_weight,
    pattern_count,
    search_many,
)
from classical.gf2poly import Poly2
from classical.lincode import BitVector, LinearCode, cyclic_code, extend_parity, reed_muller
from main.exceptions import BudgetError


def extended_hamming():
    return extend_parity(cyclic_code(7, Poly2(0b1011)), label="extended Hamming")


def brute_coset_weight(C, shift) -> int:
    best = C.n + 1
    for message in product((0, 1), repeat=C.k):
        best = min(best, (C.encode(message) ^ shift).weight)
    return best


class PatternEnumerationTests(SimpleTestCase):
    def test_counts_and_order(self):
        columns = np.arange(1, 11, dtype=np.uint64)[:, None]
        patterns = enumerate_patterns(columns, 3)
        self.assertEqual(len(patterns), pattern_count(10, 1, 3))
        self.assertTrue((np.diff(patterns.weights) >= 0).all())
        level = patterns.positions[patterns.weights == 2][:, :2].tolist()
        self.assertEqual(level, sorted(level))

    def test_syndromes(self):
        rng = np.random.default_rng(3)
        columns = rng.integers(0, 2**20, size=(9, 3)).astype(np.uint64)
        patterns = enumerate_patterns(columns, 2)
        self.assertEqual(len(patterns), pattern_count(9, 3, 2))
        for row in rng.integers(0, len(patterns), size=30):
            expected = np.uint64(0)
            for p, s in zip(patterns.positions[row], patterns.symbols[row]):
                if p >= 0:
                    expected ^= columns[p, s]
            self.assertEqual(patterns.syndromes[row], expected)

    def test_budget(self):
        self.assertEqual(check_budget(64, 1, 7, budget=10**7), 679121 + 43745)
        with self.assertRaises(BudgetError):
            check_budget(64, 1, 7, budget=10**5)
        with self.assertRaises(BudgetError):
            check_budget(8, 1, 0, budget=0)


class BinarySearchTests(SimpleTestCase):
    def setUp(self):
        self.C = extended_hamming()

    def test_min_weight(self):
        self.assertFalse(min_weight(self.C, 3).found)
        outcome = min_weight(self.C, 4)
        self.assertTrue(outcome.found)
        self.assertEqual(outcome.weight, 4)
        self.assertTrue(self.C.contains_vector(outcome.witness))
        self.assertEqual(outcome.witness.weight, 4)

    def test_shift_in_code(self):
        shift = self.C.generator.rows[0]
        outcome = coset_min_weight(self.C, shift, 4)
        self.assertEqual((outcome.found, outcome.weight), (True, 0))
        self.assertFalse(outcome.witness)

    def test_unit_shift(self):
        shift = BitVector.unit(8, 0)
        outcome = coset_min_weight(self.C, shift, 3)
        self.assertEqual(outcome.weight, 1)
        self.assertEqual(outcome.witness, shift)

    def test_radius_beyond_length(self):
        with self.assertRaises(ValidationError):
            min_weight(self.C, 9)

    def test_deterministic_and_monotone(self):
        first = min_weight(self.C, 5)
        self.assertEqual(min_weight(self.C, 5), first)
        for radius in (6, 7, 8):
            self.assertEqual(min_weight(self.C, radius).weight, 4)

    def test_budget_error(self):
        with self.assertRaises(BudgetError):
            min_weight(self.C, 4, budget=3)

    def test_reed_muller_cosets_match_enumeration(self):
        C = reed_muller(1, 4)
        rng = np.random.default_rng(5)
        searcher = Searcher(C.column_syndromes()[:, None], 6)
        for _ in range(40):
            shift = BitVector.from_array(rng.integers(0, 2, size=16))
            expected = brute_coset_weight(C, shift)
            outcome = searcher.search(C.syndrome(shift))
            self.assertTrue(outcome.found)
            self.assertEqual(outcome.weight, expected)
            self.assertTrue(C.contains_vector(outcome.witness ^ shift))

    def test_batch_matches_sequential(self):
        C = reed_muller(1, 4)
        rng = np.random.default_rng(6)
        shifts = [BitVector.from_array(rng.integers(0, 2, size=16)) for _ in range(8)]
        sequential = [coset_min_weight(C, s, 5) for s in shifts]
        self.assertEqual(coset_min_weights(C, shifts, 5, workers=1), sequential)
        self.assertEqual(coset_min_weights(C, shifts, 5, workers=2), sequential)

    def test_search_many_excluding_zero(self):
        C = extended_hamming()
        outcomes = search_many(C.column_syndromes()[:, None], [0], 4, exclude_zero=True)
        self.assertEqual(outcomes[0].weight, 4)


class WideCodeSearchTests(SimpleTestCase):
    """Redundancy above 64: the column syndromes are Python integers."""

    def setUp(self):
        rows = np.zeros((2, 70), dtype=np.uint8)
        rows[0, [0, 1]] = 1
        rows[1, [2, 3, 4]] = 1
        self.C = LinearCode.from_generator(rows, label="sparse")

    def test_columns_are_objects(self):
        self.assertEqual(self.C.redundancy, 68)
        self.assertEqual(binary_columns(self.C).dtype, object)

    def test_min_weight(self):
        outcome = min_weight(self.C, 3)
        self.assertEqual(outcome.weight, 2)
        self.assertEqual(outcome.witness, BitVector.from_support(70, [0, 1]))
        self.assertFalse(min_weight(self.C, 1).found)

    def test_coset_weight(self):
        shift = BitVector.from_support(70, [2, 3, 4, 10])
        outcome = coset_min_weight(self.C, shift, 3)
        self.assertEqual(outcome.weight, 1)
        self.assertEqual(outcome.witness, BitVector.unit(70, 10))

    def test_random_code_matches_enumeration(self):
        rng = np.random.default_rng(12)
        rows = np.zeros((4, 70), dtype=np.uint8)
        for row in rows:
            row[rng.choice(70, size=3, replace=False)] = 1
        C = LinearCode.from_generator(rows)
        expected = min(C.encode(m).weight for m in product((0, 1), repeat=C.k) if any(m))
        self.assertEqual(min_weight(C, 4).weight, expected)

        searcher = Searcher(binary_columns(C), 4)
        for _ in range(10):
            error = BitVector.from_support(70, rng.choice(70, size=2, replace=False).tolist())
            shift = C.random_codeword(rng) ^ error
            outcome = searcher.search(C.syndrome(shift))
            self.assertEqual(outcome.weight, brute_coset_weight(C, shift))
            self.assertTrue(C.contains_vector(outcome.witness ^ shift))

class GPMinimumWeightTests(SimpleTestCase):
    def setUp(self):
        self.tower = gp_tower(6)

    def test_goethals_base(self):
        c_g = self.tower.c_g
        self.assertFalse(min_weight(c_g, 7).found)
        outcome = min_weight(c_g, 8)
        self.assertEqual(outcome.weight, 8)
        self.assertTrue(c_g.contains_vector(outcome.witness))

    def test_preparata_base(self):
        c_p = self.tower.c_p
        self.assertFalse(min_weight(c_p, 5).found)
        outcome = min_weight(c_p, 6)
        self.assertEqual(outcome.weight, 6)
        self.assertTrue(c_p.contains_vector(outcome.witness))

    def test_goethals_coset_of_two_representatives(self):
        reps = self.tower.reps
        outcome = coset_min_weight(self.tower.c_g, reps[1] ^ reps[2], 7)
        self.assertFalse(outcome.found)

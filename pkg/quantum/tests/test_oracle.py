from django.test import SimpleTestCase

from itertools import product

import numpy as np

from classical.distsearch import coset_min_weight, min_weight
from classical.gf2poly import Poly2
from classical.lincode import BitVector, LinearCode, cyclic_code, extend_parity
from main.exceptions import BudgetError, ConstructionError
from quantum.oracle import (
    DenseState,
    PauliMatrix,
    brute_coset_min_weight,
    brute_min_weight,
    brute_symp_min_weight,
    codespace,
    isometry,
    knill_laflamme_distance,
    random_stabilizer,
    random_union_code,
    run_kl_suite,
    union_codespace,
)
from quantum.stabilizer import StabilizerCode, css
from quantum.symplectic import AdditiveSympCode, SympVector, symp_min_weight
from quantum.unioncode import UnionStabilizerCode, distance_exact_small

FIVE_QUBIT = ["XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"]


def stabilizer(*symbols: str) -> StabilizerCode:
    return StabilizerCode.from_stabilizer(len(symbols[0]), [SympVector.from_symbols(s) for s in symbols])


def random_code(rng) -> LinearCode:
    n = int(rng.integers(6, 25))
    k = int(rng.integers(1, min(n, 20) + 1))
    return LinearCode.from_generator(rng.integers(0, 2, (k, n), dtype=np.uint8), label="random")


class PauliMatrixTests(SimpleTestCase):
    def test_hermitian_y(self):
        Y = PauliMatrix.hermitian(SympVector.from_symbols("Y")).matrix
        self.assertTrue(np.allclose(Y, [[0, -1j], [1j, 0]]))

    def test_commutation_matches_inner_product(self):
        rng = np.random.default_rng(4)
        for _ in range(30):
            u = SympVector.from_vector(BitVector.from_array(rng.integers(0, 2, 6, dtype=np.uint8)))
            v = SympVector.from_vector(BitVector.from_array(rng.integers(0, 2, 6, dtype=np.uint8)))
            A, B = PauliMatrix(u).matrix, PauliMatrix(v).matrix
            sign = 1 - 2 * ((u.x.bits & v.z.bits).bit_count() + (u.z.bits & v.x.bits).bit_count()) % 2
            self.assertTrue(np.allclose(A @ B, sign * B @ A))

    def test_phase(self):
        with self.assertRaises(ConstructionError):
            PauliMatrix(SympVector.zeros(1), phase=2)


class CodespaceTests(SimpleTestCase):
    def test_bell_state(self):
        (state,) = codespace(stabilizer("XX", "ZZ"))
        self.assertTrue(np.allclose(np.abs(state.amplitudes), [2**-0.5, 0, 0, 2**-0.5]))

    def test_steane_code(self):
        states = codespace(css(cyclic_code(7, Poly2(0b1011))))
        self.assertEqual(len(states), 2)
        V = isometry(states)
        self.assertTrue(np.allclose(V.conj().T @ V, np.eye(2)))

    def test_random_four_two(self):
        code = random_stabilizer(4, 2, np.random.default_rng(1))
        states = codespace(code)
        self.assertEqual(len(states), 4)
        for g in code.stab.vectors:
            P = PauliMatrix.hermitian(g).matrix
            for s in states:
                self.assertTrue(np.allclose(np.abs(np.vdot(s.amplitudes, P @ s.amplitudes)), 1))

    def test_qubit_limit(self):
        code = stabilizer("X" * 8, "Z" * 8)
        with self.assertRaises(ConstructionError):
            codespace(code)

    def test_unnormalized_state(self):
        with self.assertRaises(ConstructionError):
            DenseState(1, np.array([1, 1], dtype=complex))


class UnionCodespaceTests(SimpleTestCase):
    def test_trivial_union(self):
        code = stabilizer(*FIVE_QUBIT)
        U = UnionStabilizerCode(base=code, translations=(SympVector.zeros(5),))
        self.assertTrue(np.allclose(isometry(union_codespace(U)), isometry(codespace(code))))

    def test_three_qubit_union(self):
        code = stabilizer("ZZI", "IZZ")
        U = UnionStabilizerCode(base=code, translations=(SympVector.zeros(3), SympVector.from_symbols("XII")))
        self.assertEqual(len(union_codespace(U)), 4)

    def test_same_coset_is_detected(self):
        code = stabilizer("ZZI", "IZZ")
        t = SympVector.from_symbols("XII")
        U = UnionStabilizerCode(
            base=code, translations=(SympVector.zeros(3), t, t ^ code.logical_x[0]), check=False
        )
        with self.assertRaises(ConstructionError):
            union_codespace(U)


class KnillLaflammeTests(SimpleTestCase):
    def test_five_qubit_code(self):
        U = UnionStabilizerCode(base=stabilizer(*FIVE_QUBIT), translations=(SympVector.zeros(5),))
        self.assertEqual(knill_laflamme_distance(U), 3)

    def test_four_two_two(self):
        U = UnionStabilizerCode(base=stabilizer("XXXX", "ZZZZ"), translations=(SympVector.zeros(4),))
        self.assertEqual(knill_laflamme_distance(U), 2)

    def test_random_instances(self):
        rng = np.random.default_rng(9)
        for n, k in ((4, 1), (3, 0)):
            U = random_union_code(n, rng, k=k, K=2)
            self.assertEqual(knill_laflamme_distance(U), distance_exact_small(U))

    def test_suite(self):
        results = run_kl_suite(50, seed=20240)
        self.assertEqual(len(results), 50)
        failures = [r.to_dict() for r in results if not r.agree]
        self.assertEqual(failures, [])

    def test_suite_with_workers_is_deterministic(self):
        serial = [r.to_dict() for r in run_kl_suite(4, seed=7)]
        parallel = [r.to_dict() for r in run_kl_suite(4, seed=7, workers=2)]
        self.assertEqual(serial, parallel)

    def test_corrupted_suite(self):
        results = run_kl_suite(3, seed=1, corrupt=True)
        self.assertTrue(all(not r.agree and r.error for r in results))

    def test_empty_suite(self):
        self.assertEqual(run_kl_suite(0), [])


class BruteForceTests(SimpleTestCase):
    def test_known_codes(self):
        hamming = cyclic_code(7, Poly2(0b1011))
        self.assertEqual(brute_min_weight(hamming), 3)
        self.assertEqual(brute_min_weight(extend_parity(hamming)), 4)
        repetition = LinearCode.from_generator(np.ones((1, 9), dtype=np.uint8))
        self.assertEqual(brute_min_weight(repetition), 9)

    def test_budget(self):
        with self.assertRaises(BudgetError):
            brute_min_weight(LinearCode.from_generator(np.eye(30, dtype=np.uint8)))

    def test_coset_against_enumeration(self):
        hamming = cyclic_code(7, Poly2(0b1011))
        shift = BitVector.from_support(7, [0, 1, 2])
        weight, witness = brute_coset_min_weight(hamming, shift)
        expected = min((hamming.encode(msg) ^ shift).weight for msg in product((0, 1), repeat=4))
        self.assertEqual(weight, expected)
        self.assertTrue(hamming.contains_vector(witness ^ shift))

    def test_search_engine_matches(self):
        rng = np.random.default_rng(2024)
        for _ in range(100):
            C = random_code(rng)
            exact = brute_min_weight(C)
            shift = BitVector.from_array(rng.integers(0, 2, C.n, dtype=np.uint8))
            coset_exact, _ = brute_coset_min_weight(C, shift)
            for radius in range(0, min(C.n, 6) + 1):
                outcome = min_weight(C, radius)
                self.assertEqual(outcome.found, exact <= radius)
                if outcome.found:
                    self.assertEqual(outcome.weight, exact)
                outcome = coset_min_weight(C, shift, radius)
                self.assertEqual(outcome.found, coset_exact <= radius)
                if outcome.found:
                    self.assertEqual(outcome.weight, coset_exact)

    def test_symplectic_search_matches(self):
        rng = np.random.default_rng(77)
        for _ in range(20):
            n = int(rng.integers(2, 7))
            rows = rng.integers(0, 2, (int(rng.integers(1, 2 * n)), 2 * n), dtype=np.uint8)
            C = AdditiveSympCode.from_rows(n, rows)
            shift = SympVector.from_vector(BitVector.from_array(rng.integers(0, 2, 2 * n, dtype=np.uint8)))
            for exclude_zero in (False, True):
                exact = brute_symp_min_weight(C, shift, exclude_zero)
                if exact > n:
                    continue
                outcome = symp_min_weight(C, shift, n, exclude_zero)
                self.assertEqual(outcome.weight, exact)

import os
import sys
import unittest

import numpy as np

# Add parent directory to path
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from algebra.cluster import (
    c_vector,
    den_vector,
    dump_seed,
    duality_check,
    f_polynomial,
    g_vector,
    green_sequence_report,
    initial_quiver,
    initial_seed,
    is_green,
    is_red,
    mutate_seed,
    mutate_sequence,
    reconstruct,
    seed_path,
    seed_structure_check,
    seed_variables,
)
from algebra.exceptions import SeedError
from algebra.laurent import LaurentPoly
from algebra.quiver import Quiver


def a2() -> Quiver:
    return Quiver.from_arrows([1, 2], [(1, 2)])


class TestExchange(unittest.TestCase):
    """Mutation of seeds with principal coefficients"""

    def test_a2_first_mutation(self):
        """Mutating 1 -> 2 at 1 gives (1 + y1*x2) / x1"""
        s = mutate_seed(initial_seed(a2()), 1)
        variables = seed_variables((1, 2))
        self.assertEqual(s.variable(1), LaurentPoly.parse("x1^-1 + x1^-1*x2*y1", variables))
        self.assertEqual(s.variable(2), LaurentPoly.variable(variables, "x2"))
        self.assertEqual(f_polynomial(s, 1).to_text(), "1 + y1")
        self.assertEqual(g_vector(s, 1), (-1, 0))
        self.assertEqual(c_vector(s, 1), (-1, 0))
        self.assertEqual(c_vector(s, 2), (0, 1))
        self.assertEqual(den_vector(s, 1), (1, 0))
        self.assertEqual(den_vector(s, 2), (0, 0))

    def test_mutation_is_involutive(self):
        """Mutating twice at the same vertex restores the seed"""
        s = initial_seed(a2())
        back = mutate_sequence(s, [1, 1])
        self.assertEqual(back.cluster, s.cluster)
        self.assertEqual(back.coeffs, s.coeffs)
        self.assertEqual(back.quiver, s.quiver)
        self.assertEqual(back.history, (1, 1))

    def test_pentagon(self):
        """The A2 exchange pattern closes up after five mutations"""
        s = initial_seed(a2())
        final = mutate_sequence(s, [1, 2, 1, 2, 1])
        self.assertEqual(set(final.cluster), set(s.cluster))

    def test_deleted_vertex(self):
        """Frozen vertices cannot be mutated"""
        s = initial_seed(Quiver.from_arrows([1, 2, 3], [(1, 2), (2, 3)]).delete([3]))
        with self.assertRaises(SeedError):
            mutate_seed(s, 3)

    def test_seed_path(self):
        """One seed per prefix of the word"""
        path = seed_path(initial_seed(a2()), [1, 2, 1])
        self.assertEqual(len(path), 4)
        self.assertEqual(path[-1].history, (1, 2, 1))


class TestSeedStructure(unittest.TestCase):
    """Read-outs and structural properties of seeds"""

    def setUp(self):
        q = Quiver.from_arrows([1, 2, 3], [(1, 2), (2, 3), (3, 1)])
        self.seeds = seed_path(initial_seed(q), [1, 2, 3, 1, 2])

    def test_structure_along_path(self):
        """Positivity, sign coherence, F-shape and duality hold at every step"""
        for s in self.seeds:
            self.assertEqual(seed_structure_check(s), [])
            self.assertTrue(duality_check(s))

    def test_separation_formula(self):
        """Every variable is recovered from its F-polynomial and g-vector"""
        final = self.seeds[-1]
        for label in final.labels:
            self.assertEqual(reconstruct(final, label), final.variable(label))

    def test_initial_quiver(self):
        """Undoing the history recovers the starting quiver"""
        self.assertEqual(initial_quiver(self.seeds[-1]), self.seeds[0].quiver)

    def test_c_and_g_matrices(self):
        """The initial seed has identity c- and g-matrices"""
        s = self.seeds[0]
        for label in s.labels:
            self.assertTrue(is_green(s, label))
        self.assertFalse(is_red(s))
        self.assertTrue(np.array_equal(np.eye(3, dtype=np.int64), np.array([g_vector(s, l) for l in s.labels])))

    def test_dump(self):
        """Dumps list every requested position"""
        dump = dump_seed(self.seeds[1], positions=[1])
        self.assertEqual(dump["history"], [1])
        self.assertEqual(set(dump["variables"]), {"1"})
        self.assertEqual(dump["variables"]["1"]["c_vector"], [-1, 0, 0])
        self.assertEqual(len(dump_seed(self.seeds[1])["variables"]), 3)


class TestGreenSequences(unittest.TestCase):
    """Greenness tracked through c-vectors"""

    def test_a2_maximal_green(self):
        """The two maximal green sequences of A2"""
        self.assertEqual(green_sequence_report(a2(), [1, 2]), (True, True))
        self.assertEqual(green_sequence_report(a2(), [2, 1, 2]), (True, True))
        self.assertEqual(green_sequence_report(a2(), [1, 2, 1]), (False, False))

    def test_incomplete_and_red_steps(self):
        """A short word is not reddening; repeating a vertex mutates a red vertex"""
        self.assertEqual(green_sequence_report(a2(), [1]), (True, False))
        self.assertEqual(green_sequence_report(a2(), [1, 1]), (False, False))

    def test_agrees_with_full_seeds(self):
        """The c-vector shortcut agrees with full seed mutation"""
        s = mutate_sequence(initial_seed(a2()), [2, 1, 2])
        self.assertTrue(is_red(s))
        self.assertFalse(is_red(mutate_sequence(initial_seed(a2()), [2, 1])))


if __name__ == "__main__":
    unittest.main()

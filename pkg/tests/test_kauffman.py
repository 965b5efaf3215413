import os
import sys
import json
import unittest

# Add parent directory to path
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from algebra.laurent import LaurentPoly, y_variables
from config.settings import CLOCKWISE, COUNTERCLOCKWISE, fixture_path
from diagrams.io import load_diagram
from diagrams.model import LinkDiagram
from diagrams.two_bridge import two_bridge
from invariants.kauffman import (
    build_poset,
    dim_symmetry_check,
    dims_of_T,
    enumerate_states,
    f_of_T,
    hasse_dot,
    opposite_sense,
    poset_of,
    state_dump,
    support_rule,
)
from invariants.newton import in_convex_hull, newton_vertex_check, non_vertices

FIGURE_EIGHT_SIGMA = {4: 8, 8: 4, 2: 6, 6: 2, 1: 5, 5: 1, 3: 7, 7: 3}


def load(name: str):
    return load_diagram(fixture_path(name))


def expected_figure_eight():
    with open(fixture_path("figure_eight.replay.json"), "r", encoding="utf-8") as f:
        return json.load(f)["expected"]["f_polys"]


class TestStates(unittest.TestCase):
    """Enumeration of Kauffman states"""

    def test_state_counts(self):
        """Hopf link 2, trefoil 3, figure-eight 5, knot 2112 13"""
        for name, count in (("hopf.json", 2), ("trefoil.pd", 3), ("figure_eight.json", 5), ("knot2112.json", 13)):
            d = load(name)
            for i in d.labels:
                self.assertEqual(len(enumerate_states(d, i)), count, f"{name} segment {i}")

    def test_states_fill_regions(self):
        """Every region away from the segment holds exactly one marker"""
        d = load("knot2112.json")
        excluded = set(d.adjacent_regions(3))
        for state in enumerate_states(d, 3):
            regions = [d.corner_region[(x, p)] for x, p in enumerate(state)]
            self.assertEqual(len(set(regions)), d.n)
            self.assertFalse(excluded & set(regions))

    def test_state_dump(self):
        """Dumps map crossings to regions"""
        d = load("figure_eight.json")
        dump = state_dump(d, poset_of(d, 5))
        self.assertEqual(len(dump), 5)
        self.assertEqual(set(dump[0]), {"0", "1", "2", "3"})

    def test_cache_follows_crossing_order(self):
        """Equal diagrams with their crossings listed in another order keep their own states"""
        d = load("figure_eight.json")
        last = d.n - 1
        shuffled = LinkDiagram(
            tuple(reversed(d.crossings)),
            {label: last - tail for label, tail in d.tails.items()},
        )
        self.assertEqual(shuffled, d)
        original = poset_of(d, 5)
        reordered = poset_of(shuffled, 5)
        self.assertEqual(set(reordered.states), {tuple(reversed(s)) for s in original.states})
        self.assertEqual(f_of_T(shuffled, 5), f_of_T(d, 5))
        for state in state_dump(shuffled, reordered):
            self.assertEqual(set(state.values()) | set(shuffled.adjacent_regions(5)), set(range(d.n + 2)))


class TestLattice(unittest.TestCase):
    """Transposition lattices and their generating polynomials"""

    @classmethod
    def setUpClass(cls):
        cls.figure_eight = load("figure_eight.json")
        cls.knot2112 = load("knot2112.json")

    def test_figure_eight_calibration(self):
        """F of the lattice at sigma(i) matches the cluster F-polynomial at i"""
        d = self.figure_eight
        for position, text in expected_figure_eight().items():
            i = int(position)
            expected = LaurentPoly.parse(text, y_variables(8))
            self.assertEqual(f_of_T(d, FIGURE_EIGHT_SIGMA[i], COUNTERCLOCKWISE), expected, f"position {i}")

    def test_knot2112_lattice_at_eight(self):
        """T(8) of knot 2112 carries y2*y5*y11, the replay's F at 2"""
        with open(fixture_path("knot2112.replay.json"), "r", encoding="utf-8") as f:
            expected = json.load(f)["expected"]["f_polys"]["2"]
        F = f_of_T(self.knot2112, 8, COUNTERCLOCKWISE)
        self.assertEqual(F, LaurentPoly.parse(expected, y_variables(12)))
        self.assertEqual(F.terms.get((0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0)), 1)
        self.assertNotIn((0, 1, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0), F.terms)

    def test_hasse_diagram(self):
        """T(5) of the figure-eight has 5 states and 5 covering relations"""
        poset = poset_of(self.figure_eight, 5, COUNTERCLOCKWISE)
        self.assertEqual(poset.graph.number_of_nodes(), 5)
        self.assertEqual(poset.graph.number_of_edges(), 5)
        self.assertEqual(poset.exponents[poset.source], (0,) * 8)
        dot = hasse_dot(poset, "T(5)")
        self.assertEqual(dot.count("->"), 5)
        self.assertIn('label="1"', dot)

    def test_dimensions(self):
        """dim T(7)_5 = dim T(5)_7 = 2 and dim T(1)_5 = 1 for knot 2112"""
        d = self.knot2112
        self.assertEqual(dims_of_T(d, 7)[5], 2)
        self.assertEqual(dims_of_T(d, 5)[7], 2)
        self.assertEqual(dims_of_T(d, 1)[5], 1)

    def test_dimension_symmetry(self):
        """dim T(i)_j = dim T(j)_i and column sums match row sums"""
        for d in (self.figure_eight, self.knot2112):
            result = dim_symmetry_check(d)
            self.assertEqual(result["symmetry_violations"], [])
            self.assertEqual(result["column_sum_violations"], [])

    def test_support_rule(self):
        """T(i) is supported away from the segments sharing a region with i"""
        d = self.knot2112
        for i in d.labels:
            support = {j for j, v in dims_of_T(d, i).items() if v}
            self.assertEqual(support, support_rule(d, i))
            self.assertNotIn(i, support)

    def test_constant_term(self):
        """Every lattice polynomial has constant term 1"""
        for i in self.knot2112.labels:
            self.assertEqual(f_of_T(self.knot2112, i).constant_term(), 1)

    def test_orientation_matters(self):
        """Reversing the lattice orientation changes some F of the figure-eight"""
        d = self.figure_eight
        states = {i: enumerate_states(d, i) for i in d.labels}
        changed = [
            i for i in d.labels
            if build_poset(d, i, states[i], CLOCKWISE, fallback=False).exponents
            != build_poset(d, i, states[i], COUNTERCLOCKWISE, fallback=False).exponents
        ]
        self.assertTrue(changed)

    def test_opposite_sense(self):
        """The two senses swap"""
        self.assertEqual(opposite_sense(CLOCKWISE), COUNTERCLOCKWISE)
        self.assertEqual(opposite_sense(COUNTERCLOCKWISE), CLOCKWISE)


class TestNewtonPolytope(unittest.TestCase):
    """Vertex property of Newton polytopes"""

    def test_figure_eight_polynomials(self):
        """Every monomial of the figure-eight F-polynomials is a vertex"""
        for text in expected_figure_eight().values():
            self.assertTrue(newton_vertex_check(LaurentPoly.parse(text, y_variables(8))))

    def test_interior_point(self):
        """1 + y1 + y1^2 has y1 in the middle of a segment"""
        witness = []
        F = LaurentPoly.parse("1 + y1 + y1^2", y_variables(1))
        self.assertFalse(newton_vertex_check(F, witness))
        self.assertEqual(witness, [(1,)])
        self.assertEqual(non_vertices(F), [(1,)])

    def test_convex_hull(self):
        """Exact hull membership"""
        square = [(0, 0), (2, 0), (0, 2), (2, 2)]
        self.assertTrue(in_convex_hull((1, 1), square))
        self.assertFalse(in_convex_hull((3, 1), square))
        self.assertFalse(in_convex_hull((1, 1), []))

    def test_points_off_the_hull(self):
        """Points with no convex combination are outside, midpoints inside"""
        self.assertFalse(in_convex_hull((0, 0), [(1, 0), (1, 1)]))
        self.assertFalse(in_convex_hull((1, 0, 0), [(0, 0, 0), (1, 1, 0)]))
        self.assertTrue(in_convex_hull((1, 1), [(0, 0), (2, 2)]))
        self.assertTrue(in_convex_hull((1, 0, 1), [(0, 0, 0), (2, 0, 2), (5, 5, 5)]))

    def test_staircase_is_all_vertices(self):
        """1 + y1 + y1*y2 has three vertices"""
        witness = []
        F = LaurentPoly.parse("1 + y1 + y1*y2", y_variables(2))
        self.assertTrue(newton_vertex_check(F, witness))
        self.assertEqual(witness, [])

    def test_corpus_lattice_polynomials(self):
        """Lattice F-polynomials of the trefoil and 2-bridge 2,2 have only vertices"""
        for d in (load("trefoil.pd"), two_bridge([2, 2])):
            for i in d.labels:
                witness = []
                self.assertTrue(newton_vertex_check(f_of_T(d, i), witness), f"{d.name} {i}: {witness}")


if __name__ == "__main__":
    unittest.main()

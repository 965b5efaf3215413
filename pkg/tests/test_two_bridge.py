import os
import sys
import unittest

# Add parent directory to path
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from config.settings import fixture_path
from diagrams.exceptions import ParseError
from diagrams.io import load_diagram
from diagrams.model import SegmentClass, classify_segments
from diagrams.sites import detect_hopf, primality_scan
from diagrams.two_bridge import two_bridge
from invariants.alexander import alexander_matrix, coefficient_list


class TestTwoBridge(unittest.TestCase):
    """Diagrams generated from continued fractions"""

    def test_small_cases(self):
        """[2] is the Hopf link, [3] a 3-crossing knot"""
        hopf = two_bridge([2])
        self.assertEqual(hopf.n, 2)
        self.assertIsNotNone(detect_hopf(hopf))

        trefoil = two_bridge([3])
        self.assertEqual(trefoil.n, 3)
        self.assertEqual(len(trefoil.components), 1)
        self.assertEqual(coefficient_list(alexander_matrix(trefoil, trefoil.labels[0])), [1, -1, 1])

    def test_labels_and_components(self):
        """Labels run 1..2n; [2,2] is a knot, [2,1,1,2] too"""
        for cf, components in (([2, 2], 1), ([2, 1, 1, 2], 1), ([4], 2)):
            d = two_bridge(cf)
            self.assertEqual(d.n, sum(cf))
            self.assertEqual(d.labels, tuple(range(1, 2 * d.n + 1)))
            self.assertEqual(len(d.components), components)

    def test_alternating(self):
        """Generated diagrams are alternating: no segment stays on one level"""
        for cf in ([3], [2, 2], [5], [2, 1, 1, 2]):
            classes = set(classify_segments(two_bridge(cf)).values())
            self.assertNotIn(SegmentClass.SAME, classes)

    def test_prime(self):
        """Generated diagrams pass the primality scan"""
        for cf in ([3], [2, 2], [2, 1, 1, 2]):
            self.assertEqual(primality_scan(two_bridge(cf)), [])

    def test_default_name(self):
        """The continued fraction names the diagram"""
        self.assertEqual(two_bridge([2, 2]).name, "2-bridge 2,2")
        self.assertEqual(two_bridge([2, 2], name="figure eight").name, "figure eight")

    def test_invalid_input(self):
        """Empty lists, non-positive entries and single crossings are rejected"""
        for cf in ([], [0, 2], [-1, 3], [1]):
            with self.assertRaises(ParseError):
                two_bridge(cf)

    def test_matches_knot2112_fixture(self):
        """[2,1,1,2] and the hand-labelled fixture share their Alexander polynomial"""
        generated = two_bridge([2, 1, 1, 2])
        fixture = load_diagram(fixture_path("knot2112.json"))
        self.assertEqual(
            coefficient_list(alexander_matrix(generated, 1)),
            coefficient_list(alexander_matrix(fixture, 1)),
        )
        self.assertEqual(coefficient_list(alexander_matrix(generated, 1)), [1, -3, 5, -3, 1])


if __name__ == "__main__":
    unittest.main()

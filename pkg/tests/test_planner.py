import os
import sys
import json
import tempfile
import unittest

# Add parent directory to path
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from config.settings import fixture_path
from diagrams.exceptions import ParseError
from diagrams.io import load_diagram
from diagrams.two_bridge import two_bridge
from planner.exceptions import PlanningError
from planner.mutation_planner import (
    BigonEvent,
    HopfEvent,
    MutationPlan,
    RD3Event,
    flatten,
    format_cycles,
    load_replay,
    plan,
    plan_from_json,
    plan_to_json,
    reduction_word,
    replay_events,
    sigma_of,
    sigma_pairs,
)


def load(name: str):
    return load_diagram(fixture_path(name))


class TestPlanWords(unittest.TestCase):
    """Words and involutions built from events"""

    def test_figure_eight_word(self):
        """Two reductions, then the Hopf segments, then the mirrored reductions"""
        p = MutationPlan((BigonEvent(2, 6), BigonEvent(4, 8), HopfEvent((1, 5, 3, 7))))
        self.assertEqual(reduction_word(p), [2, 6, 4, 8])
        self.assertEqual(flatten(p), [2, 6, 4, 8, 1, 5, 3, 7, 4, 8, 2, 6])
        self.assertEqual(sigma_of(p), {2: 6, 6: 2, 4: 8, 8: 4, 1: 5, 5: 1, 3: 7, 7: 3})
        self.assertEqual(format_cycles(sigma_pairs(p)), "(2 6)(4 8)(1 5)(3 7)")

    def test_triangle_move_word(self):
        """A triangle move contributes a,b,c,a,b,c,b,c,b"""
        self.assertEqual(RD3Event(1, 2, 3).mutations, (1, 2, 3, 1, 2, 3, 2, 3, 2))

    def test_hopf_only(self):
        """The Hopf diagram's word is its four segments"""
        p = plan(load("hopf.json"))
        self.assertEqual(len(p.events), 1)
        self.assertEqual(sorted(p.word), [1, 2, 3, 4])
        self.assertEqual(len(p.reductions), 0)

    def test_repeated_label(self):
        """Overlapping pairs do not form an involution"""
        p = MutationPlan((BigonEvent(1, 2), HopfEvent((1, 3, 4, 5))))
        with self.assertRaises(PlanningError):
            sigma_of(p)

    def test_missing_hopf(self):
        """Plans without a Hopf event have no word"""
        with self.assertRaises(PlanningError):
            flatten(MutationPlan((BigonEvent(1, 2),)))


class TestPlanSearch(unittest.TestCase):
    """Reduction search on the corpus diagrams"""

    def test_figure_eight(self):
        """Bigons (2 6), (4 8), then the Hopf link (1 5)(3 7)"""
        p = plan(load("figure_eight.json"))
        self.assertEqual(p.events, (BigonEvent(2, 6), BigonEvent(4, 8), HopfEvent((1, 5, 3, 7))))
        self.assertEqual(p.word, [2, 6, 4, 8, 1, 5, 3, 7, 4, 8, 2, 6])

    def test_knot2112(self):
        """Four reductions and no triangle move"""
        p = plan(load("knot2112.json"))
        self.assertEqual(
            [(e.j, e.k) for e in p.reductions],
            [(4, 9), (7, 12), (1, 11), (3, 5)],
        )
        self.assertEqual(p.hopf.labels, (2, 8, 6, 10))
        self.assertEqual(p.rd3_moves, [])

    def test_borromean(self):
        """A single triangle move unlocks the bigons"""
        p = plan(load("borromean.json"))
        self.assertEqual(p.rd3_moves, [RD3Event(1, 2, 3)])
        self.assertEqual(
            [(e.j, e.k) for e in p.reductions],
            [(4, 5), (6, 7), (8, 9), (1, 12)],
        )
        self.assertEqual(p.hopf.labels, (2, 10, 3, 11))
        self.assertEqual(len(p.word), 38)
        self.assertEqual(p.word, load_replay("borromean.replay.json").sequence)

    def test_reduction_count(self):
        """n - 2 reductions for every prime corpus diagram"""
        for name in ("trefoil.pd", "figure_eight.json", "knot2112.json", "borromean.json"):
            d = load(name)
            self.assertEqual(len(plan(d).reductions), d.n - 2, name)

    def test_two_bridge_needs_no_triangle_moves(self):
        """2-bridge diagrams reduce through bigons alone"""
        for cf in ([3], [2, 2], [5], [2, 1, 1, 2]):
            self.assertEqual(plan(two_bridge(cf)).rd3_moves, [])

    def test_non_prime(self):
        """Connected sums are refused"""
        with self.assertRaises(PlanningError):
            plan(load("granny.pd"))

    def test_replay_events(self):
        """Applying the events ends at a 2-crossing diagram"""
        d = load("borromean.json")
        p = plan(d)
        diagrams = replay_events(d, p)
        self.assertEqual(len(diagrams), len(p.events))
        self.assertEqual(diagrams[-1].n, 2)
        self.assertEqual(diagrams[1].n, d.n)

    def test_replay_events_mismatch(self):
        """Events that do not fit the diagram are reported"""
        d = load("figure_eight.json")
        with self.assertRaises(PlanningError):
            replay_events(d, MutationPlan((BigonEvent(100, 101), HopfEvent((1, 5, 3, 7)))))


class TestPlanDocuments(unittest.TestCase):
    """Plan and replay documents"""

    def test_round_trip(self):
        """Plans survive JSON export"""
        p = plan(load("borromean.json"))
        doc = json.loads(json.dumps(plan_to_json(p)))
        self.assertEqual(plan_from_json(doc), p)
        self.assertEqual(doc["sigma"], [[4, 5], [6, 7], [8, 9], [1, 12], [2, 10], [3, 11]])

    def test_inconsistent_word(self):
        """A word that disagrees with the events is rejected"""
        doc = plan_to_json(plan(load("figure_eight.json")))
        doc["word"] = doc["word"][::-1]
        with self.assertRaises(ParseError):
            plan_from_json(doc)

    def test_bad_event(self):
        """Unknown kinds and wrong arities are rejected"""
        with self.assertRaises(ParseError):
            plan_from_json({"events": [{"kind": "curl", "labels": [1, 2]}]})
        with self.assertRaises(ParseError):
            plan_from_json({"events": [{"kind": "rd3", "labels": [1, 2]}]})

    def test_load_replay(self):
        """Replay documents load from the fixture root and reject bad JSON"""
        doc = load_replay("figure_eight.replay.json")
        self.assertEqual(doc.sequence, [4, 8, 2, 6, 1, 5, 3, 7, 2, 6, 4, 8])
        self.assertEqual(doc.expected.alexander, [1, -3, 1])
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, "broken.json")
            with open(path, "w", encoding="utf-8") as f:
                f.write("{not json")
            with self.assertRaises(ParseError):
                load_replay(path)


if __name__ == "__main__":
    unittest.main()

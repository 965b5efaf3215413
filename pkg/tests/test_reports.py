import os
import sys
import json
import tempfile
import unittest

# Add parent directory to path
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from config.corpus import (
    get_all_corpus_entries,
    get_corpus_entries_by_kind,
    get_corpus_entry,
    get_prime_corpus_entries,
)
from utils.fixture_validator import resolve_source, validate_fixture
from utils.parallel_runner import run_parallel
from utils.report_generator import VerifyReport, generate_report, render_text


def sample_report() -> VerifyReport:
    report = VerifyReport("Trefoil", 3, 1)
    report.add("region_census", True, "ignored when passing")
    report.add("prime", False, "regions (0, 1) share segments (2, 5)", 3)
    report.info["bigons"] = 3
    return report


class TestVerifyReport(unittest.TestCase):
    """Check bookkeeping"""

    def test_failures(self):
        """Witnesses are kept only for failed checks"""
        report = sample_report()
        self.assertFalse(report.passed)
        self.assertEqual([c.name for c in report.failures], ["prime"])
        self.assertEqual(report.checks[0].witness, "")
        self.assertEqual(report.to_dict()["checks"][1]["duration_ms"], 3)

    def test_render_text(self):
        """Text rendering lists status, info and witnesses"""
        text = render_text([sample_report()])
        self.assertIn("Trefoil (3 crossings, 1 components): FAIL", text)
        self.assertIn("bigons: 3", text)
        self.assertIn("FAIL prime  [regions (0, 1) share segments (2, 5)]", text)


class TestReportFiles(unittest.TestCase):
    """Report files"""

    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()

    def tearDown(self):
        self.tmp.cleanup()

    def test_json_report(self):
        """JSON reports hold one document per diagram"""
        path = os.path.join(self.tmp.name, "report.json")
        self.assertEqual(generate_report([sample_report()], "json", path), path)
        with open(path, "r", encoding="utf-8") as f:
            doc = json.load(f)
        self.assertEqual(doc[0]["diagram"], "Trefoil")
        self.assertFalse(doc[0]["passed"])

    def test_text_report(self):
        """Text reports match the rendered text"""
        path = os.path.join(self.tmp.name, "report.txt")
        generate_report([sample_report()], "text", path)
        with open(path, "r", encoding="utf-8") as f:
            self.assertEqual(f.read(), render_text([sample_report()]))

    def test_excel_report(self):
        """Excel reports are written through pandas"""
        path = os.path.join(self.tmp.name, "report.xlsx")
        generate_report([sample_report()], "excel", path)
        self.assertTrue(os.path.exists(path))

    def test_unknown_format(self):
        """Unknown formats raise"""
        with self.assertRaises(ValueError):
            generate_report([sample_report()], "pdf", os.path.join(self.tmp.name, "x"))

    def test_empty(self):
        """Nothing to report gives no file"""
        self.assertEqual(generate_report([], "json"), "")


class TestParallelRunner(unittest.TestCase):
    """Thread pool helper"""

    def test_order(self):
        """Results come back in input order"""
        self.assertEqual(run_parallel(lambda x: x * x, list(range(10)), max_workers=3), [x * x for x in range(10)])
        self.assertEqual(run_parallel(lambda x: x, []), [])

    def test_error(self):
        """The first failing item's error is raised"""
        def job(x):
            if x in (3, 7):
                raise ValueError(f"bad {x}")
            return x

        with self.assertRaises(ValueError) as ctx:
            run_parallel(job, list(range(10)), max_workers=4)
        self.assertEqual(str(ctx.exception), "bad 3")


class TestFixtures(unittest.TestCase):
    """Fixture validation and the corpus table"""

    def test_validate_fixture(self):
        """Known kinds are recognised, broken ones rejected"""
        self.assertEqual(validate_fixture("figure_eight.json"), (True, "json"))
        self.assertEqual(validate_fixture("trefoil.pd"), (True, "pd"))
        self.assertEqual(validate_fixture("gen:2,1,1,2"), (True, "continued-fraction"))
        self.assertFalse(validate_fixture("gen:2,-1")[0])
        self.assertEqual(validate_fixture("missing.json"), (False, "File not found"))
        self.assertEqual(validate_fixture("trefoil.pd", [".json"]), (False, ".pd"))

    def test_resolve_source(self):
        """gen: sources pass through, files resolve against the fixture root"""
        self.assertEqual(resolve_source("gen:3"), "gen:3")
        self.assertTrue(os.path.exists(resolve_source("hopf.json")))

    def test_corpus_sources_exist(self):
        """Every corpus file source and replay is present"""
        for entry_id, entry in get_all_corpus_entries().items():
            if not entry["source"].startswith("gen:"):
                self.assertTrue(validate_fixture(entry["source"])[0], entry_id)
            if entry["replay"]:
                self.assertTrue(validate_fixture(entry["replay"])[0], entry_id)

    def test_corpus_queries(self):
        """Lookups by id and category"""
        self.assertEqual(get_corpus_entry("borromean")["components"], 3)
        self.assertIsNone(get_corpus_entry("unknot"))
        self.assertIn("granny", get_corpus_entries_by_kind("non_prime"))
        self.assertNotIn("granny", get_prime_corpus_entries())
        self.assertIn("gen_2_2", get_prime_corpus_entries())


if __name__ == "__main__":
    unittest.main()

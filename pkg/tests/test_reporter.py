import os
import tempfile
import unittest

from evals.verification import verify_paths
from utils.reporter import generate_markdown_report


class TestMarkdownReport(unittest.TestCase):

    def setUp(self):
        """Set up a temporary results directory"""
        self.tmp = tempfile.TemporaryDirectory()
        self.addCleanup(self.tmp.cleanup)

    def test_passing_run(self):
        """Test the summary and claims of a clean run"""
        path = os.path.join(self.tmp.name, "reports", "verification_report.md")
        results = verify_paths(range(2, 6)).to_dict()
        self.assertEqual(generate_markdown_report(results, filename=path), path)
        with open(path, encoding="utf-8") as f:
            text = f.read()
        self.assertIn("# Verification Report", text)
        self.assertIn("- **Comparisons:** 16", text)
        self.assertIn("- **Result:** PASS", text)
        self.assertIn("| path | 16 | 0 | 0 | 0 |", text)
        self.assertEqual(text.count("_None._"), 2)

    def test_failing_run(self):
        """Test that mismatches and failing checks get their own sections"""
        results = {
            "summary": {"comparisons": 1, "mismatches": 1, "check_reports": 1, "check_failures": 1, "ok": False},
            "claims": [],
            "mismatches": [{"family": "cycle", "param": "6", "field": "tau", "expected": 9, "got": 8}],
            "failures": [
                {
                    "graph": "g",
                    "check_id": "tau_range",
                    "lhs": 10,
                    "relation": "<=",
                    "rhs": 6,
                    "lower": 1,
                    "witness": None,
                    "detail": "",
                }
            ],
        }
        path = os.path.join(self.tmp.name, "report.md")
        generate_markdown_report(results, filename=path)
        with open(path, encoding="utf-8") as f:
            text = f.read()
        self.assertIn("- **Result:** FAIL", text)
        self.assertIn("| cycle | 6 | tau | 9 | 8 |", text)
        self.assertIn("### tau_range on `g`", text)
        self.assertIn("- **Relation:** 10 <= 6", text)
        self.assertIn("- **Lower Bound:** 1", text)


if __name__ == '__main__':
    unittest.main()

import json
import logging
import os
import tempfile
import unittest
from pathlib import Path
from unittest import mock

from typer.testing import CliRunner

from cli.cli import ExitCode, OutputRecord, app
from evals.corpus import family_specs

runner = CliRunner()


class CliTestCase(unittest.TestCase):

    def setUp(self):
        """Set up a scratch directory and a clean environment"""
        self.tmp = tempfile.TemporaryDirectory()
        self.addCleanup(self.tmp.cleanup)
        patcher = mock.patch.dict(os.environ, {"TDV_RESULTS_DIR": os.path.join(self.tmp.name, "results")}, clear=True)
        patcher.start()
        self.addCleanup(patcher.stop)

    def tearDown(self):
        """Drop the handlers the CLI installed on the root logger"""
        root = logging.getLogger()
        for handler in list(root.handlers):
            root.removeHandler(handler)

    def write(self, name: str, text: str) -> str:
        path = Path(self.tmp.name) / name
        path.write_text(text, encoding="utf-8")
        return str(path)


class TestSolveCommand(CliTestCase):

    def test_json_output(self):
        """Test the JSON record for P6, including TDM"""
        result = runner.invoke(app, ["solve", "path:6", "--json", "--tdm"])
        self.assertEqual(result.exit_code, 0, result.output)
        data = json.loads(result.stdout)
        self.assertEqual(list(data), ["graph", "n", "gamma_t", "tau", "tdv", "tdm", "checks"])
        record = OutputRecord.from_json(result.stdout)
        self.assertEqual((record.graph, record.n, record.gamma_t, record.tau), ("path:6", 6, 4, 4))
        self.assertEqual(record.tdv, [2, 4, 2, 2, 4, 2])
        self.assertEqual(record.tdm, [[1, 2, 4, 5], [1, 2, 5, 6], [2, 3, 4, 5], [2, 3, 5, 6]])
        self.assertIsNone(record.checks)

    def test_checks(self):
        """Test that --checks attaches one report per check"""
        result = runner.invoke(app, ["solve", "queen:4x4", "--json", "--checks"])
        self.assertEqual(result.exit_code, 0, result.output)
        record = OutputRecord.from_json(result.stdout)
        self.assertEqual(record.tau, 12)
        self.assertEqual(len(record.checks), 14)
        self.assertNotIn("fail", {c["verdict"] for c in record.checks})

    def test_table_output(self):
        """Test the human-readable table"""
        result = runner.invoke(app, ["solve", "cycle:4", "--tdm"])
        self.assertEqual(result.exit_code, 0, result.output)
        self.assertIn("gamma_t=2", result.stdout)
        self.assertIn("{1, 4}", result.stdout)

    def test_graph_file(self):
        """Test a one-based and a zero-based edge-list file"""
        path = self.write("k2.txt", "2 1\n1 2\n")
        record = OutputRecord.from_json(runner.invoke(app, ["solve", path, "--json"]).stdout)
        self.assertEqual((record.graph, record.tau, record.tdv), ("k2", 1, [1, 1]))
        zero = self.write("p3.txt", "3 2\n0 1\n1 2\n")
        record = OutputRecord.from_json(runner.invoke(app, ["solve", zero, "--json", "--zero-based"]).stdout)
        self.assertEqual(record.tdv, [1, 2, 1])

    def test_input_errors(self):
        """Test exit code 2 on bad specs, missing files and malformed files"""
        bad_file = self.write("bad.txt", "3 5\n1 2\n")
        for source in ("foo:3", "path:1", "no-such-file", bad_file):
            with self.subTest(source=source):
                self.assertEqual(runner.invoke(app, ["solve", source]).exit_code, ExitCode.INPUT_ERROR)

    def test_isolated_vertex(self):
        """Test exit code 3 when no total dominating set exists"""
        path = self.write("dangling.txt", "3 1\n1 2\n")
        self.assertEqual(runner.invoke(app, ["solve", path]).exit_code, ExitCode.NO_TDS)

    def test_threads_do_not_change_output(self):
        """Test byte-identical JSON for one and eight workers on every family spec"""
        for spec in family_specs():
            token = str(spec)
            with self.subTest(graph=token):
                one = runner.invoke(app, ["solve", token, "--json", "--tdm", "--threads", "1"])
                eight = runner.invoke(app, ["solve", token, "--json", "--tdm", "--threads", "8"])
                self.assertEqual(one.exit_code, eight.exit_code)
                self.assertEqual(one.stdout, eight.stdout)

    def test_invalid_thread_setting(self):
        """Test that a bad TDV_THREADS is a usage error"""
        with mock.patch.dict(os.environ, {"TDV_THREADS": "0"}):
            self.assertEqual(runner.invoke(app, ["solve", "path:4"]).exit_code, 2)

    def test_invalid_log_level(self):
        """Test that an unknown log level is a usage error"""
        self.assertEqual(runner.invoke(app, ["--log-level", "LOUD", "solve", "path:4"]).exit_code, 2)


class TestGenCommand(CliTestCase):

    def test_gen_to_stdout(self):
        """Test the edge-list output of gen"""
        result = runner.invoke(app, ["gen", "path:3"])
        self.assertEqual(result.exit_code, 0, result.output)
        self.assertEqual(result.stdout, "# name: path:3\n3 2\n1 2\n2 3\n")

    def test_gen_then_solve_from_stdin(self):
        """Test that solving generated text from stdin matches solving each family spec directly"""
        for spec in family_specs():
            token = str(spec)
            with self.subTest(graph=token):
                text = runner.invoke(app, ["gen", token]).stdout
                piped = runner.invoke(app, ["solve", "-", "--json", "--threads", "8"], input=text)
                direct = runner.invoke(app, ["solve", token, "--json", "--threads", "8"])
                self.assertEqual(piped.exit_code, direct.exit_code)
                self.assertEqual(piped.stdout, direct.stdout)

    def test_gen_to_file(self):
        """Test writing into a new directory"""
        out = os.path.join(self.tmp.name, "graphs", "fig5.txt")
        self.assertEqual(runner.invoke(app, ["gen", "figure:5", out]).exit_code, 0)
        self.assertTrue(Path(out).read_text(encoding="utf-8").startswith("# name: figure:5\n9 13\n"))

    def test_gen_bad_spec(self):
        """Test exit code 2 on an unknown family"""
        self.assertEqual(runner.invoke(app, ["gen", "queen:5x5"]).exit_code, ExitCode.INPUT_ERROR)


class TestVerifyCommand(CliTestCase):

    def test_small_selection(self):
        """Test a verification run restricted to a few families"""
        result = runner.invoke(app, ["verify", "--paths", "2..8", "--cycles", "3..8", "--figures", "--queens"])
        self.assertEqual(result.exit_code, 0, result.output)
        self.assertIn("all claims hold", result.stdout)

    def test_properties_and_extremal(self):
        """Test the property corpus with a few random graphs and the extremal search"""
        result = runner.invoke(
            app, ["verify", "--properties", "--random-count", "5", "--random-max-n", "7", "--tau-extremal-max", "5"]
        )
        self.assertEqual(result.exit_code, 0, result.output)

    def test_bad_range(self):
        """Test that malformed or out-of-bounds ranges are usage errors"""
        for value in ("5..2", "1..4", "2-6", "2..99"):
            with self.subTest(value=value):
                self.assertEqual(runner.invoke(app, ["verify", "--paths", value]).exit_code, 2)

    def test_generate_report(self):
        """Test that --generate-report writes JSON and Markdown into TDV_RESULTS_DIR"""
        result = runner.invoke(app, ["verify", "--multipartite-max", "4", "--generate-report"])
        self.assertEqual(result.exit_code, 0, result.output)
        results_dir = Path(os.environ["TDV_RESULTS_DIR"])
        self.assertTrue((results_dir / "verification_report.md").is_file())
        (json_file,) = results_dir.glob("verification_results_*.json")
        data = json.loads(json_file.read_text(encoding="utf-8"))
        self.assertTrue(data["summary"]["ok"])
        self.assertIn("timestamp", data["summary"])


if __name__ == '__main__':
    unittest.main()

"""End-to-end checks of the command line tool: exit codes, output formats, config files."""

import csv
import io
import json
import os
import subprocess
import sys
import tempfile
import unittest

CLI = None


def run(*args):
    return subprocess.run([CLI, *args], capture_output=True, text=True, timeout=600)


class CliTest(unittest.TestCase):
    def test_list(self):
        r = run("list")
        self.assertEqual(r.returncode, 0)
        for name in ("HILBERT_EVEN_ODD", "HANKEL_JXI", "T3D", "FINITE_HILBERT", "WEIGHTED_FINITE_HILBERT", "DIRAC_UPSIDE_DOWN"):
            self.assertIn(name, r.stdout)

    def test_verify_passes(self):
        r = run("verify", "FINITE_HILBERT", "--a", "0", "--b", "1")
        self.assertEqual(r.returncode, 0, r.stderr)
        report = json.loads(r.stdout)
        self.assertTrue(report["pass"])
        self.assertNotIn("wall_time", report)
        self.assertLessEqual(report["max_error"], 1e-5)

    def test_verify_is_reproducible(self):
        a = run("verify", "weighted_finite_hilbert", "--corpus-size", "2")
        b = run("verify", "weighted_finite_hilbert", "--corpus-size", "2")
        self.assertEqual(a.returncode, 0)
        self.assertEqual(a.stdout, b.stdout)

    def test_tolerance_failure_exits_1(self):
        r = run("verify", "FINITE_HILBERT", "--tolerance", "1e-14", "--corpus-size", "1")
        self.assertEqual(r.returncode, 1)
        self.assertFalse(json.loads(r.stdout)["pass"])

    def test_bad_input_exits_2(self):
        self.assertEqual(run("verify", "NO_SUCH_CASE").returncode, 2)
        self.assertEqual(run("verify", "FINITE_HILBERT", "--n", "1000").returncode, 2)
        self.assertEqual(run("verify", "FINITE_HILBERT", "--format", "xml").returncode, 2)
        self.assertEqual(run("verify", "HANKEL_JXI", "--m", "-0.5").returncode, 2)
        self.assertEqual(run("frobnicate").returncode, 2)

    def test_rejection_exits_3(self):
        r = run("verify", "HANKEL_JXI", "--U", "3")
        self.assertEqual(r.returncode, 3)
        self.assertIn("LOG_GAUSS", r.stderr)

    def test_symbol_table(self):
        r = run("symbol", "xi", "--m", "1")
        self.assertEqual(r.returncode, 0)
        rows = list(csv.reader(io.StringIO(r.stdout)))
        self.assertEqual(rows[0], ["t", "re", "im"])
        self.assertEqual(len(rows) - 1, 401)
        for t, re, im in rows[1:]:
            self.assertAlmostEqual(float(re) ** 2 + float(im) ** 2, 1.0, places=12)
        r = run("symbol", "tanh_pi_half", "--range", "-1", "1", "--samples", "3")
        rows = list(csv.reader(io.StringIO(r.stdout)))[1:]
        self.assertEqual([float(x[0]) for x in rows], [-1.0, 0.0, 1.0])

    def test_mellin_symbol(self):
        r = run("mellin-symbol", "stieltjes", "--range", "-2", "2", "--samples", "41")
        self.assertEqual(r.returncode, 0, r.stderr)
        rows = list(csv.DictReader(io.StringIO(r.stdout)))
        self.assertEqual(len(rows), 41)
        self.assertLess(max(float(x["abs_diff"]) for x in rows), 1e-8)

    def test_convergence_csv(self):
        r = run("convergence", "FINITE_HILBERT", "--n-list", "512,1024,2048")
        self.assertEqual(r.returncode, 0, r.stderr)
        rows = list(csv.DictReader(io.StringIO(r.stdout)))
        self.assertEqual([int(x["n"]) for x in rows], [512, 1024, 2048])
        self.assertGreater(float(rows[-1]["order"]), 1.5)

    def test_csv_output_and_atomic_file(self):
        with tempfile.TemporaryDirectory() as d:
            out = os.path.join(d, "r.csv")
            r = run("verify", "DIRAC_UPSIDE_DOWN", "--format", "csv", "-o", out, "--corpus-size", "1")
            self.assertEqual(r.returncode, 0, r.stderr)
            self.assertEqual(os.listdir(d), ["r.csv"])
            with open(out) as f:
                rows = list(csv.DictReader(f))
            self.assertEqual({x["check"] for x in rows}, {"component_1", "component_2"})

    def test_config_file_and_precedence(self):
        with tempfile.TemporaryDirectory() as d:
            cfg = os.path.join(d, "run.ini")
            with open(cfg, "w") as f:
                f.write("a = -3\nb = 7\ncorpus-size = 1\n")
            r = run("--config", cfg, "verify", "FINITE_HILBERT")
            self.assertEqual(r.returncode, 0, r.stderr)
            self.assertEqual(json.loads(r.stdout)["params"], {"a": -3.0, "b": 7.0})
            r = run("--config", cfg, "verify", "FINITE_HILBERT", "--b", "5")
            self.assertEqual(json.loads(r.stdout)["params"], {"a": -3.0, "b": 5.0})

    def test_report_single_case(self):
        r = run("report", "HANKEL_JXI", "--no-probes")
        self.assertEqual(r.returncode, 0, r.stderr)
        report = json.loads(r.stdout)
        self.assertEqual([c["params"]["m"] for c in report["cases"]], [0.0, 0.5, 1.0, 2.5])
        self.assertEqual(report["probes"], [])


if __name__ == "__main__":
    CLI = sys.argv.pop(1)
    unittest.main()

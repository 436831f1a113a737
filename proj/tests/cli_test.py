"""End-to-end checks of the rgcalc command line: exit codes and JSON reports."""

import json
import os
import subprocess
import sys
import tempfile
import unittest

import jsonschema

BIN = os.environ.get("RGCALC", "build/rgcalc")
SCHEMA = os.environ.get("RGCALC_SCHEMA", "schema/report.schema.json")


def run(*args):
    return subprocess.run([BIN, *args], capture_output=True, text=True, timeout=600)


class Cli(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        with open(SCHEMA) as f:
            cls.schema = json.load(f)
        cls.tmp = tempfile.TemporaryDirectory()

    @classmethod
    def tearDownClass(cls):
        cls.tmp.cleanup()

    def path(self, name, text=None):
        p = os.path.join(self.tmp.name, name)
        if text is not None:
            with open(p, "w") as f:
                f.write(text)
        return p

    def report(self, *args):
        out = self.path("report.json")
        res = run(*args, "--json", out)
        with open(out) as f:
            data = json.load(f)
        jsonschema.validate(data, self.schema)
        return res, data

    def test_suite_passes_and_controls_fail(self):
        res, data = self.report("suite", "--exhaustive", "--bound", "3")
        self.assertEqual(res.returncode, 0, res.stdout[-2000:])
        self.assertTrue(data["pass"])
        self.assertEqual(data["bound"], 3)
        controls = [i for i in data["items"] if "-without-" in i["name"]]
        self.assertGreaterEqual(len(controls), 8)
        for c in controls:
            self.assertEqual(c["status"], "FAIL", c["name"])
            self.assertTrue(c["failures"][0]["trace"], c["name"])
        laws = [i for i in data["items"] if "-without-" not in i["name"]]
        self.assertTrue(all(i["status"] == "PASS" for i in laws))

    def test_law_guar_merge(self):
        res, data = self.report("law", "guar-merge", "--exhaustive")
        self.assertEqual(res.returncode, 0)
        [item] = data["items"]
        self.assertEqual(item["name"], "guar-merge")
        self.assertEqual(item["instances"], 256)

    def test_axioms(self):
        res, data = self.report("axioms")
        self.assertEqual(res.returncode, 0, res.stdout[-2000:])
        self.assertTrue(data["pass"])

    def test_refine_exit_codes(self):
        top = self.path("abort.cmd", "abort\n")
        step = self.path("step.cmd", "pgm(x' = 1)\n")
        self.assertEqual(run("refine", top, step).returncode, 0)
        res, data = self.report("refine", step, top)
        self.assertEqual(res.returncode, 1)
        self.assertFalse(data["pass"])
        self.assertIn("[", data["items"][0]["failures"][0]["trace"])

    def test_refine_with_space_file(self):
        space = self.path("xy.space", "# two bits\nvar x : {0, 1}\nvar y : {0, 1}\n")
        lhs = self.path("lhs.cmd", "rely(y' = y) /\\ guar(x' = x) /\\ spec(y' = 1 - y)\n")
        rhs = self.path("rhs.cmd", "y := 1 - y\n")
        self.assertEqual(run("refine", lhs, rhs, "--space", space).returncode, 0)

    def test_example(self):
        res, data = self.report("example", "rem-from-set")
        self.assertEqual(res.returncode, 0, res.stdout[-2000:])
        names = [i["name"] for i in data["items"]]
        self.assertIn("rem-from-set/final-refinement", names)
        weak = [i for i in data["items"] if i["name"] == "rem-from-set-weak-guarantee/loop-body"]
        self.assertEqual(weak[0]["status"], "FAIL")

    def test_usage_errors(self):
        cmd_file = self.path("nil.cmd", "nil\n")
        bad_space = self.path("bad.space", "var x {0}\n")
        for args in (
            [],
            ["bogus"],
            ["law", "no-such-law"],
            ["suite", "--bound", "0"],
            ["suite", "--bound", "x"],
            ["suite", "--max-states", "1"],
            ["refine", cmd_file],
            ["refine", cmd_file, self.path("missing.cmd")],
            ["refine", cmd_file, cmd_file, "--space", bad_space],
            ["example", "other"],
        ):
            self.assertEqual(run(*args).returncode, 2, args)

    def test_reports_are_deterministic(self):
        a = self.path("a.json")
        b = self.path("b.json")
        for p in (a, b):
            run("law", "guar-seq-distrib", "--seed", "7", "--samples", "40", "--json", p)
        with open(a) as fa, open(b) as fb:
            self.assertEqual(fa.read(), fb.read())


if __name__ == "__main__":
    unittest.main(argv=sys.argv[:1])

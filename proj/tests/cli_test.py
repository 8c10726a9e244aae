"""End-to-end checks of the usl2 executable: exit codes, formats, schema."""

import csv
import io
import json
import os
import subprocess
import sys
import tempfile
import unittest

import jsonschema

CLI = os.environ["USL2_CLI"]
SCHEMA = os.environ["USL2_SCHEMA"]


def run(*args):
    return subprocess.run([CLI, *args], capture_output=True)


class ExitCodes(unittest.TestCase):
    def test_ok(self):
        self.assertEqual(run("blocks", "--p", "5").returncode, 0)

    def test_help(self):
        self.assertEqual(run("--help").returncode, 0)

    def test_usage_errors(self):
        bad = [
            ["filtration", "--p", "4"],
            ["filtration", "--p", "17"],
            ["blocks"],
            ["blocks", "--p", "5", "--bogus"],
            ["filtration", "--max-p", "7"],
            ["blocks", "--p", "5", "--chi", "regular"],
            ["blocks", "--p", "5", "--chi", "regular", "--a", "0"],
            ["blocks", "--p", "11", "--chi", "regular", "--a", "1"],
            ["blocks", "--p", "5", "--omega", "3"],
            ["blocks", "--p", "5", "--alpha", "2"],
            ["blocks", "--p", "5", "--omega", "1", "--alpha", "1"],
            ["blocks", "--p", "5", "--chi", "zero,e"],
            ["filtration", "--p", "5", "--kind", "xyz"],
            ["blocks", "--p", "5", "--format", "xml"],
            ["verify", "--p", "5", "--max-p", "7"],
        ]
        for args in bad:
            with self.subTest(args=args):
                self.assertEqual(run(*args).returncode, 2)

    def test_corrupt_idempotent(self):
        r = run("verify", "--p", "5", "--test-corrupt-idempotent")
        self.assertEqual(r.returncode, 1)
        self.assertIn(b"idempotent_square", r.stderr)
        doc = json.loads(r.stdout)
        self.assertFalse(doc["summary"]["ok"])
        failing = {c["name"] for c in doc["results"][0]["checks"] if not c["pass"]}
        self.assertIn("idempotents_sum_to_one", failing)


class Formats(unittest.TestCase):
    def test_markdown_reference_row(self):
        r = run("filtration", "--p", "5", "--chi", "zero", "--kind", "pf", "--format", "md")
        self.assertEqual(r.returncode, 0)
        self.assertIn("| 1 | 4 | 10 | 20 | 34 | 49 | 50 |", r.stdout.decode())

    def test_sh_equals_pf_on_steinberg_block(self):
        tables = {}
        for kind in ("pf", "sh"):
            r = run("filtration", "--p", "5", "--chi", "zero", "--omega", "0", "--kind", kind)
            self.assertEqual(r.returncode, 0)
            tables[kind] = json.loads(r.stdout)["results"][0]["tables"][0]["cumulative"]
        self.assertEqual(tables["pf"], tables["sh"])

    def test_int_row(self):
        r = run("filtration", "--p", "5", "--chi", "zero", "--omega", "0", "--kind", "int")
        row = json.loads(r.stdout)["results"][0]["tables"][0]["cumulative"]
        self.assertEqual(row, [0] * 8 + [9, 16, 21, 24, 25])

    def test_csv_is_rfc4180(self):
        r = run("blocks", "--p", "3", "--chi", "regular", "--a", "1", "--format", "csv")
        self.assertEqual(r.returncode, 0)
        text = r.stdout.decode()
        self.assertTrue(text.endswith("\r\n"))
        self.assertNotIn("\n", text.replace("\r\n", ""))
        rows = list(csv.reader(io.StringIO(text, newline="")))
        self.assertEqual(rows[0][:5], ["record", "p", "chi", "block", "name"])
        self.assertTrue(all(len(row) == len(rows[0]) for row in rows))
        self.assertIn("alpha=[0,0,1]", {row[3] for row in rows})

    def test_out_file(self):
        with tempfile.TemporaryDirectory() as d:
            path = os.path.join(d, "r.json")
            r = run("blocks", "--p", "7", "--out", path)
            self.assertEqual(r.returncode, 0)
            self.assertEqual(r.stdout, b"")
            with open(path) as f:
                self.assertEqual(json.load(f)["results"][0]["p"], 7)


class Determinism(unittest.TestCase):
    def test_repeat_and_jobs(self):
        one = run("verify", "--max-p", "5", "--chi", "zero,e,regular")
        again = run("verify", "--max-p", "5", "--chi", "zero,e,regular")
        many = run("verify", "--max-p", "5", "--chi", "zero,e,regular", "--jobs", "4")
        self.assertEqual(one.returncode, 0)
        self.assertEqual(one.stdout, again.stdout)
        self.assertEqual(one.stdout, many.stdout)

    def test_timings_only_on_request(self):
        plain = json.loads(run("blocks", "--p", "3").stdout)
        timed = json.loads(run("blocks", "--p", "3", "--timings").stdout)
        self.assertNotIn("wall_ms", plain["results"][0])
        self.assertIn("wall_ms", timed["results"][0])


class Schema(unittest.TestCase):
    def test_outputs_validate(self):
        with open(SCHEMA) as f:
            schema = json.load(f)
        jsonschema.Draft202012Validator.check_schema(schema)
        for args in (
            ["blocks", "--p", "13"],
            ["blocks", "--p", "5", "--chi", "regular", "--a", "2", "--timings"],
            ["filtration", "--p", "7", "--chi", "e", "--omega", "2"],
            ["verify", "--max-p", "5", "--chi", "zero,e,regular"],
            ["verify", "--p", "3", "--test-corrupt-idempotent"],
        ):
            with self.subTest(args=args):
                doc = json.loads(run(*args).stdout)
                jsonschema.validate(doc, schema)


if __name__ == "__main__":
    unittest.main(argv=sys.argv[:1], verbosity=2)

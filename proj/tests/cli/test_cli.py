import json
import os
import subprocess
import sys
import tempfile
import unittest

import jsonschema

ARQ = os.environ["ARQ_BIN"]
QUIVERS = os.environ["ARQ_QUIVERS"]
SCHEMAS = os.environ["ARQ_SCHEMAS"]


def q(name):
    return os.path.join(QUIVERS, name + ".quiver")


def run(*args):
    return subprocess.run([ARQ, *args], capture_output=True, text=True, timeout=300)


def schema(verb):
    with open(os.path.join(SCHEMAS, verb + ".json")) as f:
        return json.load(f)


class ExitCodes(unittest.TestCase):
    def test_finite_type_a3(self):
        r = run("finite-type", q("a3"), "--bound", "10")
        self.assertEqual(r.returncode, 0, r.stderr)
        self.assertIn("finite-type", r.stdout)

    def test_finite_type_atilde2(self):
        r = run("finite-type", q("atilde2"), "--bound", "30")
        self.assertEqual(r.returncode, 2, r.stderr)
        self.assertIn("inconclusive", r.stdout)

    def test_garbage(self):
        with tempfile.NamedTemporaryFile("w", suffix=".quiver", delete=False) as f:
            f.write("v 1\nv 2\na 1 1 two\n")
        try:
            r = run("validate", f.name)
        finally:
            os.unlink(f.name)
        self.assertEqual(r.returncode, 64)
        self.assertIn(":3:", r.stderr)
        self.assertEqual(r.stdout, "")

    def test_unknown_verb(self):
        self.assertEqual(run("frobnicate", q("a3")).returncode, 64)

    def test_bad_flag(self):
        self.assertEqual(run("knit", q("a3"), "--bound", "many").returncode, 64)

    def test_translation_data_where_a_quiver_is_expected(self):
        r = run("knit", q("a3_ar"))
        self.assertEqual(r.returncode, 64)
        self.assertIn("ordinary quiver expected", r.stderr)

    def test_invalid_translation_quiver(self):
        r = run("validate", q("a3"))
        self.assertEqual(r.returncode, 1)

    def test_computation_error(self):
        r = run("degree", q("a3"), "--arrow", "99")
        self.assertEqual(r.returncode, 1)
        self.assertIn("unknown arrow", r.stderr)


class JsonReports(unittest.TestCase):
    cases = [
        ("validate", [q("a3_ar")]),
        ("validate", [q("a3")]),
        ("mesh", [q("a3_ar")]),
        ("knit", [q("d4")]),
        ("knit", [q("atilde2"), "--from-injectives", "--bound", "4"]),
        ("cover", [q("a2_ar"), "--radius", "3"]),
        ("cover", [q("atilde2"), "--knit", "--from-injectives", "--bound", "4", "--radius", "5"]),
        ("degree", [q("a3")]),
        ("finite-type", [q("a4")]),
        ("finite-type", [q("atilde2"), "--bound", "6"]),
        ("probe", [q("a3"), "--radius", "8"]),
        ("probe", [q("d4"), "--sample", "10", "--seed", "7"]),
    ]

    def test_schemas(self):
        for verb, args in self.cases:
            with self.subTest(verb=verb, args=args):
                r = run(verb, *args, "--json")
                self.assertIn(r.returncode, (0, 1, 2), r.stderr)
                doc = json.loads(r.stdout)
                jsonschema.validate(doc, schema(verb))

    def test_deterministic(self):
        for verb, args in self.cases[-4:]:
            with self.subTest(verb=verb):
                self.assertEqual(run(verb, *args, "--json").stdout, run(verb, *args, "--json").stdout)

    def test_degree_values(self):
        doc = json.loads(run("degree", q("a2"), "--json").stdout)
        by_label = {(a["source_label"], a["target_label"]): a for a in doc["arrows"]}
        epi = by_label[("P1=I2", "I1")]
        self.assertEqual(epi["left"]["degree"], 1)
        self.assertEqual(epi["left"]["witness"]["label"], "P2")
        mono = by_label[("P2", "P1=I2")]
        self.assertEqual(mono["right"]["degree"], 1)

    def test_cover_strictly_larger(self):
        doc = json.loads(run("cover", q("atilde2"), "--knit", "--from-injectives", "--bound", "4",
                             "--radius", "5", "--json").stdout)
        self.assertTrue(doc["ok"])
        self.assertGreater(doc["vertices"], doc["base_vertices"])
        self.assertGreater(doc["repeated_base_vertices"], 0)


class Files(unittest.TestCase):
    def test_knit_output_is_a_translation_quiver(self):
        with tempfile.TemporaryDirectory() as d:
            out = os.path.join(d, "ar.quiver")
            self.assertEqual(run("knit", q("a4"), "--out", out).returncode, 0)
            r = run("validate", out, "--json")
            self.assertEqual(r.returncode, 0, r.stdout)
            doc = json.loads(r.stdout)
            self.assertTrue(doc["valid"])
            self.assertTrue(doc["with_length"])
            self.assertEqual(doc["vertices"], 10)

    def test_cover_output_round_trips(self):
        with tempfile.TemporaryDirectory() as d:
            out = os.path.join(d, "cover.quiver")
            r = run("cover", q("atilde2"), "--knit", "--from-injectives", "--bound", "4", "--radius", "4", "--out", out)
            self.assertEqual(r.returncode, 0, r.stderr)
            self.assertEqual(r.stdout, "")
            with open(out) as f:
                text = f.read()
            self.assertIn("pi v 0 0", text)
            self.assertEqual(run("validate", out).returncode, 0)

    def test_json_is_one_document(self):
        r = run("mesh", q("a2_ar"), "--json")
        self.assertEqual(r.returncode, 0)
        json.loads(r.stdout)
        self.assertEqual(r.stderr, "")


if __name__ == "__main__":
    unittest.main(argv=sys.argv[:1], verbosity=2)

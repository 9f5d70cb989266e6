# atlas/tests/test_corpus.py
"""
PATH: atlas/tests/test_corpus.py

GOLDEN CORPUS + ATLAS SURFACE TESTS

Purpose:
- The whole golden corpus passes, section by section
- atlas / check_corpus commands keep their exit-code contract
- The read-only API answers from the same registry
"""

from __future__ import annotations

import io
import json
import tempfile
from pathlib import Path
from unittest import mock
from wsgiref.util import setup_testing_defaults

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase, override_settings
from rest_framework.test import APIClient

from atlas.services.golden_corpus import SECTIONS, run_corpus
from atlas.services.verifier import VerificationCheck, VerificationReport
from backend.wsgi import application as wsgi_application
from cohomtable.services.criteria import ext2_vanishes
from cohomtable.services.golden import load_golden
from cohomtable.services.instantiation import instantiate


class GoldenCorpusTests(SimpleTestCase):
    """
    GUARANTEES:
    - every section reports and every check passes
    - the extremal strata are exactly where the unobstructedness criterion stops applying
    """

    def test_corpus_passes(self):
        report = run_corpus()
        self.assertTrue(report.ok, [f"{c.section} {c.name}: {c.detail}" for c in report.failures])
        self.assertEqual(set(report.sections()), {name for name, _ in SECTIONS})

    def test_extremal_strata_escape_criterion(self):
        cases = (("r0_12", {"l": 1}), ("rm1_8", {"l": 1, "m": 1, "k": 1}), ("rm1_10", {"l": 1, "m": 1}))
        for name, assignment in cases:
            with self.subTest(golden=name):
                table = instantiate(load_golden(name).corrected_table(), assignment)
                self.assertIs(ext2_vanishes(table, 3), False)


class AtlasCommandTests(SimpleTestCase):
    """
    GUARANTEES:
    - queries print records; JSON is schema-stable and can be written to --out
    - --verify exits 0 on the shipped registry and 1 on a failing report
    - an unknown label is bad input (exit 2)
    """

    def _run(self, *args) -> str:
        out = io.StringIO()
        call_command("atlas", *args, stdout=out)
        return out.getvalue()

    def test_plain_query(self):
        text = self._run("--c1", "0", "--c3", "10")
        self.assertIn("R(0,4,10)_1: dim 27", text)
        self.assertIn("3 record(s)", text)

    def test_json_query_with_out(self):
        with tempfile.TemporaryDirectory() as tmp:
            target = Path(tmp) / "nested" / "records.json"
            payload = json.loads(self._run("--label", "R(-1,4,12)", "--format", "json", "--out", str(target)))
            self.assertEqual(json.loads(target.read_text(encoding="utf-8")), payload)

        (record,) = payload
        self.assertEqual(record["dim"], 27)
        self.assertEqual(record["spectrum"], [-3, -2, -2, -1])
        self.assertEqual(record["ingredients"][0]["cover"], ["O(-1)", "O(-2)^2"])

    def test_export(self):
        with tempfile.TemporaryDirectory() as tmp:
            target = Path(tmp) / "c3_12.jsonl"
            self._run("--c3", "12", "--export", str(target))
            lines = target.read_text(encoding="utf-8").splitlines()
        self.assertEqual([json.loads(line)["label"] for line in lines], ["R(0,4,12)_0", "R(0,4,12)_1", "R(-1,4,12)"])

    def test_markdown_query(self):
        text = self._run("--c1", "-1", "--c3", "16", "--format", "markdown")
        self.assertTrue(text.startswith("| label | dim |"))
        self.assertIn("R(-1,4,16)", text)

    def test_verify_ok(self):
        self.assertIn("[OK]", self._run("--verify"))

    def test_verify_subset_json(self):
        payload = json.loads(self._run("--verify", "--c1", "-1", "--c3", "8", "--format", "json"))
        self.assertTrue(payload["ok"])
        self.assertGreater(payload["checks"], 0)
        self.assertEqual(payload["failures"], [])

    def test_verify_failure_exits_1(self):
        failing = VerificationReport((VerificationCheck("R(0,4,10)_1", "ingredient:serre", False, "28", "27"),))
        with mock.patch("atlas.management.commands.atlas.verify_registry", return_value=failing):
            with self.assertRaises(SystemExit) as ctx:
                self._run("--verify")
        self.assertEqual(ctx.exception.code, 1)

    def test_unknown_label_exits_2(self):
        with self.assertRaises(CommandError) as ctx:
            self._run("--label", "R(0,4,99)")
        self.assertEqual(ctx.exception.returncode, 2)


class CheckCorpusCommandTests(SimpleTestCase):
    """
    GUARANTEES:
    - the corpus command reports every section and writes its JSON report
    """

    def test_plain_and_out(self):
        out = io.StringIO()
        with tempfile.TemporaryDirectory() as tmp:
            target = Path(tmp) / "corpus.json"
            call_command("check_corpus", "--out", str(target), stdout=out)
            payload = json.loads(target.read_text(encoding="utf-8"))

        self.assertTrue(payload["ok"])
        self.assertEqual(payload["failures"], [])
        self.assertEqual(payload["sections"]["resolutions"], {"passed": 10, "total": 10})
        for name, _ in SECTIONS:
            self.assertIn(f"[OK] {name}:", out.getvalue())


class AtlasApiTests(SimpleTestCase):
    """
    GUARANTEES:
    - /api/atlas/components/ filters the registry; bad filters are 400
    - /api/atlas/verify/ reports a clean registry
    - /api/health/ and /api/spectra/ answer from the shipped data, also through backend.wsgi
    """

    def setUp(self):
        self.client = APIClient()

    def test_components(self):
        response = self.client.get("/api/atlas/components/", {"c1": -1, "c3": 10})
        self.assertEqual(response.status_code, 200)
        self.assertEqual(response.data["count"], 5)
        labels = [r["label"] for r in response.data["results"]]
        self.assertIn("R(-1,4,10)_{1,1}", labels)

    def test_components_bad_filter(self):
        response = self.client.get("/api/atlas/components/", {"c1": 1})
        self.assertEqual(response.status_code, 400)

    def test_verify(self):
        response = self.client.get("/api/atlas/verify/")
        self.assertEqual(response.status_code, 200)
        self.assertTrue(response.data["ok"])
        self.assertEqual(response.data["failures"], [])

    def test_health(self):
        response = self.client.get("/api/health/")
        self.assertEqual(response.status_code, 200)
        self.assertEqual(response.data, {"status": "ok", "registry": "37 records"})

    @override_settings(ALLOWED_HOSTS=["*"])
    def test_wsgi_entry_point_serves_health(self):
        environ = {"PATH_INFO": "/api/health/", "REQUEST_METHOD": "GET", "REMOTE_ADDR": "127.0.0.1"}
        setup_testing_defaults(environ)
        statuses = []

        body = b"".join(wsgi_application(environ, lambda status, headers: statuses.append(status)))

        self.assertEqual(statuses, ["200 OK"])
        self.assertEqual(json.loads(body), {"status": "ok", "registry": "37 records"})

    def test_spectra(self):
        response = self.client.get("/api/spectra/", {"c1": 0, "c2": 4, "c3": 10})
        self.assertEqual(response.status_code, 200)
        self.assertEqual(response.data["count"], 2)
        statuses = {r["label"]: r["status"] for r in response.data["results"]}
        self.assertEqual(statuses["{-2,-2,-1,0}"], "unrealized")

# cohomtable/tests/test_golden.py
"""
PATH: cohomtable/tests/test_golden.py

GOLDEN TABLE TESTS

Purpose:
- Every shipped golden loads and validates
- Every golden is reproduced at every allowed assignment
- Known misprints are caught by the column identity
- The table command's exit codes
"""

from __future__ import annotations

import io
import json

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase

from cohomtable.services.exceptions import GoldenFormatError
from cohomtable.services.golden import golden_names, load_golden, parse_golden
from cohomtable.services.instantiation import instantiate
from cohomtable.services.reproduction import reproduce
from cohomtable.services.tables import column_identity_holds


class GoldenLoadingTests(SimpleTestCase):
    """
    GUARANTEES:
    - 18 goldens ship (three for the F_z family)
    - Schema and consistency violations raise GoldenFormatError
    """

    def test_corpus_present(self):
        names = golden_names()
        self.assertEqual(len(names), 18)
        for expected in ("r0_8", "r0_10", "rm1_8", "rm1_12"):
            self.assertIn(expected, names)

    def test_printed_values_survive(self):
        golden = load_golden("rm1_6_a")
        self.assertEqual(str(golden.printed_table().entry(2, -3)), "7")
        self.assertEqual(str(golden.corrected_table().entry(2, -3)), "8")

    def _document(self):
        return {
            "name": "probe",
            "source": "probe",
            "c1": 0,
            "c2": 4,
            "c3": 10,
            "spectrum": [-2, -1, -1, -1],
            "range": [0, 1],
            "rows": {"h0": [0, "l+1"], "h1": [1, "l"], "h2": [0, 0], "h3": [0, 0]},
            "params": {"l": {"min": 0, "max": 1}},
        }

    def test_valid_document(self):
        golden = parse_golden(self._document())
        self.assertEqual(golden.printed_table().free_parameters, ("l",))

    def test_format_violations(self):
        broken = self._document()
        broken["rows"]["h0"] = [0]
        with self.assertRaises(GoldenFormatError):
            parse_golden(broken)

        broken = self._document()
        del broken["params"]
        with self.assertRaises(GoldenFormatError):
            parse_golden(broken)

        broken = self._document()
        broken["spectra"] = [{"when": {}, "values": [-2, -1, -1, -1]}]
        with self.assertRaises(GoldenFormatError):
            parse_golden(broken)

        broken = self._document()
        broken["errata"] = [
            {"row": 0, "twist": 0, "printed": 5, "corrected": 0, "reason": "quotes a wrong value"}
        ]
        with self.assertRaises(GoldenFormatError):
            parse_golden(broken)

    def test_unknown_golden(self):
        with self.assertRaises(GoldenFormatError):
            load_golden("no_such_table")


class GoldenReproductionTests(SimpleTestCase):
    """
    GUARANTEES:
    - Synthesis + facts + instantiation reproduce every golden exactly
    - Misprints break the identity; corrections restore it
    - Corrected goldens satisfy the identity on every column
    """

    def test_every_golden_reproduces(self):
        for name in golden_names():
            with self.subTest(golden=name):
                report = reproduce(load_golden(name))
                self.assertTrue(report.ok, "\n".join(report.failures()))
                self.assertGreaterEqual(len(report.outcomes), 1)

    def test_strata_counts(self):
        self.assertEqual(len(reproduce(load_golden("r0_8")).outcomes), 5)
        self.assertEqual(len(reproduce(load_golden("rm1_8")).outcomes), 6)
        self.assertEqual(len(reproduce(load_golden("rm1_10")).outcomes), 4)

    def test_errata_are_detected(self):
        for name in ("rm1_6_a", "rm1_6_b", "rm1_8"):
            report = reproduce(load_golden(name))
            self.assertEqual(len(report.errata), 1)
            self.assertTrue(report.errata[0].printed_breaks_identity)
            self.assertTrue(report.errata[0].corrected_holds)

    def test_corrected_goldens_satisfy_identity(self):
        for name in golden_names():
            corrected = load_golden(name).corrected_table()
            for assignment in corrected.assignments():
                table = instantiate(corrected, assignment)
                for p in table.twists:
                    with self.subTest(golden=name, assignment=assignment, p=p):
                        self.assertTrue(column_identity_holds(table, p))


# ============================================================
# COMMAND
# ============================================================


class TableCommandTests(SimpleTestCase):
    """
    GUARANTEES:
    - Matching synthesis exits 0; mismatches exit 1
    - Bad input exits 2; contradictions exit 3
    - JSON output carries the table and the diff
    """

    def _run(self, *args):
        out, err = io.StringIO(), io.StringIO()
        call_command("table", *args, stdout=out, stderr=err)
        return out.getvalue()

    def test_synthesize_and_diff_json(self):
        output = self._run(
            "--c1", "0", "--c3", "10", "--spectrum=-2,-1,-1,-1", "--range=-2:2",
            "--fact", "reg=3", "--golden", "r0_10", "--format", "json",
        )
        payload = json.loads(output)
        self.assertTrue(payload["diff"]["empty"])
        self.assertEqual(payload["table"]["rows"]["h2"], [5, 1, 0, 0, 0])
        self.assertEqual(payload["table"]["rows"]["h1"][3], "t_1")

    def test_mismatch_exits_one(self):
        with self.assertRaises(SystemExit) as ctx:
            self._run(
                "--c1", "0", "--c3", "8", "--spectrum=-1,-1,-1,-1", "--range=-3:3",
                "--golden", "r0_8",
            )
        self.assertEqual(ctx.exception.code, 1)

    def test_reproduce_golden(self):
        output = self._run("--golden", "rm1_8")
        self.assertIn("[OK]", output)

    def test_invalid_arguments(self):
        with self.assertRaises(CommandError) as ctx:
            self._run("--c1", "0", "--c3", "10")
        self.assertEqual(ctx.exception.returncode, 2)
        with self.assertRaises(CommandError) as ctx:
            self._run("--c1", "0", "--c3", "10", "--spectrum=-1,-1,-1,-1", "--range=-2:2")
        self.assertEqual(ctx.exception.returncode, 2)

    def test_contradiction_exits_three(self):
        with self.assertRaises(CommandError) as ctx:
            self._run(
                "--c1", "0", "--c3", "10", "--spectrum=-2,-1,-1,-1", "--range=-2:2",
                "--fact", "h0@0=2",
            )
        self.assertEqual(ctx.exception.returncode, 3)

    def test_ext2_flag(self):
        output = self._run(
            "--c1", "-1", "--c3", "12", "--spectrum=-3,-2,-2,-1", "--range=-3:3",
            "--fact", "acm", "--ext2", "3",
        )
        self.assertIn("ext2 criterion at k=3: True", output)

    def test_markdown_output(self):
        output = self._run(
            "--c1", "-1", "--c3", "12", "--spectrum=-3,-2,-2,-1", "--range=-3:3",
            "--fact", "acm", "--format", "markdown",
        )
        self.assertIn("| h2(F(p)) | 11 | 8 | 4 | 1 | 0 | 0 | 0 |", output)
        self.assertIn("| h1(F(p)) | 0 | 0 | 0 | 0 | 0 | 0 | 0 |", output)

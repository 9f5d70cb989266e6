# curves/tests/test_cases.py
"""
PATH: curves/tests/test_cases.py

CASE PROFILE + EXTREMAL CURVE TESTS

Purpose:
- Pin the quintic h1 profiles and sextic case invariants
- Guard the extremal genus, h1 window and obstruction values
- Exercise the serre command end to end
"""

from __future__ import annotations

import io
import json

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase

from curves.services.cases import (
    DirectLink,
    Extremal,
    PlanarResidual,
    QuinticOnQuadric,
    Subextremal,
    Type05,
    Type14,
    quintic_h1_profile,
    sextic_case_invariants,
)
from curves.services.exceptions import InvalidCurveError, UnsupportedCaseError
from curves.services.extremal import (
    ext2_lower_bound,
    extremal_constraints,
    extremal_genus,
    extremal_obstruction,
    extremal_sheaf_h1,
)
from curves.services.serre import CurveClass

TWISTS = range(-8, 12)


class QuinticProfileTests(SimpleTestCase):
    """
    GUARANTEES:
    - (0,5) divisors: 4, 6, 6, 4 on t = 0..3
    - (1,4) divisors: 2 on t = 1, 2
    - subextremal profiles are nonnegative and vanish for genus 2
    - the extremal case has no profile
    """

    def test_type05(self):
        self.assertEqual([quintic_h1_profile(Type05(), t) for t in range(-1, 5)], [0, 4, 6, 6, 4, 0])

    def test_type14(self):
        self.assertEqual(quintic_h1_profile(Type14(), 1), 2)
        self.assertEqual(quintic_h1_profile(Type14(), 5), 0)

    def test_subextremal_genus_two_is_acm(self):
        self.assertTrue(all(quintic_h1_profile(Subextremal(2), t) == 0 for t in TWISTS))

    def test_subextremal_nonnegative(self):
        for genus in range(-6, 3):
            for t in TWISTS:
                self.assertGreaterEqual(quintic_h1_profile(Subextremal(genus), t), 0)

    def test_subextremal_rational_quintic(self):
        profile = [quintic_h1_profile(Subextremal(0), t) for t in range(-1, 5)]
        self.assertEqual(profile, [0, 1, 2, 2, 1, 0])

    def test_subextremal_genus_cap(self):
        with self.assertRaises(InvalidCurveError):
            Subextremal(3)

    def test_extremal_rejected(self):
        with self.assertRaises(UnsupportedCaseError):
            quintic_h1_profile(Extremal(), 1)


class SexticCaseTests(SimpleTestCase):
    """
    GUARANTEES:
    - direct links go to a cubic of genus g - 3
    - planar residual cases fix genus and h0(I_C(3))
    """

    def test_direct_link(self):
        result = sextic_case_invariants(DirectLink(), g=2)
        self.assertEqual(result.linked, CurveClass(3, -1))

    def test_direct_link_needs_genus(self):
        with self.assertRaises(InvalidCurveError):
            sextic_case_invariants(DirectLink())

    def test_planar_cubic(self):
        result = sextic_case_invariants(PlanarResidual(3, 1))
        self.assertEqual((result.genus, result.h0_cubics), (2, 3))

    def test_planar_quartic(self):
        result = sextic_case_invariants(PlanarResidual(4, 4, k=-1))
        self.assertEqual((result.genus, result.h0_cubics), (-1, 4))
        result = sextic_case_invariants(PlanarResidual(4, 1, k=-2))
        self.assertEqual((result.genus, result.h0_cubics), (1, 3))

    def test_planar_conic(self):
        result = sextic_case_invariants(PlanarResidual(2, 3))
        self.assertEqual((result.genus, result.h0_cubics), (1, 2))
        with self.assertRaises(UnsupportedCaseError):
            sextic_case_invariants(PlanarResidual(2, 1))

    def test_quintic_on_quadric(self):
        self.assertEqual(sextic_case_invariants(QuinticOnQuadric()).h0_cubics, 2)

    def test_genus_mismatch(self):
        with self.assertRaises(UnsupportedCaseError):
            sextic_case_invariants(PlanarResidual(3, 1), g=0)

    def test_invalid_planar_data(self):
        with self.assertRaises(InvalidCurveError):
            PlanarResidual(5, 1)
        with self.assertRaises(InvalidCurveError):
            PlanarResidual(4, 1)
        with self.assertRaises(InvalidCurveError):
            PlanarResidual(3, 0)


class ExtremalTests(SimpleTestCase):
    """
    GUARANTEES:
    - genus (d-2)(d-3)/2 - len(Z)
    - h1 support is exactly [-2-c1, d-2-c1]
    - obstruction 1 for (0,5,1) and len(Z)-1 for (-1,4,len(Z))
    """

    def test_genus(self):
        self.assertEqual(extremal_genus(5, 1), 2)
        self.assertEqual(extremal_genus(4, 2), -1)
        self.assertEqual(extremal_genus(3, 1), -1)
        with self.assertRaises(InvalidCurveError):
            extremal_genus(2, 1)

    def test_sheaf_h1_examples(self):
        self.assertEqual(extremal_sheaf_h1(0, 5, 1, 1), 1)
        self.assertEqual(extremal_sheaf_h1(-1, 4, 2, -3), 0)
        self.assertEqual(extremal_sheaf_h1(0, 5, 1, -2), 0)

    def test_sheaf_h1_support_window(self):
        for c1 in (0, -1):
            for d in range(3, 8):
                for len_z in (2, 3):
                    support = [t for t in TWISTS if extremal_sheaf_h1(c1, d, len_z, t)]
                    self.assertEqual(support, list(range(-2 - c1, d - 1 - c1)))

    def test_constraints(self):
        self.assertEqual(extremal_constraints(0).len_z_allowed, {1})
        self.assertEqual(extremal_constraints(-1).len_z_allowed, {1, 2})
        for c1 in (0, -1):
            constraints = extremal_constraints(c1)
            for len_z in constraints.len_z_allowed:
                self.assertLessEqual(2 * constraints.k, 3 - c1 - len_z)

    def test_obstruction_values(self):
        self.assertEqual(extremal_obstruction(0, 5, 1, False).value, 1)
        self.assertEqual(extremal_obstruction(-1, 4, 2, False).value, 1)
        self.assertEqual(extremal_obstruction(-1, 4, 1, False).value, 0)
        bounded = extremal_obstruction(-1, 4, 1, True)
        self.assertIsNone(bounded.value)
        self.assertEqual(bounded.upper_bound, 1)

    def test_obstruction_rejections(self):
        with self.assertRaises(UnsupportedCaseError):
            extremal_obstruction(0, 6, 1, False)
        with self.assertRaises(UnsupportedCaseError):
            extremal_obstruction(0, 5, 1, True)
        with self.assertRaises(UnsupportedCaseError):
            extremal_obstruction(0, 5, 2, False)

    def test_lower_bound_beyond_closed_form(self):
        # d = 7 > 5 + c1: only a lower bound
        self.assertEqual(ext2_lower_bound(0, 7, 1), 1)


class SerreCommandTests(SimpleTestCase):
    """
    GUARANTEES:
    - the command reports curve, omega twist and section count
    - family dimension follows dim C + h0(omega) - h0(F(k))
    - inconsistent input exits 2
    """

    def _run(self, *args):
        out = io.StringIO()
        call_command("serre", *args, stdout=out)
        return out.getvalue()

    def test_json_report(self):
        payload = json.loads(
            self._run("--c1", "-1", "--c3", "8", "--k", "2", "--dim-curves", "24", "--h0-fk", "4", "--format", "json")
        )
        self.assertEqual(payload["curve"], {"degree": 6, "genus": 2, "extrapolated": False})
        self.assertEqual(payload["dualizing_twist"], 1)
        self.assertEqual(payload["h0_omega"], 7)
        self.assertEqual(payload["family_dim"], 27)

    def test_plain_report(self):
        output = self._run("--c1", "0", "--c3", "8", "--dim-curves", "20", "--h0-fk", "1")
        self.assertIn("(d=5, p_a=0)", output)
        self.assertIn("h0(omega_C(2)) = 9", output)
        self.assertIn("family dimension = 28", output)

    def test_parity_error_exits_two(self):
        with self.assertRaises(CommandError) as ctx:
            self._run("--c1", "0", "--c3", "7")
        self.assertEqual(ctx.exception.returncode, 2)

    def test_family_flags_go_together(self):
        with self.assertRaises(CommandError) as ctx:
            self._run("--c1", "0", "--c3", "8", "--dim-curves", "20")
        self.assertEqual(ctx.exception.returncode, 2)

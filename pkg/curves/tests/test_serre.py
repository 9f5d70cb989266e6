# curves/tests/test_serre.py
"""
PATH: curves/tests/test_serre.py

SERRE CURVE + RIEMANN-ROCH TESTS

Purpose:
- Pin degree/genus of zero-locus curves at c2 = 4
- Keep serre_curve in step with chow.twist
- Guard the omega_C section count and its vanishing assumption
"""

from __future__ import annotations

import random

from django.test import SimpleTestCase

from chow.services.chern import ChernTriple, twist
from curves.services.exceptions import (
    InvalidCurveError,
    NonIntegralGenusError,
    OmegaAssumptionError,
)
from curves.services.serre import (
    CurveClass,
    curve_chi,
    dualizing_twist,
    omega_sections,
    serre_curve,
)


class SerreCurveTests(SimpleTestCase):
    """
    GUARANTEES:
    - (0,4,8,k=1) -> (5,0); (-1,4,12,k=1) -> (4,1); (-1,4,2,k=2) -> (6,-1)
    - k = 1 and k = 2 reproduce the closed c2 = 4 formulas for every even c3
    - parity violations raise, never round
    """

    def test_documented_examples(self):
        self.assertEqual(serre_curve(c1=0, c2=4, c3=8, k=1), CurveClass(5, 0))
        self.assertEqual(serre_curve(c1=-1, c2=4, c3=12, k=1), CurveClass(4, 1))
        self.assertEqual(serre_curve(c1=-1, c2=4, c3=2, k=2), CurveClass(6, -1))

    def test_closed_forms_at_c2_four(self):
        k_one_shift = {0: -4, -1: -5}
        for c1 in (0, -1):
            for c3 in range(0, 17, 2):
                one = serre_curve(c1=c1, c2=4, c3=c3, k=1)
                self.assertEqual(one.degree, c1 + 5)
                self.assertEqual(one.genus, c3 // 2 + k_one_shift[c1])

                two = serre_curve(c1=c1, c2=4, c3=c3, k=2)
                self.assertEqual(two.degree, 2 * c1 + 8)
                self.assertEqual(two.genus, c3 // 2 + (c1 + 4) * c1 + 1)

    def test_k_two_genus_for_both_c1(self):
        self.assertEqual(serre_curve(c1=0, c2=4, c3=10, k=2), CurveClass(8, 6))
        # c3/2 - 2 at c1 = -1
        self.assertEqual(serre_curve(c1=-1, c2=4, c3=10, k=2), CurveClass(6, 3))

    def test_degree_agrees_with_twist(self):
        rng = random.Random(20240611)
        for _ in range(200):
            c1 = rng.choice((0, -1))
            c2 = rng.randint(1, 9)
            k = rng.randint(1, 5)
            # c3 parity chosen so the genus is integral
            c3 = 2 * rng.randint(0, 20) + (c1 * c2) % 2
            curve = serre_curve(c1=c1, c2=c2, c3=c3, k=k)
            self.assertEqual(curve.degree, twist(ChernTriple(2, c1, c2, c3), k).c2)
            self.assertEqual(
                2 * curve.genus - 2 + curve.degree * (4 - 2 * k - c1), c3
            )

    def test_extrapolated_flag(self):
        self.assertFalse(serre_curve(c1=0, c2=4, c3=8, k=1).extrapolated)
        self.assertTrue(serre_curve(c1=0, c2=3, c3=4, k=1).extrapolated)

    def test_parity_violation_raises(self):
        with self.assertRaises(NonIntegralGenusError):
            serre_curve(c1=0, c2=4, c3=7, k=1)

    def test_bad_inputs(self):
        with self.assertRaises(InvalidCurveError):
            serre_curve(c1=0, c2=4, c3=8, k=0)
        with self.assertRaises(ValueError):
            serre_curve(c1=1, c2=4, c3=8, k=1)
        with self.assertRaises(InvalidCurveError):
            CurveClass(0, 0)

    def test_dualizing_twist(self):
        self.assertEqual(dualizing_twist(0, 1), 2)
        self.assertEqual(dualizing_twist(-1, 1), 3)
        self.assertEqual(dualizing_twist(-1, 2), 1)


class RiemannRochTests(SimpleTestCase):
    """
    GUARANTEES:
    - curve_chi is n*d + 1 - g
    - omega_sections(c, n) = -curve_chi(c, -n) whenever it succeeds
    - impossible counts raise OmegaAssumptionError
    """

    def test_curve_chi_examples(self):
        self.assertEqual(curve_chi(CurveClass(4, -1), 0), 2)
        self.assertEqual(curve_chi(CurveClass(6, 2), -1), -5)
        self.assertEqual(curve_chi(CurveClass(5, 0), -2), -9)

    def test_omega_sections_examples(self):
        self.assertEqual(omega_sections(CurveClass(6, 2), 1), 7)
        self.assertEqual(omega_sections(CurveClass(5, 0), 2), 9)
        self.assertEqual(omega_sections(CurveClass(4, -1), 3), 10)

    def test_omega_is_negated_chi(self):
        for d in range(1, 9):
            for g in range(-3, 6):
                for n in range(1, 5):
                    c = CurveClass(d, g)
                    try:
                        value = omega_sections(c, n)
                    except OmegaAssumptionError:
                        self.assertLess(n * d + g - 1, 0)
                        continue
                    self.assertEqual(value + curve_chi(c, -n), 0)

    def test_nonpositive_twist_rejected(self):
        with self.assertRaises(OmegaAssumptionError):
            omega_sections(CurveClass(5, 0), 0)

    def test_negative_count_rejected(self):
        with self.assertRaises(OmegaAssumptionError):
            omega_sections(CurveClass(1, -3), 1)

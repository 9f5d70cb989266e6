# atlas/tests/test_dimensions.py
"""
PATH: atlas/tests/test_dimensions.py

DIMENSION COUNT TESTS

Purpose:
- Serre family counts behind the registry
- Lift dimensions of the resolution anchors
- Expected dimension anchoring
"""

from __future__ import annotations

from django.test import SimpleTestCase

from atlas.services.dimensions import (
    SerreFamilyInput,
    expected_dimension,
    lift_dimension,
    serre_family_dim,
)
from atlas.services.exceptions import (
    InvalidFamilyInputError,
    UnsupportedExpectedDimensionError,
)
from chow.services.bundles import BundleTerm

O = BundleTerm.line
T = BundleTerm.tangent


class SerreFamilyDimTests(SimpleTestCase):
    """
    GUARANTEES:
    - dim F = dim C + h0(omega_C(n)) - h0(F(k))
    - h0(F(k)) = 0 and negative section counts are rejected
    """

    def test_published_counts(self):
        cases = {(24, 7, 4): 27, (20, 9, 1): 28, (19, 10, 2): 27, (16, 11, 1): 26, (17, 10, 1): 26}
        for (dim_curves, h0_omega, h0_Fk), expected in cases.items():
            with self.subTest(dim_curves=dim_curves):
                i = SerreFamilyInput(dim_curves=dim_curves, h0_omega=h0_omega, h0_Fk=h0_Fk)
                self.assertEqual(serre_family_dim(i), expected)

    def test_needs_a_section(self):
        with self.assertRaises(InvalidFamilyInputError):
            SerreFamilyInput(dim_curves=20, h0_omega=9, h0_Fk=0)

    def test_negative_omega(self):
        with self.assertRaises(InvalidFamilyInputError):
            SerreFamilyInput(dim_curves=20, h0_omega=-1, h0_Fk=1)


class LiftDimensionTests(SimpleTestCase):
    """
    GUARANTEES:
    - every resolution anchor lifts to a family of the expected dimension
    - a non-minimal resolution overcounts automorphisms
    """

    def test_anchors(self):
        self.assertEqual(lift_dimension([T(-4), O(-3)], [O(-1), O(-2, 5)]), 29)
        self.assertEqual(lift_dimension([T(-4, 2)], [O(-2, 8)]), 29)
        self.assertEqual(lift_dimension([O(-3, 2)], [O(-2, 2), O(-1, 2)]), 29)
        self.assertEqual(lift_dimension([O(-3, 3)], [O(-2, 5)]), 27)
        self.assertEqual(lift_dimension([O(-4)], [O(-1), O(-2, 2)]), 27)

    def test_non_minimal_form_differs(self):
        self.assertEqual(lift_dimension([O(-4), O(-3)], [O(-1), O(-2, 2), O(-3)]), 26)


class ExpectedDimensionTests(SimpleTestCase):
    def test_anchored(self):
        self.assertEqual(expected_dimension(0, 4), 29)
        self.assertEqual(expected_dimension(-1, 4), 27)

    def test_unanchored(self):
        with self.assertRaises(UnsupportedExpectedDimensionError):
            expected_dimension(0, 5)

# chow/tests/test_chern.py
"""
PATH: chow/tests/test_chern.py

CHERN CHARACTER + TWIST TESTS

Purpose:
- Pin the character expansion and its inverse
- Guard twisting as multiplication by exp(n h)
- Check euler_char against the closed c2 = 4 polynomials
"""

from __future__ import annotations

import random
from fractions import Fraction
from math import comb

from django.test import SimpleTestCase

from chow.services.chern import (
    ChernTriple,
    chern_character,
    chern_triple_of,
    euler_char,
    normalize,
    twist,
)
from chow.services.chow_ring import ChowClass
from chow.services.exceptions import (
    ChernIntegralityError,
    InexactCoefficientError,
    InvalidChernTripleError,
)
from chow.services.hrr import hrr_reference


class ChowRingTests(SimpleTestCase):
    def test_truncates_at_degree_four(self):
        h = ChowClass.hyperplane()
        self.assertEqual(h * h * h * h, ChowClass())
        self.assertEqual((h * h * h).coeff3, 1)

    def test_product_of_positive_degree_classes_starts_in_degree_two(self):
        a = ChowClass(0, 3, Fraction(1, 2), 7)
        b = ChowClass(0, -2, 5, 1)
        product = a * b
        self.assertEqual(product.coeff0, 0)
        self.assertEqual(product.coeff1, 0)
        self.assertEqual(product.coeff2, -6)

    def test_exp_is_a_homomorphism(self):
        self.assertEqual(ChowClass.exp(2) * ChowClass.exp(-5), ChowClass.exp(-3))

    def test_floats_are_refused(self):
        with self.assertRaises(InexactCoefficientError):
            ChowClass(0.5)


class ChernCharacterTests(SimpleTestCase):
    """
    GUARANTEES:
    - Documented expansions for (2,0,4,8), (1,0,0,0), (2,-1,4,12)
    - chern_triple_of inverts chern_character
    """

    def test_expansion_examples(self):
        self.assertEqual(
            chern_character(ChernTriple(2, 0, 4, 8)), ChowClass(2, 0, -4, 4)
        )
        self.assertEqual(chern_character(ChernTriple(1, 0, 0, 0)), ChowClass.one())
        self.assertEqual(
            chern_character(ChernTriple(2, -1, 4, 12)),
            ChowClass(2, -1, Fraction(-7, 2), Fraction(47, 6)),
        )

    def test_round_trip(self):
        for t in (
            ChernTriple(2, 0, 4, 8),
            ChernTriple(2, -1, 4, 12),
            ChernTriple(3, 5, -2, 9),
            ChernTriple(0, 0, 0, 0),
        ):
            self.assertEqual(chern_triple_of(chern_character(t)), t)

    def test_non_integral_character_is_rejected(self):
        with self.assertRaises(ChernIntegralityError):
            chern_triple_of(ChowClass(2, 0, Fraction(1, 3), 0))

    def test_rank_must_be_nonnegative(self):
        with self.assertRaises(InvalidChernTripleError):
            ChernTriple(-1, 0, 0, 0)

    def test_string_form(self):
        self.assertEqual(
            str(chern_character(ChernTriple(2, -1, 4, 12))),
            "2 - h - 7/2h^2 + 47/6h^3",
        )


class TwistTests(SimpleTestCase):
    """
    GUARANTEES:
    - Documented twist examples
    - Additivity and c3 invariance on 1000 seeded random rank-2 triples
    """

    def test_examples(self):
        self.assertEqual(twist(ChernTriple(2, -1, 4, 6), 2).c2, 6)
        self.assertEqual(twist(ChernTriple(2, 0, 4, 8), 0), ChernTriple(2, 0, 4, 8))
        self.assertEqual(twist(ChernTriple(2, 0, 4, 8), 1), ChernTriple(2, 2, 5, 8))

    def test_randomized_twist_properties(self):
        rng = random.Random(20240417)
        for _ in range(1000):
            t = ChernTriple(2, rng.randint(-20, 20), rng.randint(-50, 50), rng.randint(-60, 60))
            a, b = rng.randint(-15, 15), rng.randint(-15, 15)

            self.assertEqual(twist(twist(t, a), b), twist(t, a + b))

            moved = twist(t, a)
            self.assertEqual(moved.c3, t.c3)
            self.assertEqual(moved.c1, t.c1 + 2 * a)
            self.assertEqual(moved.c2, t.c2 + t.c1 * a + a * a)

    def test_normalize(self):
        for c1 in range(-7, 8):
            normalized, shift = normalize(ChernTriple(2, c1, 10, 4))
            self.assertIn(normalized.c1, (-1, 0))
            self.assertEqual(twist(normalized, -shift), ChernTriple(2, c1, 10, 4))


class EulerCharacteristicTests(SimpleTestCase):
    """
    GUARANTEES:
    - Documented values
    - Agreement with the closed c2 = 4 polynomials for l in [-6, 6], even c3 in [0, 16]
    """

    def test_examples(self):
        self.assertEqual(euler_char(ChernTriple(2, 0, 4, 8), 2), 8)
        self.assertEqual(euler_char(ChernTriple(2, -1, 4, 12), 1), 1)
        for n in range(0, 10):
            self.assertEqual(euler_char(ChernTriple(1, 0, 0, 0), n), comb(n + 3, 3))

    def test_matches_closed_polynomials(self):
        for c1 in (0, -1):
            for c3 in range(0, 17, 2):
                t = ChernTriple(2, c1, 4, c3)
                for l in range(-6, 7):  # noqa: E741
                    self.assertEqual(euler_char(t, l), hrr_reference(c1, c3, l))

    def test_known_columns(self):
        # chi(F(l)) - c3/2 for l = -3..4
        expected = {
            0: [4, 0, -4, -6, -4, 4, 20, 46],
            -1: [5, 2, -2, -5, -5, 0, 12, 33],
        }
        for c1, values in expected.items():
            for l, value in zip(range(-3, 5), values):  # noqa: E741
                self.assertEqual(euler_char(ChernTriple(2, c1, 4, 10), l), value + 5)

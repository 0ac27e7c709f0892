# -*- coding: utf-8 -*-

import unittest

import numpy as np

from hilbertmetric.domain import UnitBall
from hilbertmetric.exceptions import (HilbertMetricError, DegenerateInput, ParallelLines, CollinearPoints,
                                      DomainError, OutOfDomain, OutsideDomain, NearBoundary, NotOnCircle,
                                      InvalidPolygon, PolygonFormatError, UsageError)
from hilbertmetric.flags import NumericFlags
from hilbertmetric.hilbert import h_chord
from hilbertmetric.sampling import rng_for, ball_points, domain_pairs
from hilbertmetric.tests import ball3, disk, triangle


class TestHierarchy(unittest.TestCase):

    def test_subclasses(self):
        for cls in (ParallelLines, CollinearPoints):
            self.assertTrue(issubclass(cls, DegenerateInput))
        for cls in (OutsideDomain, NearBoundary):
            self.assertTrue(issubclass(cls, OutOfDomain))
        for cls in (OutOfDomain, NotOnCircle, InvalidPolygon):
            self.assertTrue(issubclass(cls, DomainError))
        for cls in (DegenerateInput, DomainError, PolygonFormatError, UsageError):
            self.assertTrue(issubclass(cls, HilbertMetricError))

    def test_message(self):
        e = OutsideDomain('point is outside', operation='h_chord', value=(2.0, 0.0))
        self.assertEqual(str(e), 'h_chord: point is outside')
        self.assertEqual(e.value, (2.0, 0.0))
        self.assertEqual(str(HilbertMetricError('plain')), 'plain')

    def test_operation_recorded(self):
        def action():
            try:
                h_chord(disk, (0, 0), (0, 1.2))
            except OutsideDomain as e:
                self.assertEqual(e.operation, 'h_chord')
                self.assertEqual(e.value, (0.0, 1.2))
                raise

        self.assertRaises(OutsideDomain, action)

    def test_too_many_coordinates(self):
        self.assertRaises(OutsideDomain, h_chord, disk, (0, 0, 0.1), (0, 0))

    def test_flags(self):
        strict = UnitBall(2, NumericFlags(eps_bnd=1e-3))
        self.assertRaises(NearBoundary, h_chord, strict, (0, 0), (0.9995, 0))
        self.assertGreater(h_chord(disk, (0, 0), (0.9995, 0)), 0)


class TestSampling(unittest.TestCase):

    def test_streams(self):
        first = rng_for('suite', 1).random(4)
        np.testing.assert_array_equal(first, rng_for('suite', 1).random(4))
        self.assertFalse(np.array_equal(first, rng_for('other', 1).random(4)))
        self.assertFalse(np.array_equal(first, rng_for('suite', 2).random(4)))

    def test_ball_points(self):
        points = ball_points(rng_for('points'), 500, 3, 0.5)
        self.assertEqual(points.shape, (500, 3))
        self.assertLessEqual(float(np.max(np.linalg.norm(points, axis=1))), 0.5)

    def test_domain_pairs(self):
        left, right = domain_pairs(rng_for('pairs'), triangle, 300, 0.01)
        self.assertEqual(left.shape, (300, 2))
        self.assertEqual(right.shape, (300, 2))
        for p in np.concatenate((left, right)):
            self.assertGreater(triangle.contains(p), 0.01)
        left, _ = domain_pairs(rng_for('pairs'), ball3, 10)
        self.assertEqual(left.shape, (10, 3))

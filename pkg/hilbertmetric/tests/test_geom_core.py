# -*- coding: utf-8 -*-

import math
import unittest

import numpy as np
from hypothesis import given, settings

from hilbertmetric.exceptions import CollinearPoints, DegenerateInput, NotOnCircle, OutOfDomain, ParallelLines
from hilbertmetric.geom_core import (as_point, as_points, as_complex, Circle2, Line2, cross_ratio, lis,
                                     lis_unit_circle, circle_through, mobius_T, dist_origin_line, arch, arth)
from hilbertmetric.tests import SQRT3_2, disk_points


class TestPoints(unittest.TestCase):

    def test_scalar_and_complex(self):
        np.testing.assert_array_equal(as_point(0.5), [0.5])
        np.testing.assert_array_equal(as_point(1 + 2j), [1.0, 2.0])
        self.assertEqual(as_complex((0.5, -0.25)), complex(0.5, -0.25))

    def test_padding(self):
        a, b = as_points(0.5, (0.0, 0.25, 0.5))
        np.testing.assert_array_equal(a, [0.5, 0.0, 0.0])
        self.assertEqual(b.size, 3)

    def test_not_finite(self):
        def action():
            as_point((float('nan'), 0.0))

        self.assertRaises(DegenerateInput, action)

    def test_line_and_circle(self):
        line = Line2(0j, 1 + 0j)
        self.assertGreater(line.side(0.5j), 0)
        self.assertAlmostEqual(line.distance((3.0, -2.0)), 2.0)
        self.assertRaises(DegenerateInput, Line2, 1j, 1j)
        self.assertRaises(DegenerateInput, Circle2, np.zeros(2), 0.0)
        circle = Circle2(np.array([0.0, 0.375]), 0.625)
        for p in circle.sample(16):
            self.assertTrue(circle.contains_point(p))


class TestCrossRatio(unittest.TestCase):

    def test_on_a_line(self):
        self.assertAlmostEqual(cross_ratio(-1, 0, 0.5, 1), 3.0, places=12)

    def test_repeated_inner_point(self):
        self.assertAlmostEqual(cross_ratio(-1, 0.3, 0.3, 1), 1.0, places=12)

    def test_horizontal_chord(self):
        value = cross_ratio((SQRT3_2, 0.5), (0.5, 0.5), (-0.5, 0.5), (-SQRT3_2, 0.5))
        self.assertAlmostEqual(value, 13.9282032303, places=8)

    def test_denominator_vanishes(self):
        def action():
            cross_ratio(0.5, 0.5, 0.0, 1.0)

        self.assertRaises(DegenerateInput, action)

    @settings(max_examples=100, deadline=None)
    @given(disk_points(), disk_points(), disk_points(), disk_points())
    def test_mobius_invariance(self, u, a, b, v):
        points = [complex(*p) for p in (u, a, b, v)]
        if min(abs(p - q) for i, p in enumerate(points) for q in points[i + 1:]) < 1e-3:
            return
        images = [mobius_T(0.3 + 0.4j, p) for p in points]
        self.assertAlmostEqual(cross_ratio(*points), cross_ratio(*images),
                               delta=1e-8 * cross_ratio(*points))


class TestIntersections(unittest.TestCase):

    def test_diagonals(self):
        np.testing.assert_allclose(lis((0, 0), (1, 1), (1, 0), (0, 1)), [0.5, 0.5], atol=1e-12)

    def test_axes(self):
        np.testing.assert_allclose(lis((-1, 0), (1, 0), (0, -1), (0, 1)), [0.0, 0.0], atol=1e-12)

    def test_parallel(self):
        def action():
            lis((1, 0), (0, 1), (-1, 0), (0, -1))

        self.assertRaises(ParallelLines, action)

    def test_unit_circle_formula(self):
        np.testing.assert_allclose(lis_unit_circle(1, -1, 1j, -1j), [0.0, 0.0], atol=1e-12)
        np.testing.assert_allclose(lis_unit_circle(1, 1j, -1, 1j), [0.0, 1.0], atol=1e-12)

    def test_unit_circle_formula_agrees(self):
        rng = np.random.default_rng(5)
        for _ in range(50):
            a, b, c, d = np.exp(1j * np.sort(rng.uniform(0, 2 * np.pi, 4)))
            np.testing.assert_allclose(lis_unit_circle(a, c, b, d), lis(a, c, b, d), atol=1e-9)

    def test_unit_circle_rejects_inner_points(self):
        def action():
            lis_unit_circle(0.5, -1, 1j, -1j)

        self.assertRaises(NotOnCircle, action)

    def test_circle_through(self):
        circle = circle_through((0.5, 0), (-0.5, 0), (0, 1))
        np.testing.assert_allclose(circle.center, [0.0, 0.375], atol=1e-12)
        self.assertAlmostEqual(circle.radius, 0.625, places=12)

    def test_circle_through_collinear(self):
        def action():
            circle_through((0, 0), (1, 1), (2, 2))

        self.assertRaises(CollinearPoints, action)


class TestMobius(unittest.TestCase):

    def test_fixed_points(self):
        a = 0.3 + 0.4j
        np.testing.assert_allclose(mobius_T(a, a), [0.0, 0.0], atol=1e-12)
        np.testing.assert_allclose(mobius_T(a, a / abs(a)), [0.6, 0.8], atol=1e-12)
        np.testing.assert_allclose(mobius_T(0.5, 0), [-0.5, 0.0], atol=1e-12)

    def test_parameter_range(self):
        self.assertRaises(OutOfDomain, mobius_T, 1.0, 0.0)
        self.assertRaises(OutOfDomain, mobius_T, 0.0, 0.5)
        self.assertRaises(OutOfDomain, mobius_T, 0.5, 2.0)


class TestDistanceToLine(unittest.TestCase):

    def test_examples(self):
        self.assertAlmostEqual(dist_origin_line((0.5, 0.5), (-0.5, 0.5)), 0.5, places=12)
        self.assertEqual(dist_origin_line((0.2, 0.2), (-0.4, -0.4)), 0.0)
        self.assertAlmostEqual(dist_origin_line((1, 0), (0, 1)), 1.0 / math.sqrt(2.0), places=12)

    def test_higher_dimension(self):
        self.assertAlmostEqual(dist_origin_line((0, 0, 0.5), (1, 0, 0.5)), 0.5, places=12)

    def test_same_point(self):
        self.assertRaises(DegenerateInput, dist_origin_line, (0.1, 0.1), (0.1, 0.1))

    def test_clamped_inverse_functions(self):
        self.assertEqual(arch(1.0 - 1e-16), 0.0)
        self.assertRaises(OutOfDomain, arch, 0.5)
        self.assertRaises(OutOfDomain, arth, 1.0)

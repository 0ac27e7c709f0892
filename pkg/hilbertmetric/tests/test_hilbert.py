# -*- coding: utf-8 -*-

import math
import unittest

import numpy as np
from hypothesis import given, settings

from hilbertmetric.exceptions import DegenerateInput, DomainNotNormalized, NearBoundary, NotOnCircle, OutOfDomain, \
    OutsideDomain
from hilbertmetric.geom_core import circle_through, lis
from hilbertmetric.hilbert import (h_ball, th2_quarter_h, h_chord, h_interval, geodesic_chord_b2, hilbert_midpoint,
                                   tangency_points, tangency_points_visual_angle, chordal_projection,
                                   parallel_projection_points, second_intersection, projected_chord_cross_ratio,
                                   midpoint_configuration, functional_identity_residual,
                                   hilbert_hyperbolic_sandwich, euclidean_lower_bound_margin, quarter_tanh_chain,
                                   monotone_ratio, max_interval_gap, unit_disk_gap_margin)
from hilbertmetric.hyperbolic import rho_ball
from hilbertmetric.tests import LOG3, SQRT3_2, ball3, disk, square, triangle, distinct_disk_pairs


class TestHilbertDistance(unittest.TestCase):

    def test_ball(self):
        self.assertAlmostEqual(h_ball(0, 0.5), LOG3, places=12)
        self.assertAlmostEqual(h_ball((0.5, 0.5), (-0.5, 0.5)), 2.0 * math.acosh(2.0), places=12)
        self.assertAlmostEqual(h_ball((0.5, 0.5), (-0.5, 0.5)), 2.6339, places=4)

    def test_ball_matches_chord(self):
        for a, b in (((0.1, 0.2), (-0.3, 0.5)), ((0.9, 0.0), (0.0, -0.9)), ((0.3, 0.3), (0.3001, 0.3))):
            self.assertAlmostEqual(h_ball(a, b), h_chord(disk, a, b), delta=1e-10 * max(1.0, h_ball(a, b)))

    def test_close_points_keep_accuracy(self):
        a = np.array([0.6, 0.0])
        b = a + np.array([0.0, 1e-9])
        # first order: h ~ |a-b| (1/|a-u| + 1/|a-v|), both chord halves are 0.8
        self.assertAlmostEqual(h_ball(a, b) / 1e-9, 2.5, places=5)

    def test_quarter(self):
        a, b = (0.2, -0.1), (-0.4, 0.6)
        self.assertAlmostEqual(th2_quarter_h(a, b), math.tanh(h_ball(a, b) / 4.0) ** 2, places=12)

    def test_three_dimensions(self):
        self.assertAlmostEqual(h_chord(ball3, (0, 0, 0), (0, 0, 0.5)), LOG3, places=12)
        self.assertAlmostEqual(h_ball((0.1, 0.2, 0.3), (-0.2, 0.1, 0.4)),
                               h_chord(ball3, (0.1, 0.2, 0.3), (-0.2, 0.1, 0.4)), places=10)

    def test_polygon(self):
        self.assertAlmostEqual(h_chord(square, (0, 0), (0.5, 0)), LOG3, places=12)
        self.assertEqual(h_chord(square, (0.1, 0.1), (0.1, 0.1)), 0.0)

    def test_outside(self):
        self.assertRaises(OutsideDomain, h_chord, square, (0, 0), (1.5, 0))
        self.assertRaises(NearBoundary, h_chord, disk, (0, 0), (1 - 1e-12, 0))

    def test_interval(self):
        self.assertAlmostEqual(h_interval(0, 0.5), LOG3, places=12)
        self.assertAlmostEqual(h_interval(0.5, 0), LOG3, places=12)
        self.assertRaises(OutOfDomain, h_interval, 0, 1)

    @settings(max_examples=200, deadline=None)
    @given(distinct_disk_pairs(), distinct_disk_pairs())
    def test_triangle_inequality(self, first, second):
        a, b = first
        c = second[0]
        self.assertLessEqual(h_ball(a, b), h_ball(a, c) + h_ball(c, b) + 1e-9)


class TestGeodesics(unittest.TestCase):

    def test_chord(self):
        u, v, c = geodesic_chord_b2((0.5, 0.5), (-0.5, 0.5))
        np.testing.assert_allclose(c, [0.0, 0.5], atol=1e-12)
        np.testing.assert_allclose(u, [SQRT3_2, 0.5], atol=1e-12)
        np.testing.assert_allclose(v, [-SQRT3_2, 0.5], atol=1e-12)

    def test_chord_through_origin(self):
        u, v, c = geodesic_chord_b2((-0.2, 0), (0.4, 0))
        np.testing.assert_allclose(c, [0.0, 0.0], atol=1e-12)
        np.testing.assert_allclose(u, [-1.0, 0.0], atol=1e-12)

    def test_chord_same_point(self):
        self.assertRaises(DegenerateInput, geodesic_chord_b2, (0.2, 0.2), (0.2, 0.2))

    def test_midpoint(self):
        np.testing.assert_allclose(hilbert_midpoint(disk, 0, 0.8), [0.5, 0.0], atol=1e-12)
        np.testing.assert_allclose(hilbert_midpoint(disk, (-0.3, 0.2), (0.3, -0.2)), [0.0, 0.0], atol=1e-12)

    def test_midpoint_in_polygon(self):
        a, b = (-0.4, 0.1), (0.5, 0.3)
        p = hilbert_midpoint(triangle, a, b)
        self.assertAlmostEqual(h_chord(triangle, a, p), h_chord(triangle, p, b), places=10)


class TestTangency(unittest.TestCase):

    def test_symmetric_pair(self):
        w1, w2 = tangency_points(0.5, -0.5)
        np.testing.assert_allclose(w1, [0.0, 1.0], atol=1e-12)
        np.testing.assert_allclose(w2, [0.0, -1.0], atol=1e-12)

    def test_tangent_circle(self):
        w1, _ = tangency_points(0.5, -0.5)
        circle = circle_through(0.5, -0.5, w1)
        np.testing.assert_allclose(circle.center, [0.0, 0.375], atol=1e-12)
        self.assertAlmostEqual(circle.radius, 0.625, places=12)
        self.assertAlmostEqual(float(np.linalg.norm(circle.center)) + circle.radius, 1.0, places=12)

    def test_visual_angle_agrees(self):
        a, b = (0.3, 0.1), (-0.2, 0.5)
        expected = sorted(tuple(np.round(w, 9)) for w in tangency_points(a, b))
        found = sorted(tuple(np.round(w, 9)) for w in tangency_points_visual_angle(a, b))
        np.testing.assert_allclose(found, expected, atol=1e-8)

    def test_visual_angle_equal_modulus(self):
        self.assertRaises(DegenerateInput, tangency_points_visual_angle, 0.5, -0.5)


class TestProjections(unittest.TestCase):

    def test_chordal_projection(self):
        np.testing.assert_allclose(chordal_projection(-1, 1, 1j, -1j), [0.0, 0.0], atol=1e-12)

    def test_chordal_projection_fixes_endpoints(self):
        u, v, w = np.exp(1j * np.array([0.3, 2.5, 4.0]))
        np.testing.assert_allclose(chordal_projection(u, v, w, u), [u.real, u.imag], atol=1e-12)
        np.testing.assert_allclose(chordal_projection(u, v, w, v), [v.real, v.imag], atol=1e-12)

    def test_chordal_projection_is_lis(self):
        u, v, w, z = np.exp(1j * np.array([0.3, 2.5, 4.0, 5.5]))
        np.testing.assert_allclose(chordal_projection(u, v, w, z), lis(u, v, z, w), atol=1e-10)

    def test_chordal_projection_off_circle(self):
        self.assertRaises(NotOnCircle, chordal_projection, -1, 1, 0.5j, -1j)

    def test_second_intersection(self):
        z = np.exp(0.9j)
        np.testing.assert_allclose(second_intersection(0, z), [-z.real, -z.imag], atol=1e-12)
        p = 0.3 - 0.2j
        w = complex(*second_intersection(p, z))
        self.assertAlmostEqual(abs(w), 1.0, places=12)
        # p lies on the chord [z, w]
        self.assertAlmostEqual(((w - z).conjugate() * (p - z)).imag, 0.0, places=12)

    def test_projected_chord(self):
        a, u, b, c, d = np.exp(1j * np.array([0.2, 0.9, 1.6, 3.0, 4.5]))
        exp_h = math.exp(h_ball(lis(a, b, u, d), lis(a, b, u, c)))
        self.assertAlmostEqual(projected_chord_cross_ratio(a, b, c, d), exp_h, delta=1e-9 * exp_h)

    def test_projected_chord_any_projection_center(self):
        a, b, c, d = np.exp(1j * np.array([0.2, 1.6, 3.0, 4.5]))
        values = [math.exp(h_ball(lis(a, b, u, d), lis(a, b, u, c))) for u in np.exp(1j * np.linspace(0.3, 1.5, 7))]
        self.assertLess(float(np.std(values) / np.mean(values)), 1e-9)

    def test_parallel_projection(self):
        # uv = cd makes [u, v] and [c, d] parallel
        u, v = np.exp(0.4j), np.exp(2.0j)
        c, d = np.exp(3.4j), np.exp(1j * (2.4 + 2.0 * np.pi - 3.4))
        self.assertAlmostEqual(abs(u * v - c * d), 0.0, places=12)
        w = np.exp(4.4j)
        pa, pb = parallel_projection_points(u, v, c, d, w)
        np.testing.assert_allclose(pa, lis(u, v, c, w), atol=1e-10)
        np.testing.assert_allclose(pb, lis(u, v, d, w), atol=1e-10)

    def test_parallel_projection_rejects_skew_chords(self):
        u, v, c, d, w = np.exp(1j * np.array([0.4, 2.0, 3.5, 5.2, 4.4]))
        self.assertRaises(DegenerateInput, parallel_projection_points, u, v, c, d, w)


class TestMidpointConfiguration(unittest.TestCase):

    @settings(max_examples=100, deadline=None)
    @given(distinct_disk_pairs(radius=0.9, gap=1e-2))
    def test_construction(self, pair):
        a, b = pair
        for which in (0, 1):
            conf = midpoint_configuration(a, b, which)
            self.assertLess(conf.parallel_residual, 1e-8)
            self.assertAlmostEqual(h_ball(a, conf.p), h_ball(conf.p, b), delta=1e-8)
            np.testing.assert_allclose(conf.p, hilbert_midpoint(disk, a, b), atol=1e-8)


class TestInequalities(unittest.TestCase):

    @settings(max_examples=300, deadline=None)
    @given(distinct_disk_pairs(radius=0.99))
    def test_functional_identity(self, pair):
        self.assertLess(functional_identity_residual(*pair), 1e-9 * max(1.0, math.sinh(rho_ball(*pair) / 2.0)))

    @settings(max_examples=300, deadline=None)
    @given(distinct_disk_pairs(radius=0.99))
    def test_sandwich(self, pair):
        lower, upper = hilbert_hyperbolic_sandwich(*pair)
        self.assertGreaterEqual(lower, -1e-12)
        self.assertGreaterEqual(upper, -1e-9)

    def test_sandwich_through_origin(self):
        lower, _ = hilbert_hyperbolic_sandwich((-0.3, -0.3), (0.5, 0.5))
        self.assertAlmostEqual(lower, 0.0, places=12)

    @settings(max_examples=300, deadline=None)
    @given(distinct_disk_pairs(radius=0.99))
    def test_lower_bounds(self, pair):
        first, second = quarter_tanh_chain(*pair)
        self.assertGreaterEqual(first, -1e-12)
        self.assertGreaterEqual(second, -1e-12)

    def test_lower_bounds_tight_at_antipodes(self):
        first, second = quarter_tanh_chain((0.3, 0.4), (-0.3, -0.4))
        self.assertAlmostEqual(first, 0.0, places=12)
        self.assertAlmostEqual(second, 0.0, places=12)
        self.assertAlmostEqual(euclidean_lower_bound_margin((0.3, 0.4), (-0.3, -0.4)), 0.0, places=12)

    def test_monotone_ratio(self):
        values = [monotone_ratio(2.0, t) for t in np.linspace(0.01, 20.0, 200)]
        self.assertTrue(all(x >= y for x, y in zip(values, values[1:])))
        self.assertAlmostEqual(values[0], 1.0, places=3)
        self.assertGreater(values[-1], 0.5)
        self.assertRaises(OutOfDomain, monotone_ratio, 0.0, 1.0)

    def test_interval_gap(self):
        self.assertAlmostEqual(max_interval_gap(h_interval(-0.3, 0.3)), 0.6, places=12)
        self.assertGreaterEqual(max_interval_gap(h_interval(0.1, 0.7)), 0.6)
        self.assertRaises(OutOfDomain, max_interval_gap, -1.0)

    def test_unit_disk_gap(self):
        self.assertGreaterEqual(unit_disk_gap_margin(triangle, (-0.2, 0.1), (0.3, -0.2)), -1e-12)
        self.assertAlmostEqual(unit_disk_gap_margin(disk, (0.4, 0), (-0.4, 0)), 0.0, places=12)

    def test_unit_disk_gap_needs_normalized_domain(self):
        def action():
            unit_disk_gap_margin(square, (0, 0), (0.5, 0))

        self.assertRaises(DomainNotNormalized, action)

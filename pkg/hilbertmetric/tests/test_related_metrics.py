# -*- coding: utf-8 -*-

import math
import unittest

import numpy as np

from hilbertmetric.exceptions import OutsideDomain
from hilbertmetric.hilbert import h_chord
from hilbertmetric.hyperbolic import rho_ball
from hilbertmetric.related_metrics import (apollonian, apollonian_grid, h_le_alpha_margin, mobius_supremum,
                                           mobius_delta, density_margins_disk)
from hilbertmetric.sampling import domain_pairs, rng_for
from hilbertmetric.tests import LOG3, disk, square, triangle


class TestApollonian(unittest.TestCase):

    def test_disk_is_hyperbolic(self):
        self.assertAlmostEqual(apollonian(disk, 0, 0.5), LOG3, places=12)
        self.assertAlmostEqual(apollonian(disk, (0.3, 0.1), (-0.2, 0.5)), rho_ball((0.3, 0.1), (-0.2, 0.5)), places=12)

    def test_same_point(self):
        self.assertEqual(apollonian(square, (0.2, 0.1), (0.2, 0.1)), 0.0)

    def test_exact_agrees_with_grid(self):
        for D in (square, triangle):
            left, right = domain_pairs(rng_for('apollonian-test', 1), D, 20, 0.05)
            for a, b in zip(left, right):
                exact, grid = apollonian(D, a, b), apollonian_grid(D, a, b, 20000)
                self.assertGreaterEqual(exact, grid - 1e-12)
                self.assertAlmostEqual(exact, grid, delta=1e-4)

    def test_dominates_hilbert(self):
        for D in (square, triangle):
            left, right = domain_pairs(rng_for('apollonian-test', 2), D, 200, 1e-3)
            for a, b in zip(left, right):
                self.assertGreaterEqual(h_le_alpha_margin(D, a, b), -1e-12)

    def test_outside(self):
        self.assertRaises(OutsideDomain, apollonian, square, (0, 0), (0, 2))


class TestMobius(unittest.TestCase):

    def test_disk_is_hyperbolic(self):
        self.assertAlmostEqual(mobius_delta(disk, 0, 0.5), LOG3, places=12)

    def test_certificate(self):
        a, b = (0.1, 0.2), (-0.3, -0.1)
        certificate = mobius_supremum(square, a, b, budget=4096)
        self.assertGreater(certificate.evaluations, 0)
        self.assertLessEqual(certificate.grid, 64)
        ab = math.hypot(0.4, 0.3)
        u, v = certificate.u, certificate.v
        ratio = np.linalg.norm(u - v) * ab / (np.linalg.norm(u - a) * np.linalg.norm(v - b))
        self.assertAlmostEqual(ratio, certificate.ratio, places=9)
        self.assertAlmostEqual(certificate.value, math.log1p(certificate.ratio), places=12)

    def test_budget_sets_grid(self):
        a, b = (0.1, 0.2), (-0.3, -0.1)
        self.assertEqual(mobius_supremum(square, a, b, budget=10000).grid, 64)
        self.assertEqual(mobius_supremum(square, a, b, budget=65536).grid, 256)
        self.assertEqual(mobius_supremum(square, a, b, budget=10).grid, 8)

    def test_budget_monotone(self):
        a, b = (0.3, -0.2), (-0.1, 0.4)
        values = [mobius_delta(triangle, a, b, budget) for budget in (64, 256, 1024, 4096)]
        self.assertTrue(all(x <= y for x, y in zip(values, values[1:])))

    def test_between_bounds(self):
        a, b = (0.1, 0.2), (-0.3, -0.1)
        alpha = apollonian(square, a, b)
        delta = mobius_delta(square, a, b)
        self.assertLessEqual(h_chord(square, a, b), alpha + 1e-12)
        self.assertGreaterEqual(delta, alpha - 1e-4)
        self.assertLessEqual(delta, math.log(math.exp(alpha) + 2.0) + 1e-12)

    def test_same_point(self):
        self.assertEqual(mobius_delta(square, (0.2, 0.1), (0.2, 0.1)), 0.0)


class TestDensityMargins(unittest.TestCase):

    def test_example(self):
        report = density_margins_disk(0, 0.5)
        self.assertTrue(report.ok)
        self.assertAlmostEqual(report.margins['alpha/2 <= rho'], LOG3 / 2.0, places=12)
        self.assertAlmostEqual(report.margins['rho <= 4 sh(alpha/2)'], 4.0 / math.sqrt(3.0) - LOG3, places=12)

    def test_random_pairs(self):
        left, right = domain_pairs(rng_for('density-test', 3), disk, 100, 1e-3)
        for a, b in zip(left, right):
            self.assertTrue(density_margins_disk(a, b).ok)

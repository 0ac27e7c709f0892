# -*- coding: utf-8 -*-

import math
import unittest

import numpy as np
import scipy.special

from hilbertmetric.exceptions import OutOfDomain
from hilbertmetric.special_functions import (agm, ell_K, ell_K_quadrature, mu, mu_inv, gamma2, gamma2_inv, phi_K,
                                             phi_K_via_gamma, c_of_K, c_bounds, U_CONSTANT, V_CONSTANT)

SQRT_HALF = 1.0 / math.sqrt(2.0)


class TestEllipticIntegrals(unittest.TestCase):

    def test_agm(self):
        self.assertEqual(agm(1.0, 1.0), 1.0)
        self.assertAlmostEqual(agm(1.0, 0.3), agm(0.3, 1.0), places=15)
        self.assertRaises(OutOfDomain, agm, 0.0, 1.0)

    def test_ell_K(self):
        self.assertAlmostEqual(ell_K(0.0), math.pi / 2.0, places=15)
        self.assertAlmostEqual(ell_K(SQRT_HALF), ell_K(math.sqrt(1.0 - 0.5)), places=15)
        for r in np.linspace(0.0, 0.99, 25):
            self.assertAlmostEqual(ell_K(r), ell_K_quadrature(r), places=12)
        self.assertRaises(OutOfDomain, ell_K, 1.0)

    def test_ell_K_near_one(self):
        for r in (0.999, 0.999999, 1.0 - 1e-12):
            self.assertAlmostEqual(ell_K(r) / scipy.special.ellipkm1((1.0 - r) * (1.0 + r)), 1.0, places=10)


class TestModulus(unittest.TestCase):

    def test_self_complementary(self):
        self.assertAlmostEqual(mu(SQRT_HALF), math.pi / 2.0, places=14)
        self.assertAlmostEqual(mu_inv(math.pi / 2.0), SQRT_HALF, places=14)

    def test_decreasing(self):
        values = [mu(r) for r in np.linspace(0.01, 0.99, 50)]
        self.assertTrue(all(x > y for x, y in zip(values, values[1:])))

    def test_complement_product(self):
        for r in (0.1, 0.4, 0.9):
            self.assertAlmostEqual(mu(r) * mu(math.sqrt(1.0 - r * r)), math.pi ** 2 / 4.0, places=12)

    def test_inverse(self):
        for r in (1e-6, 0.05, 0.3, SQRT_HALF, 0.8, 0.999):
            self.assertAlmostEqual(mu_inv(mu(r)) / r, 1.0, places=10)

    def test_inverse_large_argument(self):
        r = mu_inv(20.0)
        self.assertGreater(r, 0.0)
        self.assertAlmostEqual(mu(r), 20.0, places=9)
        self.assertAlmostEqual(mu_inv(50.0), 4.0 * math.exp(-50.0), delta=1e-30)

    def test_inverse_domain(self):
        self.assertRaises(OutOfDomain, mu_inv, 0.0)
        self.assertRaises(OutOfDomain, mu, 1.0)

    def test_capacity(self):
        self.assertAlmostEqual(gamma2(math.sqrt(2.0)), 4.0, places=12)
        self.assertAlmostEqual(gamma2_inv(4.0), math.sqrt(2.0), places=12)
        self.assertAlmostEqual(gamma2_inv(gamma2(3.0)), 3.0, places=9)
        self.assertRaises(OutOfDomain, gamma2, 1.0)


class TestDistortion(unittest.TestCase):

    def test_phi_identity(self):
        for r in (0.0, 0.2, 0.5, 0.9, 1.0):
            self.assertAlmostEqual(phi_K(1.0, r), r, places=12)

    def test_phi_forms_agree(self):
        for K in (1.5, 2.0, 4.0):
            for r in (0.1, 0.5, 0.9):
                self.assertAlmostEqual(phi_K(K, r), phi_K_via_gamma(K, r), places=10)

    def test_phi_semigroup(self):
        for r in (0.1, 0.5, 0.9):
            self.assertAlmostEqual(phi_K(2.0, phi_K(0.5, r)), r, places=10)
            self.assertGreater(phi_K(2.0, r), r)

    def test_c(self):
        self.assertAlmostEqual(c_of_K(1.0), 1.0, places=12)
        c2 = c_of_K(2.0)
        self.assertGreaterEqual(c2, 2.6230)
        self.assertLessEqual(c2, 3.3507)
        values = [c_of_K(K) for K in np.linspace(1.0, 4.0, 31)]
        self.assertTrue(all(x < y for x, y in zip(values, values[1:])))
        self.assertRaises(OutOfDomain, c_of_K, 0.5)

    def test_bounds_chain(self):
        for K in (1.0, 1.5, 2.0, 3.0, 4.0):
            for margin in c_bounds(K).margins():
                self.assertGreaterEqual(margin, -1e-12)

    def test_constants(self):
        self.assertGreater(U_CONSTANT, 1.5412)
        self.assertLess(V_CONSTANT, 1.3507)

"""Unit tests for ridgekit.spaces.domains and ridgekit.spaces.norms."""

import math

import numpy as np
from scipy import stats

from ridgekit.network.network import Network
from ridgekit.spaces.domains import Domain, WeightSpec
from ridgekit.spaces.errors import (DivergentWeight, InvalidDomain,
                                    InvalidWeight, MissingDerivatives)
from ridgekit.spaces.norms import (grid_points, product_weight_bound,
                                   weight_constant, weighted_ck_norm,
                                   weighted_sobolev_norm)
from ridgekit.spaces.targets import GaussianTarget
from ridgekit.testing import TestCase


class DomainTests(TestCase):
    """Unit tests for ridgekit.spaces.domains.Domain."""

    def test_invalid_bounds(self):
        """Testing Domain with empty, reversed and infinite bounds"""
        for bounds in ([], [(1.0, 0.0)], [(0.0, math.inf)]):
            with self.assertRaises(InvalidDomain):
                Domain.box(bounds)

        with self.assertRaises(InvalidDomain):
            Domain('ball', [(0.0, 1.0)])

    def test_widened(self):
        """Testing Domain.widened"""
        box = Domain.box([(0.0, 1.0)])
        full = Domain.full_space(2, radius=4.0)

        self.assertIs(box.widened(), box)
        self.assertEqual(full.widened().radius, 8.0)
        self.assertEqual(full.widened().bounds, [(-8.0, 8.0)] * 2)


class WeightSpecTests(TestCase):
    """Unit tests for ridgekit.spaces.domains.WeightSpec."""

    def test_invalid(self):
        """Testing WeightSpec with invalid parameters"""
        with self.assertRaisesMessage(InvalidWeight, 'Unknown weight "beta"'):
            WeightSpec('beta')

        with self.assertRaises(InvalidWeight):
            WeightSpec(gamma=-1.0)

        with self.assertRaises(InvalidWeight):
            WeightSpec(p=0.5)

        with self.assertRaises(InvalidWeight):
            WeightSpec('uniform', lo=1.0, hi=1.0)

    def test_product(self):
        """Testing WeightSpec evaluates a product of densities"""
        w = WeightSpec('laplace')
        points = np.array([[0.5, -1.0], [0.0, 0.0]])

        self.assertAllClose(
            w(points),
            stats.laplace.pdf(points[:, 0]) * stats.laplace.pdf(points[:, 1]))

    def test_line_constant(self):
        """Testing WeightSpec.line_constant against closed forms"""
        self.assertAlmostEqual(WeightSpec(gamma=0.0, p=2.0).line_constant(),
                               1.0, places=10)
        self.assertAlmostEqual(WeightSpec(gamma=1.0, p=1.0).line_constant(),
                               1.0 + math.sqrt(2.0 / math.pi), places=9)
        self.assertAlmostEqual(
            WeightSpec('laplace', gamma=1.0, p=1.0).line_constant(), 2.0,
            places=9)
        self.assertAlmostEqual(
            WeightSpec('uniform', gamma=1.0, p=1.0).line_constant(), 1.5,
            places=10)

    def test_cauchy_divergent(self):
        """Testing WeightSpec.line_constant with a Cauchy weight and
        growth
        """
        with self.assertRaises(DivergentWeight):
            WeightSpec('cauchy', gamma=1.0, p=2.0).line_constant()

        self.assertAlmostEqual(WeightSpec('cauchy').line_constant(), 1.0,
                               places=5)


class WeightConstantTests(TestCase):
    """Unit tests for ridgekit.spaces.norms.weight_constant."""

    def test_box(self):
        """Testing weight_constant on a box"""
        w = WeightSpec(gamma=0.0, p=2.0)
        U = Domain.box([(0.0, 1.0)])

        self.assertAlmostEqual(weight_constant(U, w),
                               math.sqrt(stats.norm.cdf(1.0) - 0.5),
                               places=9)

    def test_full_space_one_dimension(self):
        """Testing weight_constant on the real line"""
        w = WeightSpec(gamma=1.0, p=2.0)

        self.assertEqual(weight_constant(Domain.full_space(1), w),
                         w.line_constant())

    def test_full_space_gaussian(self):
        """Testing weight_constant on R^2 with a Gaussian weight"""
        self.assertAlmostEqual(
            weight_constant(Domain.full_space(2), WeightSpec()), 1.0,
            places=9)

    def test_product_bound(self):
        """Testing weight_constant stays below the product bound"""
        for name in ('gaussian', 'laplace'):
            for m in (1, 2, 3):
                for gamma in (0.0, 1.0):
                    w = WeightSpec(name, gamma=gamma, p=2.0)

                    self.assertLessEqual(
                        weight_constant(Domain.full_space(m), w),
                        product_weight_bound(w, m) * (1.0 + 1e-9),
                        '%s, m=%d, gamma=%g' % (name, m, gamma))

    def test_divergent(self):
        """Testing weight_constant with a Cauchy weight on R^2"""
        w = WeightSpec('cauchy', gamma=1.0, p=1.0)

        with self.assertRaises(DivergentWeight):
            weight_constant(Domain.full_space(2), w)


class WeightedNormTests(TestCase):
    """Unit tests for the weighted Sobolev and C^k norms."""

    def test_sobolev_order_zero(self):
        """Testing weighted_sobolev_norm of a Gaussian for k = 0"""
        norm = weighted_sobolev_norm(GaussianTarget(1),
                                     Domain.full_space(1), WeightSpec(), 0)

        # ∫ exp(-u²) φ(u) du = 1/√3
        self.assertAlmostEqual(norm, 3.0 ** -0.25, places=9)

    def test_sobolev_order_one(self):
        """Testing weighted_sobolev_norm of a Gaussian for k = 1"""
        norm = weighted_sobolev_norm(GaussianTarget(1),
                                     Domain.full_space(1), WeightSpec(), 1)
        derivative = 1.0 / (2.0 * math.sqrt(2.0) * 1.5 ** 1.5)

        self.assertAlmostEqual(norm, math.sqrt(1.0 / math.sqrt(3.0) +
                                               derivative), places=9)

    def test_sobolev_exponent(self):
        """Testing weighted_sobolev_norm with p = 1"""
        w = WeightSpec('uniform', lo=-1.0, hi=1.0, p=1.0)
        norm = weighted_sobolev_norm(GaussianTarget(1), Domain.box([(-1, 1)]),
                                     w, 0)
        expected = math.sqrt(2.0 * math.pi) * (stats.norm.cdf(1.0) - 0.5)

        self.assertAlmostEqual(norm, expected, places=10)

    def test_sobolev_dimension_mismatch(self):
        """Testing weighted_sobolev_norm with a domain of the wrong
        dimension
        """
        with self.assertRaises(InvalidDomain):
            weighted_sobolev_norm(GaussianTarget(2), Domain.full_space(1),
                                  WeightSpec(), 0)

    def test_ck_norm(self):
        """Testing weighted_ck_norm of a Gaussian"""
        U = Domain.box([(-3.0, 3.0)])

        self.assertEqual(weighted_ck_norm(GaussianTarget(1), U, 0.0, 0), 1.0)
        self.assertAlmostEqual(
            weighted_ck_norm(GaussianTarget(1, amplitude=0.2), U, 0.0, 1),
            0.2, places=14)

    def test_missing_derivatives(self):
        """Testing the weighted norms of a ReLU network for k = 1"""
        net = Network('relu', [[1.0]], [[1.0]], [0.0])
        U = Domain.box([(-1.0, 1.0)])

        with self.assertRaises(MissingDerivatives):
            weighted_sobolev_norm(net, U, WeightSpec(), 1)

        with self.assertRaises(MissingDerivatives):
            weighted_ck_norm(net, U, 0.0, 1)

        self.assertAlmostEqual(weighted_ck_norm(net, U, 0.0, 0), 1.0,
                               places=14)

    def test_grid_points(self):
        """Testing grid_points uses an odd count that contains the center"""
        grid = grid_points(Domain.box([(-1.0, 1.0), (-1.0, 1.0)]), points=4)

        self.assertEqual(grid.shape, (25, 2))
        self.assertIn([0.0, 0.0], grid.tolist())

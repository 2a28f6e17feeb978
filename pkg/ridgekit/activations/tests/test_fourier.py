"""Unit tests for ridgekit.activations.fourier."""

import numpy as np

from ridgekit.activations.errors import InvalidInput, InvalidTestFunction
from ridgekit.activations.fourier import (BumpTestFunction,
                                          PairingQuadrature,
                                          bump_family,
                                          default_test_functions,
                                          pairing_check, pairing_sides,
                                          zero_test_function)
from ridgekit.testing import TestCase
from ridgekit.utils.quadrature import quad_complex


class BumpTestFunctionTests(TestCase):
    """Unit tests for ridgekit.activations.fourier.BumpTestFunction."""

    def test_support(self):
        """Testing BumpTestFunction vanishes outside its support"""
        bump = BumpTestFunction(1.0, 2.0)
        values = bump(np.array([0.5, 1.0, 1.5, 2.0, 2.5]))

        self.assertEqual(values[0], 0.0)
        self.assertEqual(values[1], 0.0)
        self.assertAlmostEqual(values[2], np.exp(-4.0), places=15)
        self.assertEqual(values[3], 0.0)
        self.assertEqual(values[4], 0.0)

    def test_support_touching_origin(self):
        """Testing BumpTestFunction with a support containing the origin"""
        with self.assertRaisesMessage(
                InvalidTestFunction,
                'Test function support [-1, 1] touches the origin'):
            BumpTestFunction(-1.0, 1.0)

        with self.assertRaises(InvalidTestFunction):
            BumpTestFunction(0.0, 1.0)

    def test_empty_support(self):
        """Testing BumpTestFunction with an empty support"""
        with self.assertRaises(InvalidTestFunction):
            BumpTestFunction(2.0, 1.0)

    def test_premultiplied(self):
        """Testing BumpTestFunction.premultiplied"""
        bump = BumpTestFunction(1.0, 2.0, degree=1, center=1.2)
        xi = np.linspace(1.1, 1.9, 5)

        self.assertAllClose(bump.premultiplied()(xi), xi * bump(xi))
        self.assertIs(bump.premultiplied(), bump.premultiplied())

        with self.assertRaises(InvalidInput):
            bump.premultiplied().premultiplied()

    def test_fourier_transform(self):
        """Testing BumpTestFunction.fourier_on against direct quadrature"""
        bump = BumpTestFunction(1.0, 2.0)
        quad = PairingQuadrature(frequency_cutoff=4.0)
        nodes, weights, transform = bump.fourier_on(quad)

        for index in (0, 7, len(nodes) - 1):
            s = nodes[index]
            expected, _ = quad_complex(
                lambda x: bump(x) * np.exp(-1j * s * x), 1.0, 2.0,
                epsabs=1e-13, epsrel=1e-12)

            self.assertAlmostEqual(transform[index], expected, places=10)

        self.assertAlmostEqual(np.sum(weights), 4.0, places=12)
        self.assertIs(bump.fourier_on(quad)[2], transform)

    def test_bump_family(self):
        """Testing bump_family"""
        family = bump_family(1.0, 2.0)

        self.assertEqual(len(family), 3)
        self.assertEqual([fn.support for fn in family],
                         [(1.0, 2.0)] * 3)
        self.assertEqual(family[0].label, BumpTestFunction(1.0, 2.0).label)
        self.assertNotEqual(family[1].label, family[2].label)

        with self.assertRaises(InvalidTestFunction):
            bump_family(-1.0, 1.0)


class PairingCheckTests(TestCase):
    """Unit tests for ridgekit.activations.fourier.pairing_check."""

    @classmethod
    def setUpClass(cls):
        super(PairingCheckTests, cls).setUpClass()

        # Shared so the transforms are computed once for all activations.
        cls.test_functions = default_test_functions()

    def _check_all(self, name):
        for test_fn in self.test_functions:
            lhs, rhs = pairing_sides(name, test_fn)
            residual = pairing_check(name, test_fn)

            self.assertGreater(abs(rhs), 1e-8, test_fn.label)
            self.assertLessEqual(residual, 1e-6,
                                 '%s on %s: %r vs %r'
                                 % (name, test_fn.label, lhs, rhs))

    def test_sigmoid(self):
        """Testing pairing_check with sigmoid"""
        self._check_all('sigmoid')

    def test_tanh(self):
        """Testing pairing_check with tanh"""
        self._check_all('tanh')

    def test_softplus(self):
        """Testing pairing_check with softplus"""
        self._check_all('softplus')

    def test_relu(self):
        """Testing pairing_check with relu"""
        self._check_all('relu')

    def test_wrong_tanh_sign_is_detected(self):
        """Testing pairing_check distinguishes the sign of the tanh density
        """
        lhs, rhs = pairing_sides('tanh', self.test_functions[0])

        self.assertLess(abs(lhs - rhs), 1e-6)
        self.assertGreater(abs(lhs + rhs), 1e-3)

    def test_zero_function(self):
        """Testing pairing_check with the zero test function"""
        zero = zero_test_function()

        for name in ('sigmoid', 'tanh', 'softplus', 'relu'):
            self.assertEqual(pairing_check(name, zero), 0.0)

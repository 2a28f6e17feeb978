"""Unit tests for ridgekit.network.network."""

import numpy as np

from ridgekit.activations.errors import UnsupportedDerivative
from ridgekit.errors import InvalidInput
from ridgekit.network.network import (Network, concatenate, network_eval,
                                      network_partial)
from ridgekit.spaces.targets import GaussianTarget
from ridgekit.testing import TestCase


def _random_network(activation, m, d=1, size=32, seed=0):
    rng = np.random.default_rng(seed)

    return Network(activation,
                   rng.normal(size=(size, d)),
                   rng.normal(size=(size, m)),
                   rng.normal(size=size))


class NetworkTests(TestCase):
    """Unit tests for ridgekit.network.network.Network."""

    def test_single_neuron_values(self):
        """Testing network_eval with one neuron at a = 0, b = 0"""
        sigmoid = Network('sigmoid', [[1.0]], [[0.0, 0.0]], [0.0])
        tanh = Network('tanh', [[1.0]], [[0.0, 0.0]], [0.0])

        for u in ([0.0, 0.0], [3.0, -7.0]):
            self.assertEqual(network_eval(sigmoid, u)[0], 0.5)
            self.assertEqual(network_eval(tanh, u)[0], 0.0)

    def test_shapes(self):
        """Testing Network evaluation shapes"""
        net = _random_network('tanh', m=2, d=3, size=5)

        self.assertEqual(net.m, 2)
        self.assertEqual(net.d, 3)
        self.assertEqual(net.size, 5)
        self.assertEqual(net.eval([0.5, 0.5]).shape, (3,))
        self.assertEqual(net.eval(np.zeros((7, 2))).shape, (7, 3))

    def test_dimension_mismatch(self):
        """Testing network_eval with a point of the wrong dimension"""
        net = _random_network('tanh', m=2)

        with self.assertRaises(InvalidInput):
            network_eval(net, [1.0, 2.0, 3.0])

    def test_invalid_parameters(self):
        """Testing Network with inconsistent or non-finite parameters"""
        with self.assertRaises(InvalidInput):
            Network('tanh', [[1.0], [2.0]], [[0.0]], [0.0])

        with self.assertRaises(InvalidInput):
            Network('tanh', [[np.nan]], [[0.0]], [0.0])

        with self.assertRaises(InvalidInput):
            Network('tanh', np.zeros((0, 1)), np.zeros((0, 1)), [])

        with self.assertRaises(InvalidInput):
            Network('swish', [[1.0]], [[0.0]], [0.0])

    def test_concatenation_is_additive(self):
        """Testing that concatenated networks evaluate to the sum"""
        first = _random_network('softplus', m=2, size=4, seed=1)
        second = _random_network('softplus', m=2, size=6, seed=2)
        points = np.random.default_rng(3).uniform(-2.0, 2.0, size=(20, 2))

        joined = concatenate([first, second])

        self.assertEqual(joined.size, 10)
        self.assertAllClose(joined.eval(points),
                            first.eval(points) + second.eval(points),
                            rtol=1e-13, atol=1e-13)
        self.assertEqual(first + second, joined)

    def test_concatenation_mismatch(self):
        """Testing concatenate with different activations"""
        with self.assertRaises(InvalidInput):
            concatenate([_random_network('tanh', m=1),
                         _random_network('sigmoid', m=1)])

    def test_linear_in_readouts(self):
        """Testing that evaluation is linear in the readouts"""
        net = _random_network('sigmoid', m=1, size=8)
        u = np.linspace(-3.0, 3.0, 13)

        self.assertAllClose(net.scaled(2.5).eval(u), 2.5 * net.eval(u),
                            rtol=1e-14)
        self.assertAllClose((-net).eval(u), -net.eval(u), rtol=1e-14)

    def test_partial_order_zero(self):
        """Testing network_partial with alpha = 0"""
        net = _random_network('tanh', m=2)
        points = np.random.default_rng(4).normal(size=(10, 2))

        self.assertAllClose(network_partial(net, (0, 0), points),
                            network_eval(net, points), rtol=0.0, atol=0.0)

    def test_partials_match_finite_differences(self):
        """Testing network_partial against central differences"""
        h = 1e-5
        points = np.random.default_rng(5).uniform(-2.0, 2.0, size=(10, 2))

        for name in ('tanh', 'sigmoid', 'softplus'):
            net = _random_network(name, m=2, size=32, seed=6)

            for alpha in [(1, 0), (0, 1), (2, 0), (1, 1), (0, 2)]:
                axis = 0 if alpha[0] else 1
                lower = list(alpha)
                lower[axis] -= 1
                step = np.zeros(2)
                step[axis] = h

                exact = network_partial(net, alpha, points)
                approx = (network_partial(net, lower, points + step) -
                          network_partial(net, lower, points - step)) / (
                              2.0 * h)
                defect = np.abs(exact - approx) / (1.0 + np.abs(exact))

                self.assertLessEqual(np.max(defect), 1e-6,
                                     '%s alpha=%r' % (name, alpha))

    def test_relu_partials(self):
        """Testing network_partial with relu and alpha = (1)"""
        net = _random_network('relu', m=1)

        with self.assertRaises(UnsupportedDerivative):
            network_partial(net, (1,), 0.5)

    def test_difference_with_target(self):
        """Testing a target minus a network"""
        net = _random_network('tanh', m=1, size=4)
        target = GaussianTarget(1)
        u = np.linspace(-1.0, 1.0, 5)

        error = target - net

        self.assertAllClose(error.eval(u), target.eval(u) - net.eval(u),
                            rtol=1e-14, atol=1e-15)
        self.assertEqual(error.max_fourier_order, -1)

    def test_equality(self):
        """Testing Network equality"""
        net = _random_network('tanh', m=1, size=3)

        self.assertEqual(net, Network('tanh', net.readouts, net.directions,
                                      net.biases))
        self.assertNotEqual(net, net.scaled(2.0))

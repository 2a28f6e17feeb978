"""Unit tests for ridgekit.sampler.neurons."""

import numpy as np

from ridgekit.errors import InvalidInput
from ridgekit.network.codec import dumps
from ridgekit.ridgelet.admissibility import build_pair
from ridgekit.ridgelet.profile import build_profile
from ridgekit.sampler.neurons import (build_network, draw_neuron,
                                      neuron_readouts, second_moment_audit)
from ridgekit.sampler.student_t import StudentTSampler
from ridgekit.spaces.domains import Domain, WeightSpec
from ridgekit.spaces.targets import GaussianTarget, ZeroTarget
from ridgekit.testing import TestCase


class NeuronTests(TestCase):
    """Unit tests for randomized neurons and sampled networks."""

    @classmethod
    def setUpClass(cls):
        super(NeuronTests, cls).setUpClass()

        cls.pair = build_pair(build_profile(), 'tanh', 1)
        cls.target = GaussianTarget(1)

    def test_zero_target(self):
        """Testing draw_neuron and build_network with the zero target"""
        sampler = StudentTSampler(1, seed=1)

        draw = draw_neuron(self.pair, ZeroTarget(1), sampler)
        net = build_network(self.pair, ZeroTarget(1), 1, sampler)

        self.assertEqual(draw.y.tolist(), [0.0])
        self.assertEqual(net.size, 1)
        self.assertAllClose(net.eval(np.linspace(-3.0, 3.0, 7)),
                            np.zeros((7, 1)))

    def test_readouts_real_and_finite(self):
        """Testing that readouts are real and finite"""
        A, B = StudentTSampler(1, seed=2).take(10000)
        readouts = neuron_readouts(self.pair, self.target, A, B)

        self.assertEqual(readouts.shape, (10000, 1))
        self.assertFalse(np.iscomplexobj(readouts))
        self.assertTrue(np.all(np.isfinite(readouts)))

    def test_draw_neuron_matches_stream(self):
        """Testing that draw_neuron consumes the next draw"""
        sampler = StudentTSampler(1, seed=3)
        A, B = StudentTSampler(1, seed=3).draws(0, 2)

        draw_neuron(self.pair, self.target, sampler)
        draw = draw_neuron(self.pair, self.target, sampler)

        self.assertTrue(np.array_equal(draw.a, A[1]))
        self.assertEqual(draw.b, B[1])

    def test_unbiased(self):
        """Testing that randomized neurons average to the target"""
        N = 100000
        A, B = StudentTSampler(1, seed=4).take(N)
        readouts = neuron_readouts(self.pair, self.target, A, B)[:, 0]
        grid = np.linspace(-3.0, 3.0, 13)

        for u in grid:
            values = readouts * self.pair.activation(A[:, 0] * u - B)
            mean = np.mean(values)
            standard_error = np.std(values, ddof=1) / np.sqrt(N)
            expected = self.target.eval(np.array([u]))[0, 0]

            self.assertLessEqual(abs(mean - expected), 4.0 * standard_error,
                                 'u=%g' % u)

    def test_build_network(self):
        """Testing build_network"""
        net = build_network(self.pair, self.target, 64,
                            StudentTSampler(1, seed=5))
        again = build_network(self.pair, self.target, 64,
                              StudentTSampler(1, seed=5))
        A, B = StudentTSampler(1, seed=5).draws(0, 64)

        self.assertEqual(net.size, 64)
        self.assertEqual(net.activation.name, 'tanh')
        self.assertTrue(np.array_equal(net.directions, A))
        self.assertTrue(np.array_equal(net.biases, B))
        self.assertAllClose(
            net.readouts,
            neuron_readouts(self.pair, self.target, A, B) / 64.0,
            rtol=1e-15)
        self.assertEqual(dumps(net), dumps(again))

    def test_build_network_invalid_count(self):
        """Testing build_network with N = 0"""
        with self.assertRaises(InvalidInput):
            build_network(self.pair, self.target, 0,
                          StudentTSampler(1, seed=6))


class SecondMomentAuditTests(TestCase):
    """Unit tests for ridgekit.sampler.neurons.second_moment_audit."""

    @classmethod
    def setUpClass(cls):
        super(SecondMomentAuditTests, cls).setUpClass()

        cls.pair = build_pair(build_profile(), 'tanh', 1)
        cls.domain = Domain.full_space(1)
        cls.weight = WeightSpec('gaussian', gamma=0.0, p=2.0)

    def test_zero_target(self):
        """Testing second_moment_audit with the zero target"""
        result = second_moment_audit(self.pair, ZeroTarget(1), self.weight,
                                     self.domain, 0, 2.0, 100)

        self.assertEqual(result.estimate, 0.0)
        self.assertEqual(result.bound, 0.0)
        self.assertTrue(result.passed)

    def test_scaling(self):
        """Testing that second_moment_audit is homogeneous in the target"""
        target = GaussianTarget(1)
        single = second_moment_audit(self.pair, target, self.weight,
                                     self.domain, 0, 2.0, 2000,
                                     sampler=StudentTSampler(1, seed=7))
        double = second_moment_audit(self.pair, target * 2.0, self.weight,
                                     self.domain, 0, 2.0, 2000,
                                     sampler=StudentTSampler(1, seed=7))

        self.assertAlmostEqual(double.estimate / single.estimate, 2.0,
                               places=9)
        self.assertAlmostEqual(double.bound / single.bound, 2.0, places=6)

    def test_estimate_within_bound(self):
        """Testing the second-moment estimate against its explicit bound"""
        for k in (0, 1):
            result = second_moment_audit(self.pair, GaussianTarget(1),
                                         self.weight, self.domain, k, 2.0,
                                         10000,
                                         sampler=StudentTSampler(1, seed=8))

            self.assertGreater(result.estimate, 0.0)
            self.assertTrue(result.passed, result.as_dict())
            self.assertLess(result.max_share, 1.0)

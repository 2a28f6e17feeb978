import json
import math
import os
import threading

import numpy as np

from ridgekit.utils.errors import ConfigError, WorkerCountError
from ridgekit.utils.filesystem import load_config, load_json_config
from ridgekit.utils.parallel import (get_worker_count, ordered_map,
                                     pairwise_sum)
from ridgekit.utils.quadrature import (composite_gauss_legendre,
                                       fourier_integral, gauss_legendre,
                                       quad_complex, refine_until_converged,
                                       tensor_rule)
from ridgekit.utils.testbase import RKTestBase


class FilesystemTests(RKTestBase):
    """Unit tests for ridgekit.utils.filesystem."""

    def test_make_tempdir(self):
        """Testing RKTestBase.make_tempdir"""
        dirname = self.make_tempdir()

        self.assertTrue(os.path.isdir(dirname))
        self.assertTrue(os.path.basename(dirname).startswith('ridgekit.'))
        self.assertIn(dirname, self._tempdirs)

    def test_load_config_defaults(self):
        """Testing load_config without any .ridgekitrc"""
        self.chdir_tmp()
        config = load_config()

        self.assertEqual(config['COLOR']['WARNING'], 'yellow')
        self.assertEqual(config['QUADRATURE'], {})

    def test_load_config_merges_nested(self):
        """Testing load_config merging COLOR key by key"""
        self.chdir_tmp()

        with self.ridgekitrc({'COLOR': {'INFO': 'green'},
                              'ACTIVATION': 'sigmoid'}):
            config = load_config()

        self.assertEqual(config['COLOR']['INFO'], 'green')
        self.assertEqual(config['COLOR']['ERROR'], 'red')
        self.assertEqual(config['ACTIVATION'], 'sigmoid')

    def test_load_config_precedence(self):
        """Testing that the nearest .ridgekitrc wins over the home one"""
        with open(os.path.join(self.get_user_home(), '.ridgekitrc'),
                  'w') as fp:
            fp.write('ZETA1 = 0.5\nZETA2 = 3.0\n')

        self.chdir_tmp()

        with self.ridgekitrc({'ZETA1': 1.5}):
            config = load_config()

        self.assertEqual(config['ZETA1'], 1.5)
        self.assertEqual(config['ZETA2'], 3.0)

    def test_load_config_syntax_error(self):
        """Testing load_config with a syntax error"""
        self.chdir_tmp()

        with open('.ridgekitrc', 'w') as fp:
            fp.write('ZETA1 = = 1\n')

        with self.assertRaises(ConfigError):
            load_config()

    def test_load_json_config(self):
        """Testing load_json_config"""
        self.chdir_tmp()

        with open('options.json', 'w') as fp:
            json.dump({'neurons': [4, 8]}, fp)

        self.assertEqual(load_json_config('options.json'),
                         {'neurons': [4, 8]})

    def test_load_json_config_not_object(self):
        """Testing load_json_config with a JSON list"""
        self.chdir_tmp()

        with open('options.json', 'w') as fp:
            fp.write('[1, 2]')

        with self.assertRaisesMessage(ConfigError, 'must contain a JSON '
                                                   'object'):
            load_json_config('options.json')

    def test_load_json_config_missing(self):
        """Testing load_json_config with a missing file"""
        with self.assertRaises(ConfigError):
            load_json_config(os.path.join(self.make_tempdir(), 'missing.json'))


class ParallelTests(RKTestBase):
    """Unit tests for ridgekit.utils.parallel."""

    def test_worker_count_from_environment(self):
        """Testing get_worker_count with RIDGEKIT_THREADS"""
        os.environ['RIDGEKIT_THREADS'] = '3'

        self.assertEqual(get_worker_count(), 3)

    def test_worker_count_default(self):
        """Testing get_worker_count without RIDGEKIT_THREADS"""
        self.assertGreaterEqual(get_worker_count(), 1)

    def test_worker_count_invalid(self):
        """Testing get_worker_count with invalid RIDGEKIT_THREADS"""
        for value in ('0', '-2', 'many'):
            os.environ['RIDGEKIT_THREADS'] = value

            with self.assertRaises(WorkerCountError):
                get_worker_count()

    def test_ordered_map(self):
        """Testing ordered_map keeps input order"""
        items = list(range(20))

        self.assertEqual(ordered_map(lambda x: x * x, items, workers=4),
                         [x * x for x in items])

    def test_ordered_map_single_worker(self):
        """Testing ordered_map with one worker runs inline"""
        main_thread = threading.current_thread()
        threads = ordered_map(lambda x: threading.current_thread(), [1, 2],
                              workers=1)

        self.assertEqual(threads, [main_thread, main_thread])

    def test_pairwise_sum(self):
        """Testing pairwise_sum"""
        self.assertEqual(pairwise_sum([]), 0.0)
        self.assertEqual(pairwise_sum([1.0, 2.0, 3.0]), 6.0)
        self.assertAllClose(pairwise_sum([np.ones(2)] * 5), [5.0, 5.0])


class QuadratureTests(RKTestBase):
    """Unit tests for ridgekit.utils.quadrature."""

    def test_gauss_legendre(self):
        """Testing gauss_legendre integrates polynomials exactly"""
        nodes, weights = gauss_legendre(5, 0.0, 2.0)

        self.assertAlmostEqual(np.sum(weights * nodes ** 9), 2.0 ** 10 / 10,
                               places=10)

    def test_composite_gauss_legendre(self):
        """Testing composite_gauss_legendre"""
        nodes, weights = composite_gauss_legendre(0.0, math.pi, 8, 8)

        self.assertEqual(len(nodes), 64)
        self.assertAlmostEqual(np.sum(weights * np.sin(nodes)), 2.0,
                               places=12)

    def test_tensor_rule(self):
        """Testing tensor_rule on a box"""
        points, weights = tensor_rule([(0.0, 1.0), (0.0, 2.0)], 4)

        self.assertEqual(points.shape, (16, 2))
        self.assertAlmostEqual(np.sum(weights), 2.0, places=13)
        self.assertAlmostEqual(np.sum(weights * points[:, 0] * points[:, 1]),
                               1.0, places=13)

    def test_quad_complex(self):
        """Testing quad_complex"""
        value, _ = quad_complex(lambda x: np.exp(1j * x), 0.0, math.pi)

        self.assertAlmostEqual(value.real, 0.0, places=9)
        self.assertAlmostEqual(value.imag, 2.0, places=9)

    def test_fourier_integral(self):
        """Testing fourier_integral against a closed form"""
        value = fourier_integral(lambda x: 1.0, -1.0, 1.0, 3.0)

        self.assertAlmostEqual(value.real, 2.0 * math.sin(3.0) / 3.0,
                               places=9)
        self.assertAlmostEqual(value.imag, 0.0, places=9)

    def test_refine_until_converged(self):
        """Testing refine_until_converged"""
        def estimate(n):
            nodes, weights = gauss_legendre(n, 0.0, 1.0)
            return np.sum(weights * np.exp(nodes))

        value, n, converged = refine_until_converged(estimate, 2, 64, 1e-12)

        self.assertTrue(converged)
        self.assertLessEqual(n, 64)
        self.assertAlmostEqual(value, math.e - 1.0, places=12)

"""Unit tests for ridgekit.harness.output."""

import io
import json
import os
import shutil
import tempfile

from ridgekit.harness.output import write_csv, write_manifest
from ridgekit.testing import TestCase


class OutputTests(TestCase):
    """Unit tests for CSV and manifest output."""

    def setUp(self):
        super(OutputTests, self).setUp()

        self.tempdir = tempfile.mkdtemp(prefix='ridgekit-tests.')
        self.addCleanup(shutil.rmtree, self.tempdir)

    def _read(self, name):
        with io.open(os.path.join(self.tempdir, name), encoding='utf-8') as fp:
            return fp.read()

    def test_write_csv(self):
        """Testing write_csv column order and formatting"""
        path = os.path.join(self.tempdir, 'nested', 'rates.csv')
        rows = [
            {'N': 16, 'median_error': 0.1, 'errors': [0.1, 0.25],
             'within_bound': True},
            {'N': 64, 'median_error': 0.05, 'errors': [0.05, 0.5],
             'within_bound': False},
        ]

        write_csv(rows, ('N', 'median_error', 'errors', 'within_bound'),
                  path)

        self.assertEqual(
            self._read(os.path.join('nested', 'rates.csv')),
            'N,median_error,errors,within_bound\n'
            '16,0.10000000000000001,0.10000000000000001 0.25,true\n'
            '64,0.050000000000000003,0.050000000000000003 0.5,false\n')

    def test_write_manifest(self):
        """Testing write_manifest"""
        path = os.path.join(self.tempdir, 'manifest.json')

        manifest = write_manifest(path, {'k': 0}, [0, 1], '1.0', 2.5,
                                  {'slope': True, 'monotone': False},
                                  extra={'summary': {'slope': -0.5}})
        text = self._read('manifest.json')
        data = json.loads(text)

        self.assertEqual(data, json.loads(json.dumps(manifest)))
        self.assertFalse(data['passed'])
        self.assertEqual(data['seeds'], [0, 1])
        self.assertEqual(data['summary'], {'slope': -0.5})
        self.assertEqual(data['pi_exponent_discrepancy']['used'], '(m+1)/4')
        self.assertLess(text.index('"checks"'), text.index('"config"'))

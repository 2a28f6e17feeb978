import os
import re
import unittest

import numpy as np


class TestCase(unittest.TestCase):
    """The base class for ridgekit test cases.

    Unlike the standard unittest.TestCase, this allows the test case
    description (generally the first line of the docstring) to wrap multiple
    lines.

    Every test runs with :envvar:`RIDGEKIT_THREADS` unset and
    :envvar:`RIDGEKIT_CONFIG_PATH` cleared, so results never depend on the
    developer's environment.
    """

    ws_re = re.compile(r'\s+')

    isolated_env = ('RIDGEKIT_THREADS', 'RIDGEKIT_CONFIG_PATH')

    def setUp(self):
        super(TestCase, self).setUp()

        self._saved_env = {}

        for name in self.isolated_env:
            self._saved_env[name] = os.environ.pop(name, None)

    def tearDown(self):
        super(TestCase, self).tearDown()

        for name, value in self._saved_env.items():
            if value is None:
                os.environ.pop(name, None)
            else:
                os.environ[name] = value

    def shortDescription(self):
        """Returns the description of the current test.

        This changes the default behavior to replace all newlines with spaces,
        allowing a test description to span lines. It should still be kept
        short, though.
        """
        doc = self._testMethodDoc

        if doc is not None:
            doc = doc.split('\n\n', 1)[0]
            doc = self.ws_re.sub(' ', doc).strip()

        return doc

    def assertRaisesMessage(self, expected_exception, expected_message):
        """Assert that a call raises an exception with the given message.

        Args:
            expected_exception (type):
                The type of exception that's expected to be raised.

            expected_message (str):
                The expected exception message.

        Raises:
            AssertionError:
                The assertion failure, if the exception and message isn't
                raised.
        """
        return self.assertRaisesRegex(expected_exception,
                                      re.escape(expected_message))

    def assertAllClose(self, actual, expected, rtol=1e-7, atol=0.0):
        """Assert that two arrays agree elementwise within tolerance.

        Args:
            actual (array-like):
                The computed values.

            expected (array-like):
                The reference values.

            rtol (float, optional):
                Relative tolerance.

            atol (float, optional):
                Absolute tolerance.
        """
        np.testing.assert_allclose(actual, expected, rtol=rtol, atol=atol)

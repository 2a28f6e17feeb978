#!/usr/bin/env python

import os
import sys

import pytest


def run_tests():
    """Run the test suite."""
    pytest_argv = [
        '-v',
        'ridgekit',
    ]

    if len(sys.argv) > 1:
        pytest_argv += sys.argv[1:]

    return pytest.main(pytest_argv)


if __name__ == '__main__':
    os.chdir(os.path.join(os.path.dirname(__file__), '..'))
    sys.path.insert(0, os.getcwd())
    sys.exit(run_tests())

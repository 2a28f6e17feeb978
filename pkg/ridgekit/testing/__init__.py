from ridgekit.testing.testcase import TestCase


__all__ = ['TestCase']

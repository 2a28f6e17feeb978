"""Error classes for utility functions."""

from ridgekit.errors import InputError, RidgekitError


class ConfigError(RidgekitError):
    """An error loading a configuration file."""


class WorkerCountError(InputError):
    """An invalid worker count was requested through the environment."""

    def __init__(self, value):
        super(WorkerCountError, self).__init__(
            'RIDGEKIT_THREADS must be a positive integer, got %r' % value)
        self.value = value

"""Error classes for experiment orchestration."""

from ridgekit.errors import InputError


class InvalidExponent(InputError):
    """An integrability exponent makes a rate formula diverge."""


class InvalidConfig(InputError):
    """An experiment configuration is incomplete or inconsistent."""

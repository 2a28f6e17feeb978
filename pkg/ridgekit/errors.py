"""Base exception classes shared by every ridgekit subpackage."""


class RidgekitError(Exception):
    """Base class for all errors raised by ridgekit."""


class InputError(RidgekitError, ValueError):
    """Base class for errors caused by invalid arguments."""


class InvalidInput(InputError):
    """An argument was malformed, non-finite or out of range."""

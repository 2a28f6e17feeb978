"""Error classes for networks and their file format."""

from ridgekit.errors import InputError


class NetworkFormatError(InputError):
    """A network record could not be parsed."""

    def __init__(self, message, line=None):
        if line is not None:
            message = 'Line %d: %s' % (line, message)

        super(NetworkFormatError, self).__init__(message)
        self.line = line

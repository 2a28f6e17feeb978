"""The plain-text network file format.

A version 1 record looks like::

    ridgekit-network 1
    activation tanh
    m 2
    d 1
    neurons 3
    <y_1 ... y_d> <a_1 ... a_m> <b>
    ...

Floats are written with 17 significant digits, which reads back to the same
binary value. Blank lines and lines starting with ``#`` are ignored.
"""

import io

import numpy as np

from ridgekit.activations.catalog import get_activation
from ridgekit.errors import InvalidInput
from ridgekit.network.errors import NetworkFormatError
from ridgekit.network.network import Network


MAGIC = 'ridgekit-network'

CURRENT_VERSION = 1

FLOAT_FORMAT = '%.17g'

DECODER_MAP = {}


def _format_row(values):
    return ' '.join(FLOAT_FORMAT % value for value in values)


def dumps(net):
    """Return the text record of ``net`` in the current format."""
    lines = [
        '%s %d' % (MAGIC, CURRENT_VERSION),
        'activation %s' % net.activation.name,
        'm %d' % net.m,
        'd %d' % net.d,
        'neurons %d' % net.size,
    ]

    for y, a, b in zip(net.readouts, net.directions, net.biases):
        lines.append('%s %s %s' % (_format_row(y), _format_row(a),
                                   FLOAT_FORMAT % b))

    return '\n'.join(lines) + '\n'


def _read_header(lines, key):
    number, line = next(lines, (None, None))

    if line is None:
        raise NetworkFormatError('Missing "%s" line' % key)

    parts = line.split()

    if len(parts) != 2 or parts[0] != key:
        raise NetworkFormatError('Expected "%s <value>"' % key, number)

    return number, parts[1]


def _read_int(lines, key):
    number, value = _read_header(lines, key)

    try:
        value = int(value)
    except ValueError:
        raise NetworkFormatError('"%s" must be an integer' % key, number)

    if value < 1:
        raise NetworkFormatError('"%s" must be positive' % key, number)

    return value


def _decode_v1(lines):
    number, name = _read_header(lines, 'activation')

    try:
        activation = get_activation(name)
    except InvalidInput as e:
        raise NetworkFormatError(str(e), number)

    m = _read_int(lines, 'm')
    d = _read_int(lines, 'd')
    count = _read_int(lines, 'neurons')

    rows = []

    for number, line in lines:
        try:
            row = [float(field) for field in line.split()]
        except ValueError:
            raise NetworkFormatError('Neuron parameters must be numbers',
                                     number)

        if len(row) != d + m + 1:
            raise NetworkFormatError(
                'Expected %d numbers per neuron, got %d'
                % (d + m + 1, len(row)), number)

        rows.append(row)

    if len(rows) != count:
        raise NetworkFormatError('Header announces %d neurons, found %d'
                                 % (count, len(rows)))

    rows = np.array(rows)

    try:
        return Network(activation, rows[:, :d], rows[:, d:d + m],
                       rows[:, d + m])
    except InvalidInput as e:
        raise NetworkFormatError(str(e))


DECODER_MAP[1] = _decode_v1


def loads(text):
    """Parse a network record.

    Raises:
        ridgekit.network.errors.NetworkFormatError:
            The record is malformed or has an unknown version.
    """
    lines = (
        (number, line.strip())
        for number, line in enumerate(text.splitlines(), start=1)
        if line.strip() and not line.lstrip().startswith('#')
    )

    number, header = next(lines, (None, None))

    if header is None:
        raise NetworkFormatError('The network record is empty')

    parts = header.split()

    if len(parts) != 2 or parts[0] != MAGIC:
        raise NetworkFormatError('Not a ridgekit network record', number)

    try:
        version = int(parts[1])
        decoder = DECODER_MAP[version]
    except (ValueError, KeyError):
        raise NetworkFormatError('Unsupported network format version "%s"'
                                 % parts[1], number)

    return decoder(lines)


def dump(net, path):
    """Write ``net`` to ``path``."""
    with io.open(path, 'w', encoding='utf-8', newline='\n') as fp:
        fp.write(dumps(net))


def load(path):
    """Read a network from ``path``."""
    with io.open(path, 'r', encoding='utf-8') as fp:
        return loads(fp.read())

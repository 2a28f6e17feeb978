"""The ridgekit eval command."""

import io
import logging
import sys

import numpy as np

from ridgekit.commands import Command, CommandError, Option, int_list
from ridgekit.harness.output import write_csv, write_csv_stream
from ridgekit.network.codec import load


def load_points(path, m):
    """Read points from a text file, one per line.

    Coordinates are separated by commas or whitespace. Lines starting with
    ``#`` are ignored.

    Returns:
        numpy.ndarray:
        The points, shaped ``(n, m)``.

    Raises:
        ridgekit.commands.CommandError:
            The file cannot be read or its rows do not have ``m`` columns.
    """
    try:
        with io.open(path, 'r', encoding='utf-8') as fp:
            text = fp.read().replace(',', ' ')
    except IOError as e:
        raise CommandError('Unable to read points from %s: %s' % (path, e))

    try:
        points = np.loadtxt(io.StringIO(text), ndmin=2)
    except ValueError as e:
        raise CommandError('Invalid points in %s: %s' % (path, e))

    if points.size == 0:
        raise CommandError('No points found in %s' % path)

    if points.shape[1] != m:
        raise CommandError('Points in %s have %d coordinate(s), but the '
                           'network expects %d'
                           % (path, points.shape[1], m))

    return points


def _multi_index_label(alpha):
    return 'd%s' % ''.join(str(order) for order in alpha)


class Eval(Command):
    """Evaluate a stored network and its partial derivatives."""

    name = 'eval'
    author = 'The ridgekit Project'
    description = ('Evaluate a network file at the points listed in a text '
                   'file and write the values as CSV.')
    args = '[<network-file> <points-file>]'
    option_list = [
        Option('--network',
               dest='network_file',
               metavar='FILE',
               default=None,
               help='The network file to evaluate.'),
        Option('--points',
               dest='points_file',
               metavar='FILE',
               default=None,
               help='The points to evaluate at, one per line.'),
        Option('--partial',
               dest='partials',
               type=int_list,
               action='append',
               metavar='A1,...,Am',
               default=[],
               help='Also write the partial derivative with this '
                    'multi-index. May be given more than once.'),
        Option('-o', '--output',
               dest='csv_file',
               metavar='FILE',
               default=None,
               help='Write the CSV to this file instead of standard '
                    'output.'),
    ]

    def main(self, network_file=None, points_file=None):
        network_file = self.options.network_file or network_file
        points_file = self.options.points_file or points_file

        if not network_file or not points_file:
            raise CommandError('Both a network file and a points file '
                               'are required')

        try:
            net = load(network_file)
        except IOError as e:
            raise CommandError('Unable to read network %s: %s'
                               % (network_file, e))
        except ValueError as e:
            raise CommandError('%s: %s' % (network_file, e))

        points = load_points(points_file, net.m)

        logging.debug('Evaluating %d neurons at %d points', net.size,
                      len(points))

        blocks = [('phi', net.eval(points))]

        for alpha in self.options.partials:
            try:
                blocks.append((_multi_index_label(alpha),
                               net.partial_eval(alpha, points)))
            except ValueError as e:
                raise CommandError(str(e))

        columns = ['u%d' % (i + 1) for i in range(net.m)]

        for label, _ in blocks:
            columns += ['%s_%d' % (label, j + 1) for j in range(net.d)]

        rows = []

        for i, u in enumerate(points):
            row = dict(('u%d' % (axis + 1), float(value))
                       for axis, value in enumerate(u))

            for label, values in blocks:
                row.update(('%s_%d' % (label, j + 1), float(value))
                           for j, value in enumerate(values[i]))

            rows.append(row)

        if self.options.csv_file:
            write_csv(rows, columns, self.options.csv_file)
        else:
            write_csv_stream(rows, columns, sys.stdout)

"""The ridgekit fourier-check command."""

import logging
import time

from ridgekit.activations.catalog import ACTIVATIONS
from ridgekit.activations.errors import InvalidTestFunction
from ridgekit.activations.fourier import (bump_family,
                                          default_test_functions,
                                          pairing_check, zero_test_function)
from ridgekit.commands import Command, CommandError, Option, float_pair
from ridgekit.harness.experiments import ExperimentResult
from ridgekit.ridgelet.admissibility import (admissibility_constant,
                                             admissibility_lower_bound)
from ridgekit.ridgelet.errors import DegenerateAdmissibility, InvalidSupport
from ridgekit.ridgelet.profile import build_profile, moment


CHECK_COLUMNS = ('name', 'support', 'residual', 'pass/fail',
                 'activation', 'check', 'value', 'bound')

#: Largest accepted pairing residual and profile moment.
DEFAULT_THRESHOLD = 1e-6

MOMENT_ORDERS = range(6)

ADMISSIBILITY_DIMS = (1, 2, 3)


def format_support(support):
    return '[%g,%g]' % tuple(support)


def _row(name, support, residual, activation, check, value, bound,
         passed):
    return {
        'name': name,
        'support': support,
        'residual': residual,
        'pass/fail': 'pass' if passed else 'fail',
        'activation': activation,
        'check': check,
        'value': value,
        'bound': bound,
        'passed': passed,
    }


def pairing_rows(activations, threshold, test_functions=None):
    """Return one row per activation and test function.

    Without ``test_functions``, the default bumps and the zero function
    are used.
    """
    if test_functions is None:
        test_functions = default_test_functions() + [zero_test_function()]

    rows = []

    for name in activations:
        for test_fn in test_functions:
            residual = pairing_check(name, test_fn)
            rows.append(_row(test_fn.label,
                             format_support(test_fn.support),
                             residual,
                             name,
                             'pairing %s %s' % (name, test_fn.label),
                             residual,
                             threshold,
                             residual <= threshold))

    return rows


def moment_rows(profile, threshold):
    rows = []

    for j in MOMENT_ORDERS:
        value = moment(profile, j, taper=True)
        rows.append(_row('psi moment j=%d' % j,
                         format_support((profile.zeta1, profile.zeta2)),
                         value,
                         None,
                         'moment j=%d' % j,
                         value,
                         threshold,
                         value <= threshold))

    return rows


def admissibility_rows(profile, activations):
    """Compare each ``|C_m|`` with its explicit lower bound."""
    rows = []

    for name in activations:
        for m in ADMISSIBILITY_DIMS:
            lower = admissibility_lower_bound(profile, name, m)

            try:
                value = abs(admissibility_constant(profile, name, m))
            except DegenerateAdmissibility as e:
                logging.error('%s', e)
                value = 0.0

            rows.append(_row('admissibility m=%d' % m,
                             None,
                             None,
                             name,
                             'admissibility %s m=%d' % (name, m),
                             value,
                             lower,
                             value > 0.0 and value >= lower))

    return rows


class FourierCheck(Command):
    """Verify the Fourier-side identities of the activation catalog."""

    name = 'fourier-check'
    author = 'The ridgekit Project'
    description = ('Check the distributional Fourier densities of the '
                   'activations against test functions, the vanishing '
                   'moments of the ridgelet profile and the admissibility '
                   'constants with their lower bounds.')
    option_list = [
        Option('--activation', '--activations',
               dest='activations',
               metavar='NAME,...',
               default=None,
               help='Restrict the checks to these activations. Defaults to '
                    'the whole catalog.'),
        Option('--support',
               dest='support',
               type=float_pair,
               dash_value=True,
               metavar='A,B',
               default=None,
               help='Check bumps of degree 0, 1 and 2 supported on [A, B] '
                    'instead of the default test functions. The interval '
                    'must not contain 0.'),
        Option('--tol', '--threshold',
               dest='threshold',
               type=float,
               default=DEFAULT_THRESHOLD,
               help='The largest accepted pairing residual and moment.'),
        Option('--zeta',
               dest='zeta',
               type=float_pair,
               metavar='Z1,Z2',
               default=None,
               help='Both edges of the profile\'s Fourier support, as '
                    '"1,2". Replaces --zeta1 and --zeta2.'),
        Option('--zeta1',
               dest='zeta1',
               type=float,
               config_key='ZETA1',
               default=1.0,
               help='The lower edge of the profile\'s Fourier support.'),
        Option('--zeta2',
               dest='zeta2',
               type=float,
               config_key='ZETA2',
               default=2.0,
               help='The upper edge of the profile\'s Fourier support.'),
        Command.output_options,
    ]

    def main(self):
        started = time.time()

        if self.options.activations:
            activations = [name.strip()
                           for name in self.options.activations.split(',')]
            unknown = sorted(set(activations) - set(ACTIVATIONS))

            if unknown:
                raise CommandError('Unknown activations: %s'
                                   % ', '.join(unknown))
        else:
            activations = sorted(ACTIVATIONS)

        test_functions = None

        if self.options.support is not None:
            try:
                test_functions = bump_family(*self.options.support)
            except InvalidTestFunction as e:
                raise CommandError(str(e))

        zeta1, zeta2 = self.options.zeta or (self.options.zeta1,
                                             self.options.zeta2)
        threshold = self.options.threshold

        try:
            profile = build_profile(zeta1, zeta2)
        except InvalidSupport as e:
            raise CommandError(str(e))

        rows = (pairing_rows(activations, threshold, test_functions) +
                moment_rows(profile, threshold) +
                admissibility_rows(profile, activations))

        self.tabulate(('Check', 'Value', 'Bound', 'Result'),
                      [(row['check'], '%.3e' % row['value'],
                        '%.3e' % row['bound'],
                        'pass' if row['passed'] else 'FAIL')
                       for row in rows])

        result = ExperimentResult(
            rows, CHECK_COLUMNS,
            dict((row['check'], row['passed']) for row in rows))
        self.write_results(result, 'fourier.csv', None, started,
                           extra={'profile': [profile.zeta1, profile.zeta2],
                                  'threshold': threshold})

        return self.report_checks(result.checks, show_table=False)

"""The ridgekit rate command."""

import logging
import time

from ridgekit.commands import Command, CommandError, Option, int_list
from ridgekit.harness.experiments import run_rate_experiment


class Rate(Command):
    """Measure the approximation error of sampled networks against N."""

    name = 'rate'
    author = 'The ridgekit Project'
    description = ('Sample networks of increasing width from the ridgelet '
                   'transform of the target and fit the decay of their '
                   'weighted Sobolev error.')
    option_list = [
        Option('--neurons',
               dest='neurons',
               type=int_list,
               metavar='N1,N2,...',
               default=None,
               help='The strictly increasing network widths. Defaults to '
                    '16,64,256,1024,4096.'),
        Option('--seeds',
               dest='seeds',
               type=int_list,
               metavar='S1,S2,...',
               default=None,
               help='The distinct seeds, at least 3. Defaults to '
                    '0,1,2,3,4.'),
        Option('--sobolev-nodes',
               dest='sobolev_nodes',
               type=int,
               metavar='N',
               default=None,
               help='Gauss-Legendre nodes per axis for the error norm.'),
        Option('--rate-constant',
               dest='rate_constant',
               type=float,
               metavar='CP',
               default=None,
               help='The constant in the rate bound. By default it is '
                    'calibrated from the errors at the smallest width.'),
        Command.model_options,
        Command.space_options,
        Command.output_options,
    ]

    def main(self):
        started = time.time()
        cfg = self.experiment_config()

        try:
            cfg.validate_for_rates()
        except ValueError as e:
            raise CommandError(str(e))

        result = run_rate_experiment(cfg, workers=self.options.threads,
                                     progress=self.show_progress())

        self.tabulate(
            ('N', 'Median error', 'Bound', 'Within bound'),
            [(row['N'], '%.4e' % row['median_error'],
              '%.4e' % row['bound'],
              'yes' if row['within_bound'] else 'no')
             for row in result.rows])

        slope = result.summary.get('slope')

        if slope is not None:
            lo, hi = result.summary['slope_window']
            logging.info('Fitted slope: %.4f (expected %.4f, accepted '
                         '[%.2f, %.2f])',
                         slope, result.summary['expected_slope'], lo, hi)

        self.write_results(result, 'rate.csv', cfg, started)

        return self.report_checks(result.checks)

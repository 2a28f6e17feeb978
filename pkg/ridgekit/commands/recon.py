"""The ridgekit recon command."""

import logging
import time

from ridgekit.commands import Command, Option, grid_spec, json_object
from ridgekit.harness.experiments import run_reconstruction_experiment


class Recon(Command):
    """Reconstruct a target from its ridgelet transform on a grid."""

    name = 'recon'
    author = 'The ridgekit Project'
    description = ('Evaluate the truncated reconstruction formula for the '
                   'target on a grid of points and compare it with the '
                   'target itself.')
    option_list = [
        Option('--grid',
               dest='grid',
               type=grid_spec,
               dash_value=True,
               metavar='LO:HI:STEP',
               default=None,
               help='The evaluation grid per axis, as "-3:3:0.25" or as '
                    '{"lo": LO, "hi": HI, "step": STEP}.'),
        Option('--truncation',
               dest='truncation',
               type=json_object,
               metavar='JSON',
               default=None,
               help='Truncation settings, as a JSON object with keys '
                    'among delta1, delta2, t_max, sphere_nodes and '
                    'scale_nodes.'),
        Option('--tolerance',
               dest='tolerance',
               type=float,
               default=None,
               help='The accepted maximum error, relative to max |g| on '
                    'the grid. Defaults to 0.02.'),
        Command.model_options,
        Command.output_options,
    ]

    def main(self):
        started = time.time()
        cfg = self.experiment_config()

        logging.debug('Reconstruction configuration: %r', cfg.as_dict())

        result = run_reconstruction_experiment(
            cfg, workers=self.options.threads,
            progress=self.show_progress())

        summary = result.summary
        self.tabulate(
            ('Points', 'Max error', 'Max imag residue', 'Max |g|'),
            [(len(result.rows), '%.3e' % summary['max_error'],
              '%.3e' % summary['max_imag_residue'],
              '%.3e' % summary['max_abs_target'])])

        if summary['warnings']:
            logging.warning('%d point(s) reported truncation warnings',
                            summary['warnings'])

        self.write_results(result, 'recon.csv', cfg, started)

        return self.report_checks(result.checks)

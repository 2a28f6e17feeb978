"""The ridgekit audit-spaces command."""

import logging
import time

from ridgekit.commands import (Command, CommandError, Option, OptionGroup,
                               float_list, int_range)
from ridgekit.harness.config import DEFAULTS
from ridgekit.harness.experiments import ExperimentResult
from ridgekit.sampler.neurons import second_moment_audit
from ridgekit.sampler.student_t import StudentTSampler
from ridgekit.spaces.barron import barron_fourier_bound, barron_norm_estimate
from ridgekit.spaces.errors import MissingDerivatives
from ridgekit.spaces.norms import product_weight_bound, weight_constant


AUDIT_COLUMNS = ('dim', 'gamma', 'p', 'check', 'value', 'bound',
                 'pass/fail')


def _row(cfg, check, value, bound, passed, p=None):
    return {
        'dim': cfg.dim,
        'gamma': cfg.gamma,
        'p': p,
        'check': check,
        'value': value,
        'bound': bound,
        'pass/fail': 'pass' if passed else 'fail',
        'passed': passed,
    }


def weight_row(cfg):
    """Compare the weight constant with the product bound for one cell."""
    w = cfg.weight_spec()
    value = weight_constant(cfg.domain_spec(), w)
    bound = product_weight_bound(w, cfg.dim)

    return _row(cfg,
                'weight m=%d gamma=%g p=%g' % (cfg.dim, cfg.gamma, cfg.p),
                value, bound, value <= bound * (1.0 + 1e-9), p=cfg.p)


class AuditSpaces(Command):
    """Audit the function-space inequalities behind the rate bound."""

    name = 'audit-spaces'
    author = 'The ridgekit Project'
    description = ('Check the weight constant inequality for product '
                   'weights, the Fourier-side bound on the ridgelet-Barron '
                   'norm of the target and the second moment of a sampled '
                   'neuron, over a sweep of dimensions, growth exponents '
                   'and integrability exponents.')
    option_list = [
        OptionGroup(
            name='Sweep Options',
            description='Every combination of these values is audited.',
            option_list=[
                Option('-m', '--dim',
                       dest='dims',
                       type=int_range,
                       metavar='M',
                       default=None,
                       help='Input dimensions, as "1..3" or "1,3".'),
                Option('--gamma',
                       dest='gammas',
                       type=float_list,
                       metavar='GAMMA,...',
                       default=None,
                       help='Polynomial growth exponents, as "0,1".'),
                Option('-p', '--p',
                       dest='exponents',
                       type=float_list,
                       metavar='P,...',
                       default=None,
                       help='Integrability exponents, as "1,2,3".'),
            ]),
        Option('--samples',
               dest='samples',
               type=int,
               metavar='N',
               default=10000,
               help='Neurons drawn for each second-moment audit.'),
        Option('--seed',
               dest='seed',
               type=int,
               default=0,
               help='The seed of the second-moment audits.'),
        Option('--skip-moment-audit',
               dest='skip_moment_audit',
               action='store_true',
               default=False,
               help='Only run the deterministic checks.'),
        Command.model_options.without('dim'),
        Command.space_options.without('gamma', 'p'),
        Command.output_options,
    ]

    def iter_cells(self):
        """Yield the configuration of every valid sweep cell.

        Cells the experiment configuration rejects are logged and skipped.
        """
        dims = self.options.dims or [DEFAULTS['dim']]
        gammas = self.options.gammas or [DEFAULTS['gamma']]
        exponents = self.options.exponents or [DEFAULTS['p']]

        for m in dims:
            for gamma in gammas:
                cells = []

                for p in exponents:
                    try:
                        cells.append(self.experiment_config(
                            dim=m, gamma=gamma, p=p))
                    except CommandError as e:
                        logging.warning('Skipping m=%d gamma=%g p=%g: %s',
                                        m, gamma, p, e)

                if cells:
                    yield cells

    def barron_rows(self, cfg):
        """Return the Barron estimate and its check row, if any."""
        g = cfg.target_function()
        k = int(cfg.k)
        estimate = barron_norm_estimate(cfg.profile(), g, k, cfg.gamma)

        try:
            fourier = barron_fourier_bound(g, cfg.profile(), cfg.gamma, k)
        except MissingDerivatives as e:
            logging.warning('Skipping the Fourier-side Barron bound for '
                            'm=%d gamma=%g: %s', cfg.dim, cfg.gamma, e)
            return estimate, []

        return estimate, [_row(cfg,
                               'barron %s m=%d gamma=%g'
                               % (cfg.target, cfg.dim, cfg.gamma),
                               estimate, fourier, estimate <= fourier)]

    def moment_row(self, cfg):
        pair = cfg.pair()
        k = int(cfg.k)
        audit = second_moment_audit(
            pair, cfg.target_function(), cfg.weight_spec(),
            cfg.domain_spec(), k, cfg.p, self.options.samples,
            sampler=StudentTSampler(pair.m, self.options.seed),
            workers=self.options.threads)

        logging.info('Second moment m=%d gamma=%g p=%g: %.4e +- %.2e '
                     '(bound %.4e, largest single-draw share %.3f)',
                     cfg.dim, cfg.gamma, cfg.p, audit.estimate,
                     audit.standard_error, audit.bound, audit.max_share)

        row = _row(cfg,
                   'second moment m=%d gamma=%g k=%d p=%g'
                   % (cfg.dim, cfg.gamma, k, cfg.p),
                   audit.estimate, audit.bound, audit.passed, p=cfg.p)

        return row, audit

    def main(self):
        started = time.time()

        if not self.options.skip_moment_audit and self.options.samples < 2:
            raise CommandError('--samples must be at least 2')

        rows = []
        estimates = {}
        audits = {}
        first = None

        for cells in self.iter_cells():
            if first is None:
                first = cells[0]

            estimate, barron = self.barron_rows(cells[0])
            key = 'm=%d gamma=%g' % (cells[0].dim, cells[0].gamma)
            estimates[key] = estimate
            rows.extend(barron)

            for cfg in cells:
                rows.append(weight_row(cfg))

                if not self.options.skip_moment_audit:
                    row, audit = self.moment_row(cfg)
                    rows.append(row)
                    audits[row['check']] = audit.as_dict()

        if first is None:
            raise CommandError('No valid dimension, gamma and p combination '
                               'to audit')

        self.tabulate(('Check', 'Value', 'Bound', 'Result'),
                      [(row['check'], '%.6e' % row['value'],
                        '%.6e' % row['bound'],
                        'pass' if row['passed'] else 'FAIL')
                       for row in rows])

        result = ExperimentResult(
            rows, AUDIT_COLUMNS,
            dict((row['check'], row['passed']) for row in rows),
            {'barron_estimate': estimates})
        self.write_results(
            result, 'audit.csv', first, started,
            extra={
                'second_moment': audits,
                'sweep': {
                    'dims': self.options.dims,
                    'gammas': self.options.gammas,
                    'exponents': self.options.exponents,
                },
            })

        return self.report_checks(result.checks, show_table=False)

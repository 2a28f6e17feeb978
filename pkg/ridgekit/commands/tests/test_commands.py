"""Tests for the ridgekit subcommands."""

import argparse
import contextlib
import csv
import io
import json
import os
import shlex

import numpy as np
from kgb import SpyAgency

from ridgekit.commands import (Command, CommandError, float_pair,
                               find_entry_point_for_command, grid_spec,
                               int_range)
from ridgekit.commands.audit_spaces import AuditSpaces
from ridgekit.commands.evaluate import Eval, load_points
from ridgekit.commands.fourier_check import FourierCheck
from ridgekit.commands.plan import Plan
from ridgekit.commands.rate import Rate
from ridgekit.commands.recon import Recon
from ridgekit.commands.sample import Sample
from ridgekit.harness.config import ExperimentConfig
from ridgekit.harness.experiments import (ExperimentResult, RATE_COLUMNS,
                                          run_rate_experiment,
                                          run_reconstruction_experiment)
from ridgekit.network.codec import dump, dumps, loads
from ridgekit.network.network import Network
from ridgekit.sampler.neurons import build_network
from ridgekit.sampler.student_t import StudentTSampler
from ridgekit.utils.testbase import RKTestBase


class CommandTestsMixin(SpyAgency):
    """Helpers for running commands in-process."""

    def create_command(self, command_class, args=None):
        """Create a command and parse ``args`` the way run_from_argv does."""
        command = command_class()
        argv = ['ridgekit', command.name] + (args or [])
        parser = command.create_arg_parser(argv)
        command.options = parser.parse_args(argv[2:])

        return command

    def parse_invocation(self, command_class, line):
        """Parse a command line written as ``<command> [options]``."""
        argv = shlex.split(line)
        self.assertEqual(argv[0], command_class.name)

        return self.create_command(command_class, argv[1:])

    def run_command(self, command_class, args):
        """Run a command and return ``(exit_code, stdout)``."""
        command = command_class()
        self.spy_on(command.init_logging, call_original=False)
        stdout = io.StringIO()

        with contextlib.redirect_stdout(stdout):
            with self.assertRaises(SystemExit) as cm:
                command.run_from_argv(['ridgekit', command.name] + args)

        return cm.exception.code, stdout.getvalue()


class OptionTests(CommandTestsMixin, RKTestBase):
    """Tests for option defaults and overrides."""

    def test_config_key_default(self):
        """Testing that .ridgekitrc values become option defaults"""
        self.chdir_tmp()

        with self.ridgekitrc({'ACTIVATION': 'sigmoid', 'ZETA2': 3.0}):
            command = self.create_command(Recon)

        self.assertEqual(command.options.activation, 'sigmoid')
        self.assertEqual(command.options.zeta2, 3.0)
        self.assertIsNone(command.options.target)

    def test_json_config_overrides(self):
        """Testing --config values override defaults but not flags"""
        self.chdir_tmp()

        with open('options.json', 'w') as fp:
            json.dump({'neurons': [8, 32], 'seeds': [1, 2, 3],
                       'activation': 'softplus'}, fp)

        with self.ridgekitrc({'ACTIVATION': 'sigmoid'}):
            command = self.create_command(
                Rate, ['--config', 'options.json', '--seeds', '4,5,6'])

        self.assertEqual(command.options.neurons, [8, 32])
        self.assertEqual(command.options.seeds, [4, 5, 6])
        self.assertEqual(command.options.activation, 'softplus')

    def test_json_config_unknown_key(self):
        """Testing --config with a key the command does not have"""
        self.chdir_tmp()

        with open('options.json', 'w') as fp:
            json.dump({'grid': {'lo': 0.0, 'hi': 1.0, 'step': 0.5}}, fp)

        command = self.create_command(Rate, ['--config', 'options.json'])

        self.assertFalse(hasattr(command.options, 'grid'))
        self.assertEqual(len(command._pending_warnings), 1)

    def test_experiment_config(self):
        """Testing Command.experiment_config"""
        command = self.create_command(
            Rate, ['-m', '2', '--target', 'hermite', '--neurons', '4,8',
                   '--target-params', '{"degrees": [1, 0]}'])
        cfg = command.experiment_config()

        self.assertEqual(cfg.dim, 2)
        self.assertEqual(cfg.target, 'hermite')
        self.assertEqual(cfg.neurons, [4, 8])
        self.assertEqual(cfg.seeds, [0, 1, 2, 3, 4])

    def test_experiment_config_quadrature(self):
        """Testing Command.experiment_config with QUADRATURE in
        .ridgekitrc
        """
        self.chdir_tmp()

        with self.ridgekitrc({'QUADRATURE': {'delta1': 0.1}}):
            command = self.create_command(Recon)
            flagged = self.create_command(
                Recon, ['--truncation', '{"t_max": 20}'])

        self.assertEqual(command.experiment_config().data['truncation'],
                         {'delta1': 0.1})
        self.assertEqual(flagged.experiment_config().data['truncation'],
                         {'t_max': 20})

    def test_experiment_config_invalid(self):
        """Testing Command.experiment_config with an invalid dimension"""
        command = self.create_command(Rate, ['-m', '5'])

        with self.assertRaises(CommandError):
            command.experiment_config()

    def test_invalid_argument_count(self):
        """Testing run_from_argv with too many arguments"""
        code, _ = self.run_command(Plan, ['--eps', '0.1', 'extra'])

        self.assertEqual(code, 2)


class ArgumentTypeTests(RKTestBase):
    """Tests for the command line argument types."""

    def test_int_range(self):
        """Testing int_range"""
        self.assertEqual(int_range('1..3'), [1, 2, 3])
        self.assertEqual(int_range('1,3'), [1, 3])
        self.assertEqual(int_range('2'), [2])

        with self.assertRaises(argparse.ArgumentTypeError):
            int_range('3..1')

        with self.assertRaises(argparse.ArgumentTypeError):
            int_range('1..x')

    def test_float_pair(self):
        """Testing float_pair"""
        self.assertEqual(float_pair('1,2'), (1.0, 2.0))
        self.assertEqual(float_pair('0.5, 1.5'), (0.5, 1.5))

        with self.assertRaises(argparse.ArgumentTypeError):
            float_pair('1')

        with self.assertRaises(argparse.ArgumentTypeError):
            float_pair('1,2,3')

    def test_grid_spec(self):
        """Testing grid_spec with both notations"""
        self.assertEqual(grid_spec('-3:3:0.25'),
                         {'lo': -3.0, 'hi': 3.0, 'step': 0.25})
        self.assertEqual(grid_spec('{"lo": 0, "hi": 1, "step": 0.5}'),
                         {'lo': 0, 'hi': 1, 'step': 0.5})

        with self.assertRaises(argparse.ArgumentTypeError):
            grid_spec('-3:3')


class InvocationTests(CommandTestsMixin, RKTestBase):
    """Tests for the documented command lines of each command."""

    def test_fourier_check(self):
        """Testing fourier-check --activation --support --tol"""
        command = self.parse_invocation(
            FourierCheck,
            'fourier-check --activation tanh --support 1,2 --tol 1e-6')

        self.assertEqual(command.options.activations, 'tanh')
        self.assertEqual(command.options.support, (1.0, 2.0))
        self.assertEqual(command.options.threshold, 1e-6)

    def test_recon(self):
        """Testing recon --zeta and --grid with a negative lower edge"""
        command = self.parse_invocation(
            Recon,
            'recon --target gaussian --dim 1 --activation tanh --zeta 1,2 '
            '--grid -3:3:0.25')

        self.assertEqual(command.options.grid,
                         {'lo': -3.0, 'hi': 3.0, 'step': 0.25})
        self.assertEqual(command.options.zeta, (1.0, 2.0))

        cfg = command.experiment_config()
        self.assertEqual(cfg.target, 'gaussian')
        self.assertEqual(cfg.activation, 'tanh')
        self.assertEqual(cfg.dim, 1)
        self.assertEqual((cfg.zeta1, cfg.zeta2), (1.0, 2.0))
        self.assertEqual(len(cfg.grid_points()), 25)

    def test_recon_zeta_replaces_edges(self):
        """Testing recon --zeta takes precedence over --zeta1 and --zeta2"""
        command = self.create_command(
            Recon, ['--zeta1', '0.5', '--zeta2', '4', '--zeta', '1,3'])
        cfg = command.experiment_config()

        self.assertEqual((cfg.zeta1, cfg.zeta2), (1.0, 3.0))

    def test_audit_spaces(self):
        """Testing audit-spaces --dim, --gamma and --p sweeps"""
        command = self.parse_invocation(
            AuditSpaces,
            'audit-spaces --target gaussian --dim 1..3 --gamma 0,1 '
            '--p 1,2,3')

        self.assertEqual(command.options.target, 'gaussian')
        self.assertEqual(command.options.dims, [1, 2, 3])
        self.assertEqual(command.options.gammas, [0.0, 1.0])
        self.assertEqual(command.options.exponents, [1.0, 2.0, 3.0])

        groups = list(command.iter_cells())
        self.assertEqual(len(groups), 6)
        self.assertEqual(
            [(cfg.dim, cfg.gamma, cfg.p) for cfg in groups[-1]],
            [(3, 1.0, 1.0), (3, 1.0, 2.0), (3, 1.0, 3.0)])

    def test_audit_spaces_invalid_cells(self):
        """Testing audit-spaces skips cells below the activation's gamma"""
        command = self.create_command(
            AuditSpaces, ['--activation', 'relu', '--dim', '1',
                          '--gamma', '0,1', '--p', '2'])
        groups = list(command.iter_cells())

        self.assertEqual(len(groups), 1)
        self.assertEqual(groups[0][0].gamma, 1.0)

    def test_sample(self):
        """Testing sample --seed --neurons --target --activation"""
        command = self.parse_invocation(
            Sample,
            'sample --seed 7 --neurons 32 --target gaussian '
            '--activation tanh')

        self.assertEqual(command.options.seed, 7)
        self.assertEqual(command.options.neuron_count, 32)
        self.assertEqual(command.options.target, 'gaussian')
        self.assertEqual(command.options.activation, 'tanh')

    def test_eval(self):
        """Testing eval --network --points"""
        command = self.parse_invocation(
            Eval, 'eval --network net.txt --points points.txt')

        self.assertEqual(command.options.network_file, 'net.txt')
        self.assertEqual(command.options.points_file, 'points.txt')
        self.assertEqual(command.options.args, [])


class PlanTests(CommandTestsMixin, RKTestBase):
    """Tests for ridgekit plan."""

    def test_plan(self):
        """Testing ridgekit plan"""
        code, output = self.run_command(
            Plan, ['--c2', '1', '--c3', '2', '-m', '3', '--eps', '0.1'])

        self.assertEqual(code, 0)
        self.assertEqual(output, '900\n')

    def test_plan_divergent_exponent(self):
        """Testing ridgekit plan with p = 1"""
        code, output = self.run_command(Plan, ['-p', '1', '--eps', '0.1'])

        self.assertEqual(code, 1)
        self.assertEqual(output, '')


class SampleTests(CommandTestsMixin, RKTestBase):
    """Tests for ridgekit sample."""

    def test_sample_stdout(self):
        """Testing ridgekit sample writes the sampled network"""
        code, output = self.run_command(Sample, ['-N', '8', '--seed', '3',
                                                 '-j', '1'])
        cfg = ExperimentConfig()
        expected = build_network(cfg.pair(), cfg.target_function(), 8,
                                 StudentTSampler(1, 3), workers=1)

        self.assertEqual(code, 0)
        self.assertEqual(output, dumps(expected))

    def test_sample_file(self):
        """Testing ridgekit sample --output"""
        self.chdir_tmp()
        code, _ = self.run_command(Sample, ['-N', '4', '--activation',
                                            'sigmoid', '-o', 'net.txt'])

        self.assertEqual(code, 0)

        with open('net.txt') as fp:
            net = loads(fp.read())

        self.assertEqual(net.size, 4)
        self.assertEqual(net.activation.name, 'sigmoid')


class EvalTests(CommandTestsMixin, RKTestBase):
    """Tests for ridgekit eval."""

    def setUp(self):
        super(EvalTests, self).setUp()

        self.chdir_tmp()
        self.net = Network('tanh', [[2.0], [-1.0]], [[1.0, 0.0], [0.5, 1.0]],
                           [0.0, 1.0])
        dump(self.net, 'net.txt')

        with open('points.txt', 'w') as fp:
            fp.write('# u1, u2\n0.0, 0.0\n1.0 -1.0\n')

    def test_load_points(self):
        """Testing load_points with commas, spaces and comments"""
        self.assertAllClose(load_points('points.txt', 2),
                            [[0.0, 0.0], [1.0, -1.0]])

    def test_load_points_wrong_dimension(self):
        """Testing load_points with the wrong number of columns"""
        with self.assertRaisesMessage(CommandError, 'have 2 coordinate(s)'):
            load_points('points.txt', 3)

    def test_eval(self):
        """Testing ridgekit eval with a partial derivative"""
        code, output = self.run_command(
            Eval, ['--partial', '1,0', 'net.txt', 'points.txt'])

        self.assertEqual(code, 0)

        lines = output.splitlines()
        self.assertEqual(lines[0], 'u1,u2,phi_1,d10_1')
        self.assertEqual(len(lines), 3)

        values = [float(value) for value in lines[2].split(',')]
        u = np.array([1.0, -1.0])
        self.assertAllClose(values[2], self.net.eval(u)[0], rtol=1e-15)
        self.assertAllClose(values[3], self.net.partial_eval((1, 0), u)[0],
                            rtol=1e-15)

    def test_eval_named_files(self):
        """Testing ridgekit eval --network --points"""
        code, output = self.run_command(
            Eval, ['--network', 'net.txt', '--points', 'points.txt'])

        self.assertEqual(code, 0)

        lines = output.splitlines()
        self.assertEqual(lines[0], 'u1,u2,phi_1')
        self.assertEqual(len(lines), 3)

    def test_eval_without_points(self):
        """Testing ridgekit eval without a points file"""
        code, output = self.run_command(Eval, ['--network', 'net.txt'])

        self.assertEqual(code, 1)
        self.assertEqual(output, '')

    def test_eval_missing_network(self):
        """Testing ridgekit eval with a missing network file"""
        code, _ = self.run_command(Eval, ['missing.txt', 'points.txt'])

        self.assertEqual(code, 1)


class ExperimentCommandTests(CommandTestsMixin, RKTestBase):
    """Tests for ridgekit rate and recon output handling."""

    def test_rate_failed_check(self):
        """Testing ridgekit rate exits 1 after writing output when a check
        fails
        """
        def _fake_run(cfg, workers=None, progress=False):
            rows = [
                {'N': N, 'median_error': 0.1, 'errors': [0.1] * 3,
                 'bound': 1.0, 'within_bound': True}
                for N in cfg.neurons
            ]

            return ExperimentResult(rows, RATE_COLUMNS,
                                    {'slope': False, 'monotone': True},
                                    {'slope': 0.0, 'slope_window': [-0.65,
                                                                    -0.35],
                                     'expected_slope': -0.5})

        self.spy_on(run_rate_experiment, call_fake=_fake_run)
        outdir = os.path.join(self.chdir_tmp(), 'out')

        code, output = self.run_command(
            Rate, ['--neurons', '4,8', '--seeds', '0,1,2', '-o', outdir])

        self.assertEqual(code, 1)
        self.assertIn('FAIL', output)
        self.assertTrue(run_rate_experiment.called)

        with open(os.path.join(outdir, 'rate.csv')) as fp:
            self.assertEqual(fp.readline(),
                             'N,median_error,errors,bound,within_bound\n')

        with open(os.path.join(outdir, 'manifest.json')) as fp:
            manifest = json.load(fp)

        self.assertFalse(manifest['passed'])
        self.assertEqual(manifest['config']['neurons'], [4, 8])
        self.assertEqual(manifest['table'], 'rate.csv')

    def test_rate_too_few_seeds(self):
        """Testing ridgekit rate with two seeds"""
        self.spy_on(run_rate_experiment)

        code, _ = self.run_command(Rate, ['--seeds', '0,1'])

        self.assertEqual(code, 1)
        self.assertFalse(run_rate_experiment.called)

    def test_recon_zero_target(self):
        """Testing ridgekit recon with the zero target"""
        self.spy_on(run_reconstruction_experiment)

        code, output = self.run_command(
            Recon, ['--target', 'zero', '-j', '1',
                    '--grid', '{"lo": -1, "hi": 1, "step": 0.5}'])

        self.assertEqual(code, 0)
        self.assertEqual(
            run_reconstruction_experiment.last_call.kwargs['workers'], 1)
        self.assertIn('max_error', output)

    def test_recon_gaussian(self):
        """Testing ridgekit recon with a Gaussian target and tanh in one
        dimension
        """
        outdir = os.path.join(self.chdir_tmp(), 'out')

        code, _ = self.run_command(
            Recon, ['--target', 'gaussian', '--dim', '1', '--activation',
                    'tanh', '--zeta', '1,2', '--grid', '-1:1:0.5', '-j', '1',
                    '-o', outdir])

        self.assertEqual(code, 0)

        with open(os.path.join(outdir, 'recon.csv')) as fp:
            lines = fp.read().splitlines()

        self.assertEqual(
            lines[0],
            'u,g(u),reconstruction,abs_error,imag_residue,refined,'
            'refinement_change')
        self.assertEqual(len(lines), 6)

        with open(os.path.join(outdir, 'manifest.json')) as fp:
            manifest = json.load(fp)

        self.assertTrue(manifest['passed'])
        self.assertEqual(manifest['config']['grid'],
                         {'lo': -1.0, 'hi': 1.0, 'step': 0.5})

    def test_audit_spaces_single_cell(self):
        """Testing ridgekit audit-spaces with one dimension, gamma and p"""
        outdir = os.path.join(self.chdir_tmp(), 'out')

        code, _ = self.run_command(
            AuditSpaces, ['--target', 'gaussian', '--dim', '1', '--gamma',
                          '0', '--p', '2', '--samples', '10000', '--seed',
                          '8', '-j', '1', '-o', outdir])

        self.assertEqual(code, 0)

        with open(os.path.join(outdir, 'audit.csv')) as fp:
            lines = fp.read().splitlines()

        self.assertEqual(lines[0], 'dim,gamma,p,check,value,bound,pass/fail')
        self.assertEqual(len(lines), 4)

        for line in lines[1:]:
            self.assertTrue(line.endswith(',pass'), line)

    def test_fourier_check_support(self):
        """Testing ridgekit fourier-check --support"""
        outdir = os.path.join(self.chdir_tmp(), 'out')

        code, _ = self.run_command(
            FourierCheck, ['--activation', 'tanh', '--support', '1,2',
                           '--tol', '1e-6', '-o', outdir])

        with open(os.path.join(outdir, 'fourier.csv')) as fp:
            header = next(csv.reader(fp))
            fp.seek(0)
            rows = list(csv.DictReader(fp))

        self.assertEqual(header,
                         ['name', 'support', 'residual', 'pass/fail',
                          'activation', 'check', 'value', 'bound'])

        pairing = rows[:3]
        self.assertEqual([row['support'] for row in pairing], ['[1,2]'] * 3)
        self.assertEqual([row['activation'] for row in pairing],
                         ['tanh'] * 3)
        self.assertEqual(pairing[0]['name'], 'bump[1,2]')
        self.assertEqual(pairing[0]['pass/fail'], 'pass')
        self.assertEqual(len(rows), 3 + 6 + 3)

        passed = all(row['pass/fail'] == 'pass' for row in rows)
        self.assertEqual(code, 0 if passed else 1)

    def test_fourier_check_support_at_origin(self):
        """Testing ridgekit fourier-check with a support containing 0"""
        code, _ = self.run_command(
            FourierCheck, ['--activation', 'tanh', '--support', '-1,1'])

        self.assertEqual(code, 1)


class EntryPointTests(RKTestBase):
    """Tests for command lookup."""

    def test_builtin_commands(self):
        """Testing find_entry_point_for_command with built-in commands"""
        self.assertIs(find_entry_point_for_command('rate').load(), Rate)
        self.assertIs(find_entry_point_for_command('eval').load(), Eval)

    def test_unknown_command(self):
        """Testing find_entry_point_for_command with an unknown command"""
        self.assertIsNone(find_entry_point_for_command('no-such-command'))

    def test_commands_subclass_command(self):
        """Testing that every built-in command is a Command"""
        for name in ('audit-spaces', 'eval', 'fourier-check', 'plan',
                     'rate', 'recon', 'sample'):
            command_class = find_entry_point_for_command(name).load()

            self.assertTrue(issubclass(command_class, Command))
            self.assertEqual(command_class.name, name)

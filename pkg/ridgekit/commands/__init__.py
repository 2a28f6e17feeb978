import argparse
import inspect
import json
import logging
import os
import platform
import sys
import time
from importlib import metadata
from shutil import get_terminal_size

import colorama
from texttable import Texttable

from ridgekit import get_version_string
from ridgekit.harness.config import DEFAULTS, ExperimentConfig
from ridgekit.harness.output import write_csv, write_manifest
from ridgekit.utils.errors import ConfigError
from ridgekit.utils.filesystem import (get_home_path, load_config,
                                       load_json_config)


RK_MAIN = 'ridgekit'

ENTRY_POINT_GROUP = 'ridgekit_commands'

#: The commands shipped with ridgekit. These resolve even when the package
#: runs from a source checkout without installed metadata.
BUILTIN_COMMANDS = {
    'audit-spaces': 'ridgekit.commands.audit_spaces:AuditSpaces',
    'eval': 'ridgekit.commands.evaluate:Eval',
    'fourier-check': 'ridgekit.commands.fourier_check:FourierCheck',
    'plan': 'ridgekit.commands.plan:Plan',
    'rate': 'ridgekit.commands.rate:Rate',
    'recon': 'ridgekit.commands.recon:Recon',
    'sample': 'ridgekit.commands.sample:Sample',
}


class CommandExit(Exception):
    def __init__(self, exit_code=0):
        super(CommandExit, self).__init__('Exit with code %s' % exit_code)
        self.exit_code = exit_code


class CommandError(Exception):
    pass


class ParseError(CommandError):
    pass


class SmartHelpFormatter(argparse.HelpFormatter):
    """Smartly formats help text, preserving paragraphs."""

    def _split_lines(self, text, width):
        # NOTE: This depends on overriding _split_lines's behavior, which is
        #       not public API. HelpFormatter offers no other way to get at
        #       the computed width.
        lines = []

        for line in text.splitlines():
            lines += super(SmartHelpFormatter, self)._split_lines(line, width)
            lines.append('')

        return lines[:-1]


def json_object(value):
    """Parse a JSON object given on the command line."""
    try:
        data = json.loads(value)
    except ValueError as e:
        raise argparse.ArgumentTypeError('Invalid JSON: %s' % e)

    if not isinstance(data, dict):
        raise argparse.ArgumentTypeError('Expected a JSON object')

    return data


def int_list(value):
    """Parse a comma-separated list of integers."""
    try:
        return [int(item) for item in value.split(',') if item.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(
            'Expected comma-separated integers, got "%s"' % value)


def int_range(value):
    """Parse an inclusive range ``lo..hi``, or a list of integers."""
    if '..' not in value:
        return int_list(value)

    try:
        lo, hi = (int(item) for item in value.split('..'))
    except ValueError:
        raise argparse.ArgumentTypeError(
            'Expected a range such as "1..3", got "%s"' % value)

    if hi < lo:
        raise argparse.ArgumentTypeError('The range "%s" is empty' % value)

    return list(range(lo, hi + 1))


def float_list(value):
    """Parse a comma-separated list of numbers."""
    try:
        return [float(item) for item in value.split(',') if item.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(
            'Expected comma-separated numbers, got "%s"' % value)


def float_pair(value):
    """Parse two numbers written as ``a,b``."""
    items = float_list(value)

    if len(items) != 2:
        raise argparse.ArgumentTypeError(
            'Expected two comma-separated numbers, got "%s"' % value)

    return tuple(items)


def grid_spec(value):
    """Parse a grid written as ``lo:hi:step`` or as a JSON object."""
    if value.lstrip().startswith('{'):
        return json_object(value)

    try:
        lo, hi, step = (float(item) for item in value.split(':'))
    except ValueError:
        raise argparse.ArgumentTypeError(
            'Expected a grid such as "-3:3:0.25", got "%s"' % value)

    return {'lo': lo, 'hi': hi, 'step': step}


class CommandArgumentParser(argparse.ArgumentParser):
    """An argument parser for option values that begin with a dash.

    argparse reads ``--grid -3:3:0.25`` as two options. Options added with
    ``dash_value=True`` always consume the following argument, which is
    rewritten to ``--grid=-3:3:0.25`` before parsing.
    """

    def parse_known_args(self, args=None, namespace=None):
        if args is None:
            args = sys.argv[1:]

        flags = set()

        for action in self._actions:
            if getattr(action, 'dash_value', False):
                flags.update(action.option_strings)

        joined = []
        args = iter(args)

        for arg in args:
            if arg in flags:
                value = next(args, None)

                if value is not None:
                    arg = '%s=%s' % (arg, value)

            joined.append(arg)

        return super(CommandArgumentParser, self).parse_known_args(
            joined, namespace)


class Option(object):
    """Represents an option for a command.

    The arguments to the constructor should be treated like those to
    argparse's add_argument, with the exception that the keyword argument
    ``config_key`` is also valid. If ``config_key`` is provided, the value
    of that key in :file:`.ridgekitrc` is used as the default. With
    ``dash_value=True``, the option's value may begin with a dash.
    """

    def __init__(self, *opts, **attrs):
        self.opts = opts
        self.attrs = attrs

    def add_to(self, parent, config={}, argv=[]):
        """Adds the option to the parent parser or group.

        If the option maps to a configuration key, this will handle figuring
        out the correct default.
        """
        attrs = self.attrs.copy()

        if 'config_key' in attrs:
            config_key = attrs.pop('config_key')

            if config_key in config:
                attrs['default'] = config[config_key]

        dash_value = attrs.pop('dash_value', False)
        action = parent.add_argument(*self.opts, **attrs)
        action.dash_value = dash_value


class OptionGroup(object):
    """Represents a named group of options.

    This works like argparse's argument groups, but is designed to work with
    our special Option class.
    """

    def __init__(self, name=None, description=None, option_list=[]):
        self.name = name
        self.description = description
        self.option_list = option_list

    def add_to(self, parser, config={}, argv=[]):
        """Adds the group and all its contained options to the parser."""
        group = parser.add_argument_group(self.name, self.description)

        for option in self.option_list:
            option.add_to(group, config, argv)

    def without(self, *dests):
        """Return a copy of the group lacking the options for ``dests``."""
        return OptionGroup(
            name=self.name,
            description=self.description,
            option_list=[option for option in self.option_list
                         if option.attrs.get('dest') not in dests])


class LogLevelFilter(logging.Filter):
    """Filters log messages of a given level.

    Only log messages that have the specified level will be allowed by
    this filter. This prevents propagation of higher level types to lower
    log handlers.
    """

    def __init__(self, level):
        self.level = level

    def filter(self, record):
        return record.levelno == self.level


class Command(object):
    """Base class for ridgekit commands.

    This class will handle retrieving the configuration, and parsing
    command line options.

    ``description`` is a string containing a short description of the
    command which is suitable for display in usage text.

    ``args`` is a string containing the usage text for what arguments the
    command takes.

    ``option_list`` is a list of command line options for the command.
    Each list entry should be an Option or OptionGroup instance.
    """

    name = ''
    author = ''
    description = ''
    args = ''
    option_list = []
    _global_options = [
        Option('-d', '--debug',
               action='store_true',
               dest='debug',
               config_key='DEBUG',
               default=False,
               help='Displays debug output.'),
        Option('--config',
               dest='config_file',
               metavar='FILE',
               default=None,
               help='A JSON object whose keys are option names (as in '
                    '"neurons" or "target_params"). Its values replace the '
                    'defaults of those options. Flags given on the command '
                    'line still win.'),
        Option('-j', '--threads',
               dest='threads',
               type=int,
               metavar='N',
               config_key='THREADS',
               default=None,
               help='The number of worker threads. Defaults to '
                    '$RIDGEKIT_THREADS or the CPU count.'),
    ]

    model_options = OptionGroup(
        name='Model Options',
        description='The target, the activation and the ridgelet profile.',
        option_list=[
            Option('--target',
                   dest='target',
                   metavar='NAME',
                   config_key='TARGET',
                   default=None,
                   help='The target function: gaussian, hermite or zero.'),
            Option('--target-params',
                   dest='target_params',
                   type=json_object,
                   metavar='JSON',
                   default=None,
                   help='Keyword arguments for the target, as a JSON object. '
                        'For example: \'{"sigma": 0.5}\''),
            Option('--activation',
                   dest='activation',
                   metavar='NAME',
                   config_key='ACTIVATION',
                   default=None,
                   help='The activation: sigmoid, tanh, softplus or relu.'),
            Option('-m', '--dim',
                   dest='dim',
                   type=int,
                   metavar='M',
                   default=None,
                   help='The input dimension (1 to 3).'),
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
                   default=None,
                   help='The lower edge of the profile\'s Fourier support.'),
            Option('--zeta2',
                   dest='zeta2',
                   type=float,
                   config_key='ZETA2',
                   default=None,
                   help='The upper edge of the profile\'s Fourier support.'),
        ]
    )

    space_options = OptionGroup(
        name='Function Space Options',
        description='The weighted Sobolev space errors are measured in.',
        option_list=[
            Option('--domain',
                   dest='domain',
                   type=json_object,
                   metavar='JSON',
                   default=None,
                   help='The domain, as {"kind": "full", "radius": R} or '
                        '{"kind": "box", "bounds": [[lo, hi], ...]}.'),
            Option('--weight',
                   dest='weight',
                   type=json_object,
                   metavar='JSON',
                   default=None,
                   help='The one-dimensional weight factor, as '
                        '{"w0": NAME, ...}. NAME is one of gaussian, '
                        'laplace, cauchy or uniform.'),
            Option('-k',
                   dest='k',
                   type=int,
                   default=None,
                   help='The Sobolev order.'),
            Option('-p', '--p',
                   dest='p',
                   type=float,
                   default=None,
                   help='The integrability exponent.'),
            Option('--gamma',
                   dest='gamma',
                   type=float,
                   default=None,
                   help='The polynomial growth exponent.'),
        ]
    )

    output_options = OptionGroup(
        name='Output Options',
        option_list=[
            Option('-o', '--output',
                   dest='output',
                   metavar='DIR',
                   default=None,
                   help='Write the result table and a run manifest into '
                        'this directory.'),
        ]
    )

    def __init__(self):
        self.log = logging.getLogger('ridgekit.%s' % self.name)

    def create_parser(self, config, argv=[]):
        """Create and return the argument parser for this command."""
        parser = CommandArgumentParser(
            prog=RK_MAIN,
            usage=self.usage(),
            add_help=False,
            formatter_class=SmartHelpFormatter)

        for option in self.option_list:
            option.add_to(parser, config, argv)

        for option in self._global_options:
            option.add_to(parser, config, argv)

        return parser

    def usage(self):
        """Return a usage string for the command."""
        usage = '%%(prog)s %s [options] %s' % (self.name, self.args)

        if self.description:
            return '%s\n\n%s' % (usage, self.description)
        else:
            return usage

    def _create_formatter(self, level, fmt):
        """Create a logging formatter for the appropriate logging level.

        When writing to a TTY, the format will be colorized by the colors
        specified in the ``COLOR`` configuration in :file:`.ridgekitrc`.
        Otherwise, the format will not be altered.

        Args:
            level (str):
                The logging level name.

            fmt (str):
                The logging format.

        Returns:
            logging.Formatter:
            The created formatter.
        """
        color = ''
        reset = ''

        if sys.stdout.isatty():
            color_name = self.config['COLOR'].get(level.upper())

            if color_name:
                color = getattr(colorama.Fore, color_name.upper(), '')

                if color:
                    reset = colorama.Fore.RESET

        return logging.Formatter(fmt.format(color=color, reset=reset))

    def init_logging(self):
        """Initializes logging for the command.

        The INFO log handler will just show the text, like a print statement.

        WARNING and higher will show the level name as a prefix, in the form of
        "LEVEL: message".

        If debugging is enabled, a debug log handler will be set up showing
        debug messages in the form of ">>> message", making it easier to
        distinguish between debugging and other messages.
        """
        if sys.stdout.isatty():
            # Colors are only used on TTYs.
            colorama.init()

        root = logging.getLogger()

        if self.options.debug:
            handler = logging.StreamHandler()
            handler.setFormatter(self._create_formatter(
                'DEBUG', '{color}>>>{reset} %(message)s'))
            handler.setLevel(logging.DEBUG)
            handler.addFilter(LogLevelFilter(logging.DEBUG))
            root.addHandler(handler)

            root.setLevel(logging.DEBUG)
        else:
            root.setLevel(logging.INFO)

        # Handler for info messages. We'll treat these like prints.
        handler = logging.StreamHandler()
        handler.setFormatter(self._create_formatter(
            'INFO', '{color}%(message)s{reset}'))

        handler.setLevel(logging.INFO)
        handler.addFilter(LogLevelFilter(logging.INFO))
        root.addHandler(handler)

        # Handlers for warnings, errors, and criticals. They'll show the
        # level prefix and the message.
        levels = (
            ('WARNING', logging.WARNING),
            ('ERROR', logging.ERROR),
            ('CRITICAL', logging.CRITICAL),
        )

        for level_name, level in levels:
            handler = logging.StreamHandler()
            handler.setFormatter(self._create_formatter(
                level_name, '{color}%(levelname)s:{reset} %(message)s'))
            handler.addFilter(LogLevelFilter(level))
            handler.setLevel(level)
            root.addHandler(handler)

        logging.debug('ridgekit %s', get_version_string())
        logging.debug('Python %s', sys.version)
        logging.debug('Running on %s', platform.platform())
        logging.debug('Home = %s', get_home_path())
        logging.debug('Current directory = %s', os.getcwd())

    def _load_option_overrides(self, parser, argv):
        """Return the defaults named by ``--config FILE``, if given.

        Keys must be option destinations of this command. Unknown keys are
        logged and ignored, so one file can serve several commands.
        """
        pre_parser = argparse.ArgumentParser(add_help=False)
        pre_parser.add_argument('--config', dest='config_file', default=None)
        known, _ = pre_parser.parse_known_args(argv[2:])

        if not known.config_file:
            return {}

        try:
            data = load_json_config(known.config_file)
        except ConfigError as e:
            parser.error(str(e))

        dests = set(action.dest for action in parser._actions)
        overrides = {}

        for key, value in data.items():
            if key in dests and key not in ('args', 'config_file'):
                overrides[key] = value
            else:
                self._pending_warnings.append(
                    'Ignoring unknown option "%s" in %s'
                    % (key, known.config_file))

        return overrides

    def create_arg_parser(self, argv):
        """Create and return the argument parser.

        Args:
            argv (list of str):
                A list of command line arguments.

        Returns:
            argparse.ArgumentParser:
            Argument parser for commandline arguments.
        """
        self.config = load_config()
        self._pending_warnings = []
        parser = self.create_parser(self.config, argv)
        parser.add_argument('args', nargs=argparse.REMAINDER)
        parser.set_defaults(**self._load_option_overrides(parser, argv))

        return parser

    def run_from_argv(self, argv):
        """Execute the command using the provided arguments.

        The options and commandline arguments will be parsed from ``argv``
        and the command's ``main`` method will be called.
        """
        parser = self.create_arg_parser(argv)
        self.options = parser.parse_args(argv[2:])

        args = self.options.args

        # Check that the proper number of arguments have been provided.
        params = list(inspect.signature(self.main).parameters.values())
        positional = [param for param in params
                      if param.kind == param.POSITIONAL_OR_KEYWORD]
        maxargs = len(positional)
        minargs = len([param for param in positional
                       if param.default is param.empty])

        if any(param.kind == param.VAR_POSITIONAL for param in params):
            maxargs = None

        if len(args) < minargs or (maxargs is not None and
                                   len(args) > maxargs):
            parser.error('Invalid number of arguments provided')
            sys.exit(1)

        if self.options.threads is not None and self.options.threads < 1:
            parser.error('--threads must be a positive integer')

        self.init_logging()
        logging.debug('Command line: %s', ' '.join(argv))

        for message in self._pending_warnings:
            logging.warning(message)

        try:
            exit_code = self.main(*args) or 0
        except CommandError as e:
            if isinstance(e, ParseError):
                parser.error(e)
            elif self.options.debug:
                raise

            logging.error(e)
            exit_code = 1
        except CommandExit as e:
            exit_code = e.exit_code
        except Exception as e:
            # With --debug, let Python print the stack trace. Otherwise
            # report the exception alone.
            if self.options.debug:
                raise

            logging.critical(e)
            exit_code = 1

        sys.exit(exit_code)

    def show_progress(self):
        """Return whether long-running work should draw a progress bar."""
        return sys.stderr.isatty() and not self.options.debug

    def experiment_config(self, **overrides):
        """Build an experiment configuration from the parsed options.

        Options left unset fall back to the experiment defaults, and
        ``overrides`` replace both. Commands with a ``--truncation`` option
        take its default from the ``QUADRATURE`` dictionary of
        :file:`.ridgekitrc`.

        Raises:
            CommandError:
                The resulting configuration is invalid.
        """
        values = dict(
            (key, getattr(self.options, key))
            for key in DEFAULTS
            if getattr(self.options, key, None) is not None)

        zeta = getattr(self.options, 'zeta', None)

        if zeta is not None:
            if len(zeta) != 2:
                raise CommandError('zeta must hold two numbers, got %r'
                                   % (zeta,))

            values['zeta1'], values['zeta2'] = (float(z) for z in zeta)

        if (hasattr(self.options, 'truncation') and
            'truncation' not in values and
            self.config['QUADRATURE']):
            values['truncation'] = dict(self.config['QUADRATURE'])

        values.update(overrides)

        try:
            return ExperimentConfig(**values)
        except ValueError as e:
            raise CommandError(str(e))

    def tabulate(self, header, rows):
        """Print rows as a table sized to the terminal."""
        table = Texttable(get_terminal_size().columns)
        table.header(header)

        for row in rows:
            table.add_row(row)

        print(table.draw())

    def report_checks(self, checks, show_table=True):
        """Log failed checks and return the exit code.

        With ``show_table``, every check is printed first.

        Returns:
            int:
            0 if every check passed, 1 otherwise.
        """
        if show_table:
            self.tabulate(('Check', 'Result'),
                          [(name, 'pass' if ok else 'FAIL')
                           for name, ok in sorted(checks.items())])

        failed = sorted(name for name, ok in checks.items() if not ok)

        if failed:
            logging.error('%d check(s) failed: %s', len(failed),
                          ', '.join(failed))
            return 1

        return 0

    def write_results(self, result, table_name, cfg, started, extra=None):
        """Write the CSV table and manifest if ``--output`` was given."""
        directory = self.options.output

        if not directory:
            return

        table_path = os.path.join(directory, table_name)
        write_csv(result.rows, result.columns, table_path)

        manifest = dict(extra or {}, summary=result.summary,
                        table=table_name)
        write_manifest(os.path.join(directory, 'manifest.json'),
                       cfg.as_dict() if cfg is not None else {},
                       cfg.seeds if cfg is not None else [],
                       get_version_string(),
                       time.time() - started,
                       result.checks,
                       extra=manifest)

        logging.info('Wrote %s', table_path)

    def main(self, *args):
        """The main logic of the command.

        This method should be overridden to implement the commands
        functionality.
        """
        raise NotImplementedError()


def _builtin_entry_point(command_name):
    value = BUILTIN_COMMANDS.get(command_name)

    if value is None:
        return None

    return metadata.EntryPoint(name=command_name, value=value,
                               group=ENTRY_POINT_GROUP)


def iter_command_entry_points():
    """Yield the installed third-party command entry points."""
    try:
        return iter(metadata.entry_points(group=ENTRY_POINT_GROUP))
    except TypeError:
        # Python < 3.10 returns a dict of groups.
        return iter(metadata.entry_points().get(ENTRY_POINT_GROUP, []))


def find_entry_point_for_command(command_name):
    """Return an entry point for the given ridgekit command.

    Built-in commands are looked up first, then third-party commands
    registered in the ``ridgekit_commands`` entry point group. If no entry
    point is found, None is returned.
    """
    entry_point = _builtin_entry_point(command_name)

    if entry_point is None:
        entry_point = next(
            (ep for ep in iter_command_entry_points()
             if ep.name == command_name),
            None)

    return entry_point


def get_command_names():
    """Return the sorted names of every available command."""
    names = set(BUILTIN_COMMANDS)
    names.update(ep.name for ep in iter_command_entry_points())

    return sorted(names)

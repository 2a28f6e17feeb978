import json
import logging
import os

from ridgekit.utils.errors import ConfigError


CONFIG_FILE = '.ridgekitrc'

builtin = {}

logger = logging.getLogger(__name__)


def _load_python_file(filename, config):
    with open(filename) as f:
        exec(compile(f.read(), filename, 'exec'), config)
        return config


def ensure_parent_dir(path):
    """Create the directory that will contain ``path``, if needed."""
    parent = os.path.dirname(os.path.abspath(path))

    if not os.path.isdir(parent):
        os.makedirs(parent)


def walk_parents(path):
    """Walks up the tree to the root directory."""
    while os.path.splitdrive(path)[1] != os.sep:
        yield path
        path = os.path.dirname(path)


def get_home_path():
    """Retrieve the homepath."""
    if 'HOME' in os.environ:
        return os.environ['HOME']
    elif 'APPDATA' in os.environ:
        return os.environ['APPDATA']
    else:
        return ''


def get_config_paths():
    """Return the paths to each :file:`.ridgekitrc` influencing the cwd.

    Files listed earlier take precedence over files listed later. Paths in
    :envvar:`$RIDGEKIT_CONFIG_PATH` come first, then the current directory
    and its parents, then the user's home directory.
    """
    config_paths = []

    for path in os.environ.get('RIDGEKIT_CONFIG_PATH', '').split(os.pathsep):
        if not path:
            continue

        filename = os.path.realpath(os.path.join(path, CONFIG_FILE))

        if os.path.exists(filename) and filename not in config_paths:
            config_paths.append(filename)

    for path in walk_parents(os.getcwd()):
        filename = os.path.realpath(os.path.join(path, CONFIG_FILE))

        if os.path.exists(filename) and filename not in config_paths:
            config_paths.append(filename)

    home_config_path = os.path.realpath(os.path.join(get_home_path(),
                                                     CONFIG_FILE))

    if (os.path.exists(home_config_path) and
        home_config_path not in config_paths):
        config_paths.append(home_config_path)

    return config_paths


def parse_config_file(filename):
    """Parse a .ridgekitrc file.

    The file is Python source. Every top-level name it assigns becomes a
    configuration key.

    Args:
        filename (str):
            The full path to the file.

    Returns:
        dict:
        The settings defined in the file.

    Raises:
        ridgekit.utils.errors.ConfigError:
            The file could not be compiled.
    """
    config = {
        'COLOR': {},
        'QUADRATURE': {},
    }

    try:
        config = _load_python_file(filename, config)
    except SyntaxError as e:
        raise ConfigError('Syntax error in config file: %s\n'
                          'Line %i offset %i\n'
                          % (filename, e.lineno, e.offset))

    return dict((k, config[k])
                for k in set(config.keys()) - set(builtin.keys()))


def load_config():
    """Load configuration from .ridgekitrc files.

    This will read all of the .ridgekitrc files influencing the cwd and
    return a dictionary containing the configuration.
    """
    nested_config = {
        'COLOR': {
            'INFO': None,
            'DEBUG': None,
            'WARNING': 'yellow',
            'ERROR': 'red',
            'CRITICAL': 'red',
        },
        'QUADRATURE': {},
    }
    config = {}

    for filename in reversed(get_config_paths()):
        logger.debug('Reading configuration from %s', filename)
        parsed_config = parse_config_file(filename)

        for key in nested_config:
            nested_config[key].update(parsed_config.pop(key, {}))

        config.update(parsed_config)

    config.update(nested_config)

    return config


def load_json_config(filename):
    """Load a JSON object of option overrides.

    Args:
        filename (str):
            The path to the JSON file.

    Returns:
        dict:
        The decoded object.

    Raises:
        ridgekit.utils.errors.ConfigError:
            The file is missing, is not valid JSON, or is not an object.
    """
    try:
        with open(filename) as fp:
            data = json.load(fp)
    except IOError as e:
        raise ConfigError('Unable to read config file %s: %s' % (filename, e))
    except ValueError as e:
        raise ConfigError('Invalid JSON in config file %s: %s'
                          % (filename, e))

    if not isinstance(data, dict):
        raise ConfigError('Config file %s must contain a JSON object'
                          % filename)

    return data


# This extracts a dictionary of the built-in globals in order to have a clean
# dictionary of settings, consisting of only what has been specified in the
# config file.
exec('True', builtin)

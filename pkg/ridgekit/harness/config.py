"""Experiment configuration."""

import copy

import numpy as np

from ridgekit.activations.catalog import get_activation
from ridgekit.errors import InputError
from ridgekit.harness.errors import InvalidConfig
from ridgekit.ridgelet.admissibility import build_pair
from ridgekit.ridgelet.profile import build_profile
from ridgekit.ridgelet.reconstruction import Truncation
from ridgekit.spaces.domains import Domain, WeightSpec
from ridgekit.spaces.targets import make_target


#: Largest input dimension any experiment supports.
MAX_EXPERIMENT_DIM = 3

#: Minimum number of seeds for a rate experiment.
MIN_RATE_SEEDS = 3


DEFAULTS = {
    'target': 'gaussian',
    'target_params': {},
    'activation': 'tanh',
    'dim': 1,
    'zeta1': 1.0,
    'zeta2': 2.0,
    'domain': {'kind': 'full', 'radius': 8.0},
    'weight': {'w0': 'gaussian'},
    'k': 0,
    'p': 2.0,
    'gamma': 0.0,
    'neurons': [16, 64, 256, 1024, 4096],
    'seeds': [0, 1, 2, 3, 4],
    'sobolev_nodes': None,
    'rate_constant': None,
    'grid': {'lo': -3.0, 'hi': 3.0, 'step': 0.25},
    'truncation': {},
    'tolerance': 0.02,
    'output': None,
}


class ExperimentConfig(object):
    """A validated experiment configuration.

    Keys are those of :py:data:`DEFAULTS`. Unknown keys are rejected so a
    typo in a JSON config file does not silently fall back to a default.

    Attributes:
        data (dict):
            The full configuration, defaults included.
    """

    def __init__(self, **options):
        unknown = sorted(set(options) - set(DEFAULTS))

        if unknown:
            raise InvalidConfig('Unknown configuration keys: %s'
                                % ', '.join(unknown))

        data = copy.deepcopy(DEFAULTS)
        data.update(copy.deepcopy(options))
        self.data = data
        self._validate()

    @classmethod
    def from_dict(cls, data):
        if not isinstance(data, dict):
            raise InvalidConfig('An experiment configuration must be a '
                                'JSON object')

        return cls(**data)

    def __getattr__(self, name):
        try:
            return self.__dict__['data'][name]
        except KeyError:
            raise AttributeError(name)

    def _validate(self):
        data = self.data

        try:
            spec = get_activation(data['activation'])
        except InputError as e:
            raise InvalidConfig(str(e))

        m = data['dim']

        if int(m) != m or not 1 <= m <= MAX_EXPERIMENT_DIM:
            raise InvalidConfig('Experiments support dimensions 1 to %d, '
                                'not %r' % (MAX_EXPERIMENT_DIM, m))

        if data['gamma'] < spec.gamma_min:
            raise InvalidConfig('gamma=%g is below the minimum %g for %s'
                                % (data['gamma'], spec.gamma_min,
                                   spec.name))

        if int(data['k']) != data['k'] or data['k'] < 0:
            raise InvalidConfig('k must be a non-negative integer')

        if data['k'] > spec.k_max:
            raise InvalidConfig('k=%d exceeds the derivative order %s '
                                'available for %s'
                                % (data['k'], spec.k_max, spec.name))

        if data['p'] < 1.0:
            raise InvalidConfig('p must be at least 1')

        neurons = data['neurons']

        if (not neurons or
            any(int(n) != n or n < 1 for n in neurons) or
            any(b <= a for a, b in zip(neurons, neurons[1:]))):
            raise InvalidConfig('The neuron grid must be a strictly '
                                'increasing list of positive integers')

        if not data['seeds'] or any(int(seed) != seed or seed < 0
                                    for seed in data['seeds']):
            raise InvalidConfig('Seeds must be non-negative integers')

        if len(set(data['seeds'])) != len(data['seeds']):
            raise InvalidConfig('Seeds must be distinct')

        grid = data['grid']

        if (set(grid) != set(['lo', 'hi', 'step']) or
            not grid['lo'] < grid['hi'] or grid['step'] <= 0.0):
            raise InvalidConfig('The grid needs lo < hi and step > 0')

        # Build the parts that validate themselves.
        try:
            self.domain_spec()
            self.weight_spec()
            self.truncation_spec()
            self.target_function()
        except InputError as e:
            raise InvalidConfig(str(e))

    def validate_for_rates(self):
        """Check the extra requirements of a rate experiment."""
        if len(self.data['seeds']) < MIN_RATE_SEEDS:
            raise InvalidConfig('Rate experiments need at least %d seeds'
                                % MIN_RATE_SEEDS)

    def domain_spec(self):
        domain = self.data['domain']
        m = self.data['dim']

        if domain.get('kind', 'full') == 'full':
            return Domain.full_space(m, domain.get('radius', 8.0))

        bounds = domain.get('bounds')

        if bounds is None or len(bounds) != m:
            raise InvalidConfig('A box domain needs %d (lo, hi) pairs' % m)

        return Domain.box(bounds)

    def weight_spec(self):
        params = dict(self.data['weight'])
        w0 = params.pop('w0', 'gaussian')

        return WeightSpec(w0, gamma=self.data['gamma'], p=self.data['p'],
                          **params)

    def truncation_spec(self):
        try:
            return Truncation(**self.data['truncation'])
        except TypeError as e:
            raise InvalidConfig('Invalid truncation settings: %s' % e)

    def target_function(self):
        return make_target(self.data['target'], self.data['dim'],
                           **self.data['target_params'])

    def profile(self):
        return build_profile(self.data['zeta1'], self.data['zeta2'])

    def pair(self):
        return build_pair(self.profile(), self.data['activation'],
                          self.data['dim'])

    def grid_points(self):
        """Return the reconstruction grid, shaped ``(n, m)``."""
        grid = self.data['grid']
        count = int(round((grid['hi'] - grid['lo']) / grid['step'])) + 1
        axis = grid['lo'] + grid['step'] * np.arange(count)
        axes = np.meshgrid(*([axis] * self.data['dim']), indexing='ij')

        return np.stack([values.ravel() for values in axes], axis=-1)

    def as_dict(self):
        return copy.deepcopy(self.data)

    def __repr__(self):
        return '<ExperimentConfig %s/%s m=%d>' % (
            self.data['target'], self.data['activation'], self.data['dim'])

"""Single-hidden-layer networks ``φ(u) = Σ_n y_n ρ(a_nᵀu - b_n)``."""

import numpy as np

from ridgekit.activations.catalog import get_activation
from ridgekit.errors import InvalidInput
from ridgekit.spaces.targets import LinearCombination, as_points


#: Points evaluated per block, bounding the ``(points, neurons)`` buffer.
POINT_BLOCK = 2048


def _frozen(values, name, ndim):
    try:
        values = np.array(values, dtype=float)
    except (TypeError, ValueError):
        raise InvalidInput('Network %s must be numeric' % name)

    if values.ndim != ndim:
        raise InvalidInput('Network %s must have %d dimension(s), got shape '
                           '%s' % (name, ndim, values.shape))

    if not np.all(np.isfinite(values)):
        raise InvalidInput('Network %s must be finite' % name)

    values.setflags(write=False)

    return values


class Network(object):
    """An immutable single-hidden-layer network.

    Attributes:
        activation (ridgekit.activations.catalog.ActivationSpec):
            The activation ρ.

        readouts (numpy.ndarray):
            The readouts ``y_n``, shaped ``(N, d)``.

        directions (numpy.ndarray):
            The inner weights ``a_n``, shaped ``(N, m)``.

        biases (numpy.ndarray):
            The biases ``b_n``, shaped ``(N,)``.
    """

    max_fourier_order = -1

    def __init__(self, activation, readouts, directions, biases):
        self.activation = get_activation(activation)
        self.readouts = _frozen(readouts, 'readouts', 2)
        self.directions = _frozen(directions, 'directions', 2)
        self.biases = _frozen(biases, 'biases', 1)

        count = len(self.biases)

        if count < 1:
            raise InvalidInput('A network needs at least one neuron')

        if len(self.readouts) != count or len(self.directions) != count:
            raise InvalidInput(
                'Inconsistent neuron counts: %d readouts, %d directions, '
                '%d biases'
                % (len(self.readouts), len(self.directions), count))

        if self.m < 1 or self.d < 1:
            raise InvalidInput('Network dimensions must be positive')

    @property
    def m(self):
        return self.directions.shape[1]

    @property
    def d(self):
        return self.readouts.shape[1]

    @property
    def size(self):
        return len(self.biases)

    dim_in = m
    dim_out = d

    @property
    def max_partial_order(self):
        return self.activation.k_max

    @property
    def is_zero(self):
        return not np.any(self.readouts)

    def eval(self, u):
        return self.partial_eval((0,) * self.m, u)

    __call__ = eval

    def partial_eval(self, alpha, u):
        """Return ``Σ_n y_n ρ^(|α|)(a_nᵀu - b_n) a_n^α``.

        Raises:
            ridgekit.activations.errors.UnsupportedDerivative:
                ``|α|`` exceeds the activation's ``k_max``.

            ridgekit.errors.InvalidInput:
                ``α`` or the points do not match the input dimension.
        """
        alpha = tuple(int(order) for order in np.atleast_1d(alpha))

        if len(alpha) != self.m or min(alpha) < 0:
            raise InvalidInput('Multi-index %r does not fit dimension %d'
                               % (alpha, self.m))

        order = sum(alpha)
        self.activation.check_order(order)

        points, single = as_points(u, self.m)
        readouts = self.readouts * np.prod(
            self.directions ** np.asarray(alpha), axis=1)[:, None]
        out = np.empty((len(points), self.d))

        for start in range(0, len(points), POINT_BLOCK):
            block = points[start:start + POINT_BLOCK]
            pre = block @ self.directions.T - self.biases
            out[start:start + POINT_BLOCK] = (
                self.activation.deriv_eval(order, pre) @ readouts)

        return out[0] if single else out

    def scaled(self, factor):
        """Return the network with every readout multiplied by ``factor``."""
        return Network(self.activation, float(factor) * self.readouts,
                       self.directions, self.biases)

    def as_dict(self):
        return {
            'name': 'network',
            'activation': self.activation.name,
            'dim_in': self.m,
            'dim_out': self.d,
            'neurons': self.size,
        }

    def __add__(self, other):
        if isinstance(other, Network):
            return concatenate([self, other])

        return LinearCombination([(1.0, self), (1.0, other)])

    def __sub__(self, other):
        if isinstance(other, Network):
            return concatenate([self, other.scaled(-1.0)])

        return LinearCombination([(1.0, self), (-1.0, other)])

    def __mul__(self, factor):
        return self.scaled(factor)

    __rmul__ = __mul__

    def __neg__(self):
        return self.scaled(-1.0)

    def __eq__(self, other):
        return (isinstance(other, Network) and
                self.activation.name == other.activation.name and
                np.array_equal(self.readouts, other.readouts) and
                np.array_equal(self.directions, other.directions) and
                np.array_equal(self.biases, other.biases))

    def __ne__(self, other):
        return not self == other

    __hash__ = None

    def __repr__(self):
        return '<Network %s m=%d d=%d neurons=%d>' % (
            self.activation.name, self.m, self.d, self.size)


def concatenate(networks):
    """Return the network whose neurons are those of all ``networks``.

    Its value is the sum of their values.

    Raises:
        ridgekit.errors.InvalidInput:
            The networks differ in activation or dimensions.
    """
    networks = list(networks)

    if not networks:
        raise InvalidInput('Cannot concatenate an empty list of networks')

    first = networks[0]

    for net in networks[1:]:
        if (net.activation.name, net.m, net.d) != \
           (first.activation.name, first.m, first.d):
            raise InvalidInput('Cannot concatenate %r and %r' % (first, net))

    return Network(
        first.activation,
        np.concatenate([net.readouts for net in networks]),
        np.concatenate([net.directions for net in networks]),
        np.concatenate([net.biases for net in networks]))


def network_eval(net, u):
    """Return ``φ(u)``, shaped ``(d,)`` for one point or ``(n, d)``."""
    return net.eval(u)


def network_partial(net, alpha, u):
    """Return ``∂_α φ(u)``."""
    return net.partial_eval(alpha, u)

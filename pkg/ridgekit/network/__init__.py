"""Single-hidden-layer networks and their file format."""

from ridgekit.network.codec import dump, dumps, load, loads
from ridgekit.network.network import (Network, concatenate, network_eval,
                                      network_partial)


__all__ = [
    'Network',
    'concatenate',
    'dump',
    'dumps',
    'load',
    'loads',
    'network_eval',
    'network_partial',
]

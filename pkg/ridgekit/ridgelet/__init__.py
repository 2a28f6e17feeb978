"""Ridgelet profiles, admissibility, transforms and reconstruction."""

from ridgekit.ridgelet.admissibility import (AdmissiblePair,
                                             admissibility_constant,
                                             admissibility_integral,
                                             admissibility_lower_bound,
                                             build_pair)
from ridgekit.ridgelet.profile import (RidgeletProfile, build_profile,
                                       moment)
from ridgekit.ridgelet.reconstruction import (Reconstructor, Truncation,
                                              reconstruct)
from ridgekit.ridgelet.sphere import sphere_nodes
from ridgekit.ridgelet.transform import (DirectQuadrature,
                                         ridgelet_coefficient,
                                         ridgelet_transform_direct,
                                         ridgelet_transform_slice)


__all__ = [
    'AdmissiblePair',
    'DirectQuadrature',
    'Reconstructor',
    'RidgeletProfile',
    'Truncation',
    'admissibility_constant',
    'admissibility_integral',
    'admissibility_lower_bound',
    'build_pair',
    'build_profile',
    'moment',
    'reconstruct',
    'ridgelet_coefficient',
    'ridgelet_transform_direct',
    'ridgelet_transform_slice',
    'sphere_nodes',
]

"""Domains, weights, targets and the weighted norm engines."""

from ridgekit.spaces.barron import (BarronQuadrature, barron_fourier_bound,
                                    barron_norm_estimate)
from ridgekit.spaces.domains import Domain, WeightSpec
from ridgekit.spaces.norms import (product_weight_bound, weight_constant,
                                   weighted_ck_norm, weighted_sobolev_norm)
from ridgekit.spaces.targets import (GaussianTarget, HermiteGaussianTarget,
                                     LinearCombination, PolynomialTarget,
                                     StackedTarget, TargetFunction,
                                     ZeroTarget, make_target, multi_indices)


__all__ = [
    'BarronQuadrature',
    'Domain',
    'GaussianTarget',
    'HermiteGaussianTarget',
    'LinearCombination',
    'PolynomialTarget',
    'StackedTarget',
    'TargetFunction',
    'WeightSpec',
    'ZeroTarget',
    'barron_fourier_bound',
    'barron_norm_estimate',
    'make_target',
    'multi_indices',
    'product_weight_bound',
    'weight_constant',
    'weighted_ck_norm',
    'weighted_sobolev_norm',
]

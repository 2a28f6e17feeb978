"""Activation functions, their growth norms and Fourier densities."""

from ridgekit.activations.catalog import (ACTIVATIONS, ActivationSpec,
                                          activation_eval, fourier_density,
                                          get_activation, growth_norm)
from ridgekit.activations.fourier import (BumpTestFunction,
                                          PairingQuadrature,
                                          default_test_functions,
                                          pairing_check,
                                          zero_test_function)


__all__ = [
    'ACTIVATIONS',
    'ActivationSpec',
    'BumpTestFunction',
    'PairingQuadrature',
    'activation_eval',
    'default_test_functions',
    'fourier_density',
    'get_activation',
    'growth_norm',
    'pairing_check',
    'zero_test_function',
]

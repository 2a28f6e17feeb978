"""Truncated reconstruction of a target from its ridgelet transform.

For an admissible pair with constant ``C``::

    g(u) = (1/C) ∫∫ 𝔯g(a, b) ρ(aᵀu - b) ‖a‖⁻¹ db da

In polar form ``a = v/s`` with ``v`` on the sphere and the activation
argument ``z = aᵀu - b`` this reads::

    g(u) = (1/C) ∫ dv ∫ ds s^(-m-1) ∫ dz K(v/s, vᵀu/s - z) ρ(z)

where ``K = 𝔯g / ‖a‖``. The ``z``-integral over ``[-t_max, t_max]`` only
touches ``exp(-iηz)``, so it is done once per pair. Scales in
``[δ1, δ2]`` use a log-spaced Gauss-Legendre rule; scales beyond ``δ2``
use the activation's Fourier density, which is the exact ``z``-integral.
"""

import logging

import numpy as np

from ridgekit.errors import InvalidInput
from ridgekit.ridgelet.errors import TruncationWarning
from ridgekit.ridgelet.sphere import sphere_nodes
from ridgekit.ridgelet.transform import fourier_evaluator
from ridgekit.utils.parallel import ordered_map, pairwise_sum
from ridgekit.utils.quadrature import (composite_gauss_legendre,
                                       gauss_legendre)


logger = logging.getLogger(__name__)


#: Imaginary residue, relative to the result, that triggers a warning.
IMAG_RESIDUE_THRESHOLD = 0.05

#: Evaluation points handled together.
POINT_BLOCK = 32


class Truncation(object):
    """Truncation and quadrature settings for :py:func:`reconstruct`.

    Attributes:
        delta1 (float):
            Smallest scale ``s = 1/‖a‖``.

        delta2 (float):
            Largest near-field scale.

        t_max (float):
            Half-width of the activation argument window.

        sphere_nodes (int):
            Sphere node count, or ``None`` for the default per dimension.

        scale_nodes (int):
            Gauss-Legendre nodes in ``log s`` on ``[δ1, δ2]``.

        z_panels (int):
            Panels of the composite rule on ``[-t_max, t_max]``.

        z_order (int):
            Nodes per panel.

        far_field_nodes (int):
            Gauss-Legendre nodes for scales beyond ``δ2``.
    """

    def __init__(self, delta1=0.05, delta2=40.0, t_max=40.0,
                 sphere_nodes=None, scale_nodes=64, z_panels=80, z_order=8,
                 far_field_nodes=32):
        if not (0.0 < delta1 < delta2) or t_max <= 0.0:
            raise InvalidInput('Truncation needs 0 < delta1 < delta2 and '
                               't_max > 0')

        self.delta1 = float(delta1)
        self.delta2 = float(delta2)
        self.t_max = float(t_max)
        self.sphere_nodes = sphere_nodes
        self.scale_nodes = int(scale_nodes)
        self.z_panels = int(z_panels)
        self.z_order = int(z_order)
        self.far_field_nodes = int(far_field_nodes)

    def refined(self):
        """Return settings with δ1 halved and δ2, t_max doubled."""
        return Truncation(delta1=self.delta1 / 2.0,
                          delta2=self.delta2 * 2.0,
                          t_max=self.t_max * 2.0,
                          sphere_nodes=self.sphere_nodes,
                          scale_nodes=self.scale_nodes + 16,
                          z_panels=self.z_panels * 2,
                          z_order=self.z_order,
                          far_field_nodes=self.far_field_nodes)

    def as_dict(self):
        return {
            'delta1': self.delta1,
            'delta2': self.delta2,
            't_max': self.t_max,
            'sphere_nodes': self.sphere_nodes,
            'scale_nodes': self.scale_nodes,
            'z_panels': self.z_panels,
            'z_order': self.z_order,
            'far_field_nodes': self.far_field_nodes,
        }


class ReconstructionResult(object):
    """The outcome of :py:func:`reconstruct` at one point.

    Attributes:
        value (numpy.ndarray):
            The real reconstruction, of length ``d``.

        imag_residue (float):
            The largest modulus of the discarded imaginary parts.

        far_field (numpy.ndarray):
            The real contribution of scales beyond ``δ2``.

        warnings (list of str):
            Truncation diagnostics above threshold.
    """

    def __init__(self, value, imag_residue, far_field, warnings):
        self.value = value
        self.imag_residue = imag_residue
        self.far_field = far_field
        self.warnings = warnings


class Reconstructor(object):
    """Reconstruction for one pair and truncation, reusable across targets.

    The truncated activation transform on ``[-t_max, t_max]`` and the
    quadrature nodes are computed once.
    """

    def __init__(self, pair, trunc=None):
        if trunc is None:
            trunc = Truncation()

        self.pair = pair
        self.trunc = trunc

        profile = pair.profile
        eta = profile.inverse_nodes
        m = pair.m

        z, z_weights = composite_gauss_legendre(
            -trunc.t_max, trunc.t_max, trunc.z_panels, trunc.z_order)
        activation_window = (z_weights * pair.activation(z)) @ np.exp(
            -1j * np.outer(z, eta))

        self.directions, self.direction_weights = sphere_nodes(
            m, trunc.sphere_nodes)

        # Near field: x = 1/s with ds = s d(log s).
        log_s, log_weights = gauss_legendre(
            trunc.scale_nodes, np.log(trunc.delta1), np.log(trunc.delta2))
        s = np.exp(log_s)
        self.near_scales = 1.0 / s
        self.near_weights = log_weights * s ** (-m)
        self.near_coefficients = (profile.inverse_weights *
                                  activation_window / pair.constant)

        # Far field: x = r = 1/s on (0, 1/δ2), measure r^(m-1) dr.
        r, r_weights = gauss_legendre(trunc.far_field_nodes, 0.0,
                                      1.0 / trunc.delta2)
        self.far_scales = r
        self.far_weights = r_weights * r ** (m - 1)
        self.far_coefficients = (profile.inverse_weights *
                                 pair.activation.fourier_density(eta) /
                                 pair.constant)

    def _accumulate(self, g_hat, U, scales, scale_weights, coefficients,
                    workers):
        eta = self.pair.profile.inverse_nodes

        def direction_term(index):
            v = self.directions[index]
            freq = scales[:, None] * eta[None, :]
            points = freq.reshape(-1, 1) * v[None, :]
            g_values = np.asarray(g_hat(points)).reshape(
                len(scales), len(eta), -1)
            projected = U @ v
            phase = np.exp(1j * projected[:, None, None] * freq[None, :, :])
            kernel = (scale_weights[:, None] * coefficients[None, :] *
                      phase)

            return (self.direction_weights[index] *
                    np.einsum('psj,sjd->pd', kernel, g_values))

        return pairwise_sum(ordered_map(direction_term,
                                        range(len(self.directions)),
                                        workers=workers))

    def evaluate(self, g, U, workers=None):
        """Return reconstructions at each row of ``U``.

        Returns:
            list of ReconstructionResult:
            One result per point.
        """
        U = np.atleast_2d(np.asarray(U, dtype=float))

        if U.shape[1] != self.pair.m:
            raise InvalidInput('Points have dimension %d, expected %d'
                               % (U.shape[1], self.pair.m))

        g_hat = fourier_evaluator(g)
        near = []
        far = []

        for start in range(0, len(U), POINT_BLOCK):
            block = U[start:start + POINT_BLOCK]
            near.append(self._accumulate(
                g_hat, block, self.near_scales, self.near_weights,
                self.near_coefficients, workers))
            far.append(self._accumulate(
                g_hat, block, self.far_scales, self.far_weights,
                self.far_coefficients, workers))

        far = np.concatenate(far, axis=0)
        total = np.concatenate(near, axis=0) + far

        results = []

        for point, value, far_value in zip(U, total, far):
            residue = float(np.max(np.abs(value.imag), initial=0.0))
            magnitude = float(np.max(np.abs(value.real), initial=0.0))
            warnings = []

            if residue > IMAG_RESIDUE_THRESHOLD * magnitude + 1e-12:
                message = ('Imaginary residue %.3g exceeds %g of the '
                           'reconstruction %.3g at u=%s'
                           % (residue, IMAG_RESIDUE_THRESHOLD, magnitude,
                              point.tolist()))
                logger.warning('%s: %s', TruncationWarning.__name__, message)
                warnings.append(message)

            results.append(ReconstructionResult(
                value=value.real.copy(),
                imag_residue=residue,
                far_field=far_value.real.copy(),
                warnings=warnings))

        return results


def reconstruct(pair, g, u, trunc=None):
    """Return the truncated reconstruction of ``g`` at ``u``.

    Args:
        pair (ridgekit.ridgelet.admissibility.AdmissiblePair):
            The admissible pair.

        g (ridgekit.spaces.targets.TargetFunction):
            The target. Only its Fourier transform is used.

        u (numpy.ndarray):
            The evaluation point, of length ``m``.

        trunc (Truncation, optional):
            Truncation settings.

    Returns:
        ReconstructionResult:
        The real reconstruction with its diagnostics.
    """
    u = np.atleast_1d(np.asarray(u, dtype=float))

    return Reconstructor(pair, trunc).evaluate(g, u[None, :])[0]

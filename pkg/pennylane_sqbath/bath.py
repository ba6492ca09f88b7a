# Copyright 2024 Xanadu Quantum Technologies Inc.

# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at

#     http://www.apache.org/licenses/LICENSE-2.0

# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
r"""
Squeezed thermal bath
=====================

.. currentmodule:: pennylane_sqbath.bath

Translates the physical parameters of two dipole-coupled qubits in a
squeezed thermal reservoir into the generator of their master equation.

Units are natural: :math:`\hbar = k_B = \omega_0 = 1`, rates in units of the
single-qubit decay rate and distances in units of the resonant wavelength.

.. autosummary::
   :nosignatures:

   BathParams
   BathCoefficients
   Liouvillian
   planck_occupation
   squeeze_coefficients
   collective_shift
   collective_decay
   dressed_hamiltonian
   bath_coefficients
   assemble_liouvillian
   build_liouvillian

Code details
~~~~~~~~~~~~
"""
import dataclasses
import logging
import math
import warnings
from dataclasses import dataclass

import numpy as np

from .exceptions import CollectiveShiftWarning
from .linalg import IDENTITY, PAULI_Z, SIGMA_MINUS, SIGMA_PLUS, kron

log = logging.getLogger(__name__)

#: Below this value of :math:`x = k_0 r_{12}` the closed forms lose accuracy to cancellation.
SERIES_THRESHOLD = 1e-2

#: Exponent above which the Planck occupation underflows to zero.
_MAX_EXPONENT = 700.0

# two-qubit lowering/raising operators, qubit A leftmost
S_PLUS = (kron(SIGMA_PLUS, IDENTITY), kron(IDENTITY, SIGMA_PLUS))
S_MINUS = (kron(SIGMA_MINUS, IDENTITY), kron(IDENTITY, SIGMA_MINUS))
S_Z = (kron(0.5 * PAULI_Z, IDENTITY), kron(IDENTITY, 0.5 * PAULI_Z))


@dataclass(frozen=True)
class BathParams:
    """Physical knobs of the two-qubit squeezed-bath model.

    Keyword Args:
        temperature (float): bath temperature :math:`T > 0`
        squeeze (float): squeezing magnitude :math:`r \\geq 0`
        phi (float): squeezing phase in radians
        gamma1 (float): spontaneous emission rate of qubit A
        gamma2 (float): spontaneous emission rate of qubit B
        r12 (float): interqubit distance in units of the resonant wavelength
        mu_dot_rhat (float): cosine between the dipole moments and the separation axis
        omega1 (float): transition frequency of qubit A
        omega2 (float): transition frequency of qubit B
        k0_scale (float): factor turning ``r12`` into :math:`x = k_0 r_{12}`
        r12_min (float): distance at or below which the collective shift is flagged
    """

    temperature: float = 1.0
    squeeze: float = 0.35
    phi: float = 0.0
    gamma1: float = 1.0
    gamma2: float = 1.0
    r12: float = 0.1
    mu_dot_rhat: float = 0.0
    omega1: float = 1.0
    omega2: float = 1.0
    k0_scale: float = 2 * math.pi
    r12_min: float = 0.01

    def __post_init__(self):
        if not self.temperature > 0:
            raise ValueError("Bath temperature must be positive, got {}.".format(self.temperature))
        if not self.squeeze >= 0:
            raise ValueError("Squeezing magnitude must be non-negative, got {}.".format(self.squeeze))
        if not (self.gamma1 > 0 and self.gamma2 > 0):
            raise ValueError(
                "Decay rates must be positive, got gamma1={}, gamma2={}.".format(
                    self.gamma1, self.gamma2
                )
            )
        if not self.r12 > 0:
            raise ValueError("Interqubit distance must be positive, got {}.".format(self.r12))
        if not abs(self.mu_dot_rhat) <= 1:
            raise ValueError(
                "mu_dot_rhat is a cosine and must lie in [-1, 1], got {}.".format(self.mu_dot_rhat)
            )
        if not self.k0_scale > 0:
            raise ValueError("k0_scale must be positive, got {}.".format(self.k0_scale))

    @property
    def omega0(self):
        """Mean transition frequency :math:`(\\omega_1 + \\omega_2)/2`."""
        return 0.5 * (self.omega1 + self.omega2)

    @property
    def x(self):
        """Dimensionless separation :math:`k_0 r_{12}`."""
        return self.k0_scale * self.r12

    def replace(self, **changes):
        """Copy of these parameters with some fields changed."""
        return dataclasses.replace(self, **changes)


@dataclass(frozen=True, eq=False)
class BathCoefficients:
    """Coefficients entering the master equation."""

    n_th: float
    n_tilde: float
    m_tilde: complex
    gamma: np.ndarray
    omega12: float


@dataclass(frozen=True, eq=False)
class Liouvillian:
    """A ``16x16`` generator acting on column-stacked density matrices."""

    generator: np.ndarray
    params: BathParams = None
    coefficients: BathCoefficients = None

    def trace_violation(self):
        """Largest entry of the row vector that maps ``vec(rho)`` to ``d Tr(rho)/dt``."""
        rows = self.generator[[i * 4 + i for i in range(4)], :]
        return float(np.max(np.abs(rows.sum(axis=0))))


def planck_occupation(params):
    r"""Mean thermal photon number :math:`N_{th} = 1/(e^{\omega_0/T} - 1)`.

    Args:
        params (BathParams): bath parameters

    Returns:
        float: occupation, zero when :math:`\omega_0/T` underflows the exponential
    """
    if params.temperature <= 0:
        raise ValueError("Bath temperature must be positive.")
    ratio = params.omega0 / params.temperature
    if ratio > _MAX_EXPONENT:
        return 0.0
    return float(1.0 / np.expm1(ratio))


def squeeze_coefficients(params, n_th=None):
    r"""Squeezed-bath coefficients :math:`(\tilde N, \tilde M)`.

    .. math::

        \tilde N = N_{th}\cosh 2r + \sinh^2 r,\qquad
        \tilde M = -\tfrac12 \sinh(2r)\, e^{i\phi}\,(2N_{th} + 1)

    Args:
        params (BathParams): bath parameters
        n_th (float): thermal occupation, computed from ``params`` when omitted

    Returns:
        tuple[float, complex]
    """
    if n_th is None:
        n_th = planck_occupation(params)
    r = params.squeeze
    n_tilde = n_th * np.cosh(2 * r) + np.sinh(r) ** 2
    m_tilde = -0.5 * np.sinh(2 * r) * np.exp(1j * params.phi) * (2 * n_th + 1)
    return float(n_tilde), complex(m_tilde)


def collective_shift(params):
    r"""Dipole-dipole frequency shift :math:`\Omega_{12}` between the two qubits.

    .. math::

        \Omega_{12} = \tfrac34\sqrt{\Gamma_1\Gamma_2}\Big\{-[1-(\hat\mu\cdot\hat r)^2]\frac{\cos x}{x}
        + [1-3(\hat\mu\cdot\hat r)^2]\Big(\frac{\sin x}{x^2} + \frac{\cos x}{x^3}\Big)\Big\}

    The shift diverges as :math:`x^{-3}`; a :class:`~.CollectiveShiftWarning`
    is issued when ``r12 <= params.r12_min``.
    """
    if params.r12 <= params.r12_min:
        warnings.warn(
            "Interqubit distance r12={} is at or below {}: the collective shift "
            "diverges and the model leaves its validity range.".format(params.r12, params.r12_min),
            CollectiveShiftWarning,
            stacklevel=2,
        )
    x = params.x
    mu2 = params.mu_dot_rhat ** 2
    bracket = -(1 - mu2) * np.cos(x) / x + (1 - 3 * mu2) * (np.sin(x) / x ** 2 + np.cos(x) / x ** 3)
    return float(0.75 * np.sqrt(params.gamma1 * params.gamma2) * bracket)


def _decay_kernels(x):
    """``sin(x)/x`` and ``(x cos x - sin x)/x^3`` with series forms near zero."""
    if x < SERIES_THRESHOLD:
        x2 = x * x
        return 1 - x2 / 6 + x2 * x2 / 120, -1.0 / 3 + x2 / 30
    return np.sin(x) / x, (x * np.cos(x) - np.sin(x)) / x ** 3


def collective_decay(params):
    r"""Symmetric matrix of collective decay rates :math:`\Gamma_{mn}`.

    The diagonal holds the single-qubit rates. The cross rate is

    .. math::

        \Gamma_{12} = \tfrac32\sqrt{\Gamma_1\Gamma_2}\Big\{[1-(\hat\mu\cdot\hat r)^2]\frac{\sin x}{x}
        + [1-3(\hat\mu\cdot\hat r)^2]\Big(\frac{\cos x}{x^2} - \frac{\sin x}{x^3}\Big)\Big\}

    which tends to :math:`\sqrt{\Gamma_1\Gamma_2}` as :math:`x \to 0`.

    Returns:
        array[float]: ``2x2`` matrix
    """
    mu2 = params.mu_dot_rhat ** 2
    sinc, tail = _decay_kernels(params.x)
    root = np.sqrt(params.gamma1 * params.gamma2)
    gamma12 = 1.5 * root * ((1 - mu2) * sinc + (1 - 3 * mu2) * tail)
    return np.array([[params.gamma1, gamma12], [gamma12, params.gamma2]], dtype=float)


def dressed_hamiltonian(params, omega12=None):
    r"""System Hamiltonian including the dipole-dipole exchange.

    .. math::

        H = \omega_1 S_1^z + \omega_2 S_2^z + \Omega_{12}(S_1^+S_2^- + S_2^+S_1^-)

    Args:
        params (BathParams): bath parameters
        omega12 (float): exchange coupling, computed from ``params`` when omitted

    Returns:
        array[complex]: ``4x4`` Hermitian matrix
    """
    if omega12 is None:
        omega12 = collective_shift(params)
    return _hamiltonian(params.omega1, params.omega2, omega12)


def _hamiltonian(omega1, omega2, omega12):
    exchange = S_PLUS[0] @ S_MINUS[1] + S_PLUS[1] @ S_MINUS[0]
    return omega1 * S_Z[0] + omega2 * S_Z[1] + omega12 * exchange


def bath_coefficients(params):
    """Evaluate all master-equation coefficients for ``params``.

    Returns:
        BathCoefficients
    """
    n_th = planck_occupation(params)
    n_tilde, m_tilde = squeeze_coefficients(params, n_th)
    coefficients = BathCoefficients(
        n_th=n_th,
        n_tilde=n_tilde,
        m_tilde=m_tilde,
        gamma=collective_decay(params),
        omega12=collective_shift(params),
    )
    log.debug(
        "Bath coefficients for %s: N_th=%.6g N~=%.6g M~=%s Gamma12=%.6g Omega12=%.6g",
        params,
        n_th,
        n_tilde,
        m_tilde,
        coefficients.gamma[0, 1],
        coefficients.omega12,
    )
    return coefficients


def spre(a):
    """Superoperator of ``rho -> a rho`` under column stacking."""
    return np.kron(np.eye(a.shape[0]), a)


def spost(a):
    """Superoperator of ``rho -> rho a`` under column stacking."""
    return np.kron(a.T, np.eye(a.shape[0]))


def sandwich(a, b):
    """Superoperator of ``rho -> a rho b`` under column stacking."""
    return np.kron(b.T, a)


def _dissipator(left, right):
    r"""Superoperator of :math:`\rho L R + L R \rho - 2 R \rho L`."""
    product = left @ right
    return spost(product) + spre(product) - 2 * sandwich(right, left)


def assemble_liouvillian(coefficients, omega1=1.0, omega2=1.0):
    """Assemble the ``16x16`` generator from precomputed coefficients.

    The dissipative part sums, over both qubit indices ``m`` and ``n``, the
    emission, absorption and two squeezing terms weighted by
    ``Gamma_mn (1 + N~)``, ``Gamma_mn N~``, ``Gamma_mn M~`` and ``Gamma_mn M~*``.

    Args:
        coefficients (BathCoefficients): master-equation coefficients
        omega1 (float): transition frequency of qubit A
        omega2 (float): transition frequency of qubit B

    Returns:
        array[complex]: the generator acting on column-stacked density matrices
    """
    h = _hamiltonian(omega1, omega2, coefficients.omega12)
    generator = -1j * (spre(h) - spost(h))

    n_tilde, m_tilde = coefficients.n_tilde, coefficients.m_tilde
    for m in range(2):
        for n in range(2):
            rate = coefficients.gamma[m, n]
            if rate == 0:
                continue
            generator -= 0.5 * rate * (1 + n_tilde) * _dissipator(S_PLUS[m], S_MINUS[n])
            generator -= 0.5 * rate * n_tilde * _dissipator(S_MINUS[m], S_PLUS[n])
            generator += 0.5 * rate * m_tilde * _dissipator(S_PLUS[m], S_PLUS[n])
            generator += 0.5 * rate * np.conj(m_tilde) * _dissipator(S_MINUS[m], S_MINUS[n])

    return generator


def build_liouvillian(params):
    """Generator of the two-qubit master equation for the given bath.

    Args:
        params (BathParams): bath parameters

    Returns:
        Liouvillian
    """
    coefficients = bath_coefficients(params)
    generator = assemble_liouvillian(coefficients, params.omega1, params.omega2)
    return Liouvillian(generator=generator, params=params, coefficients=coefficients)

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
Correlation measures
====================

.. currentmodule:: pennylane_sqbath.measures

Quantum coherence, entanglement, discord-type correlations and parameter
sensitivity of a two-qubit density matrix. All entropies are in bits.

.. autosummary::
   :nosignatures:

   dressed_basis
   rel_entropy_coherence
   concurrence
   mutual_information
   conditional_entropy
   discord
   consonance
   lqu
   qfi_from_derivative
   qfi
   qfi_family
   qfi_series
   qfi_pure
   MeasureReport
   measure_report

Code details
~~~~~~~~~~~~
"""
import logging
import math
from dataclasses import asdict, dataclass
from typing import Optional

import numpy as np
import scipy.optimize

from .bath import build_liouvillian
from .evolve import X_TOL, initial_state_eg, is_x_state, state_at, trajectory
from .exceptions import NormalizationError, PhysicsInvariantError, StructureError
from .linalg import (
    IDENTITY,
    PAULI_Y,
    PAULIS,
    ZERO_CLAMP,
    entropy_bits,
    hermitian_eig,
    hermitize,
    kron,
    matrix_sqrt_psd,
    partial_trace,
    von_neumann_entropy,
)
from .teleport import correlation_matrix

log = logging.getLogger(__name__)

#: Eigenvalue-sum cutoff in the spectral QFI formula.
QFI_EPS = 1e-10

_SPIN_FLIP = kron(PAULI_Y, PAULI_Y)
_LOCAL_PAULIS_A = tuple(kron(p, IDENTITY) for p in PAULIS)

# measurement directions tried first on X states, as (theta, phi)
_CANDIDATE_THETAS = (0.0, math.pi / 4, math.pi / 2)
_CANDIDATE_PHIS = (0.0, math.pi / 4, math.pi / 2, 3 * math.pi / 4)
_COARSE_GRID = (18, 36)


def dressed_basis():
    r"""Unitary whose columns are :math:`|ee\rangle, |\Psi_+\rangle, |\Psi_-\rangle, |gg\rangle`,
    with :math:`|\Psi_\pm\rangle = (|eg\rangle \pm |ge\rangle)/\sqrt 2`."""
    s = 1 / math.sqrt(2)
    return np.array(
        [
            [1, 0, 0, 0],
            [0, s, s, 0],
            [0, s, -s, 0],
            [0, 0, 0, 1],
        ],
        dtype=complex,
    )


def rel_entropy_coherence(rho, basis="dressed"):
    r"""Relative entropy of coherence :math:`S(\rho_{\rm diag}) - S(\rho)`.

    Args:
        rho (array[complex]): two-qubit density matrix
        basis (str): reference basis, ``"dressed"`` or ``"computational"``

    Returns:
        float: coherence in bits
    """
    rho = np.asarray(rho, dtype=complex)
    if basis == "dressed":
        u = dressed_basis()
        rho = u.conj().T @ rho @ u
    elif basis != "computational":
        raise ValueError("Unknown coherence basis {!r}.".format(basis))
    diagonal = np.clip(np.diag(rho).real, 0.0, None)
    return max(entropy_bits(diagonal) - von_neumann_entropy(hermitize(rho)), 0.0)


def concurrence(rho):
    r"""Wootters concurrence.

    Uses the Hermitian matrix :math:`\sqrt\rho\,\tilde\rho\sqrt\rho`, which has
    the same spectrum as :math:`\rho\tilde\rho`, where
    :math:`\tilde\rho = (\sigma_y\otimes\sigma_y)\rho^*(\sigma_y\otimes\sigma_y)`.
    """
    rho = np.asarray(rho, dtype=complex)
    root = matrix_sqrt_psd(rho)
    flipped = _SPIN_FLIP @ rho.conj() @ _SPIN_FLIP
    product = hermitize(root @ flipped @ root)
    lambdas = np.clip(hermitian_eig(product).eigenvalues, 0.0, None)
    s = np.sqrt(lambdas)[::-1]
    return float(min(max(s[0] - s[1] - s[2] - s[3], 0.0), 1.0))


def mutual_information(rho):
    """Quantum mutual information :math:`S(\\rho_A) + S(\\rho_B) - S(\\rho)`."""
    rho = np.asarray(rho, dtype=complex)
    value = (
        von_neumann_entropy(partial_trace(rho, "A"))
        + von_neumann_entropy(partial_trace(rho, "B"))
        - von_neumann_entropy(rho)
    )
    return max(value, 0.0)


def _xlog2x(x):
    safe = np.where(x > ZERO_CLAMP, x, 1.0)
    return np.where(x > ZERO_CLAMP, x * np.log2(safe), 0.0)


def directions(thetas, phis):
    """Unit Bloch vectors for every pair of polar and azimuthal angles, shape ``(n, 3)``."""
    theta, phi = np.meshgrid(np.asarray(thetas, float), np.asarray(phis, float), indexing="ij")
    theta, phi = theta.ravel(), phi.ravel()
    return np.stack(
        [np.sin(theta) * np.cos(phi), np.sin(theta) * np.sin(phi), np.cos(theta)], axis=-1
    )


def conditional_entropy(rho, n):
    r"""Average entropy of qubit A after a projective measurement of qubit B.

    The measurement projects B onto :math:`\tfrac12(I \pm \hat n\cdot\vec\sigma)`.

    Args:
        rho (array[complex]): two-qubit density matrix
        n (array[float]): unit vector of shape ``(3,)`` or a stack of shape ``(k, 3)``

    Returns:
        float or array[float]: :math:`\sum_\pm p_\pm S(\rho_{A|\pm})` for each direction
    """
    rho = np.asarray(rho, dtype=complex)
    n = np.asarray(n, dtype=float)
    single = n.ndim == 1
    n = np.atleast_2d(n)

    tensor = rho.reshape(2, 2, 2, 2)
    rho_a = np.einsum("ijkj->ik", tensor)
    # Tr_B[(I x sigma_k) rho] for each Pauli
    blocks = np.array([np.einsum("be,aecb->ac", p, tensor) for p in PAULIS])
    shift = np.einsum("nk,kac->nac", n, blocks)

    total = 0.0
    for sign in (1, -1):
        a = 0.5 * (rho_a[None] + sign * shift)
        p = (a[:, 0, 0] + a[:, 1, 1]).real
        half_gap = np.sqrt(((a[:, 0, 0] - a[:, 1, 1]).real / 2) ** 2 + np.abs(a[:, 0, 1]) ** 2)
        mu = np.stack([p / 2 + half_gap, p / 2 - half_gap], axis=-1)
        mu = np.clip(mu, 0.0, None)
        total = total - _xlog2x(mu).sum(axis=-1) + _xlog2x(p)

    total = np.clip(total, 0.0, None)
    return float(total[0]) if single else total


def _bloch(angles):
    theta, phi = angles
    return np.array([math.sin(theta) * math.cos(phi), math.sin(theta) * math.sin(phi), math.cos(theta)])


def minimal_conditional_entropy(rho, thetas, phis, polish=True):
    """Smallest conditional entropy over a set of measurement directions.

    Args:
        rho (array[complex]): two-qubit density matrix
        thetas, phis (Sequence[float]): polar and azimuthal angles spanning the search grid
        polish (bool): refine the best grid direction with a Nelder-Mead search

    Returns:
        tuple[float, tuple[float, float]]: the minimum and the angles attaining it
    """
    thetas = np.asarray(thetas, dtype=float)
    phis = np.asarray(phis, dtype=float)
    values = conditional_entropy(rho, directions(thetas, phis))
    k = int(np.argmin(values))
    best = float(values[k])
    angles = (float(thetas[k // len(phis)]), float(phis[k % len(phis)]))

    if polish:
        result = scipy.optimize.minimize(
            lambda x: conditional_entropy(rho, _bloch(x)),
            np.array(angles),
            method="Nelder-Mead",
            options={"xatol": 1e-9, "fatol": 1e-13, "maxiter": 2000},
        )
        if result.fun < best:
            best, angles = float(result.fun), (float(result.x[0]), float(result.x[1]))
    return best, angles


def discord_from_minimum(rho, minimum):
    """Discord given the minimal conditional entropy over measurements on qubit B."""
    classical = von_neumann_entropy(partial_trace(rho, "A")) - minimum
    return max(mutual_information(rho) - classical, 0.0)


def discord(rho, allow_oracle=False):
    r"""Quantum discord with projective measurements on qubit B.

    For X states the conditional entropy is minimized over a small set of
    candidate directions together with an ``18x36`` direction grid, and the
    best point is polished locally. Other states are handed to
    :func:`~.oracle.discord_grid` when ``allow_oracle`` is set.

    Raises:
        StructureError: if ``rho`` is not an X state and ``allow_oracle`` is false
    """
    rho = np.asarray(rho, dtype=complex)
    if not is_x_state(rho, X_TOL):
        if not allow_oracle:
            raise StructureError(
                "Fast discord requires an X state; pass allow_oracle=True for general states."
            )
        from .oracle import discord_grid  # pylint: disable=import-outside-toplevel

        return discord_grid(rho)

    candidate, _ = minimal_conditional_entropy(rho, _CANDIDATE_THETAS, _CANDIDATE_PHIS, polish=False)
    n_theta, n_phi = _COARSE_GRID
    coarse, _ = minimal_conditional_entropy(
        rho,
        np.linspace(0, math.pi, n_theta),
        np.linspace(0, 2 * math.pi, n_phi, endpoint=False),
    )
    return discord_from_minimum(rho, min(candidate, coarse))


def consonance(rho):
    r"""Quantum consonance of an X state, :math:`2(|\rho_{23}| + |\rho_{14}|)`.

    Raises:
        StructureError: if ``rho`` is not an X state
    """
    rho = np.asarray(rho, dtype=complex)
    if not is_x_state(rho, X_TOL):
        raise StructureError(
            "Closed-form consonance requires an X state; use oracle.consonance_general instead."
        )
    return 2 * (abs(rho[1, 2]) + abs(rho[0, 3]))


def lqu_matrix(rho):
    r"""Symmetric matrix :math:`W_{ij} = \mathrm{Tr}[\sqrt\rho(\sigma_i\otimes I)\sqrt\rho(\sigma_j\otimes I)]`."""
    root = matrix_sqrt_psd(rho)
    sandwiched = [root @ a @ root for a in _LOCAL_PAULIS_A]
    w = np.array([[np.trace(s @ b).real for b in _LOCAL_PAULIS_A] for s in sandwiched])
    return 0.5 * (w + w.T)


def lqu(rho):
    """Local quantum uncertainty on qubit A, ``1 - lambda_max(W)`` clamped to ``[0, 1]``."""
    largest = hermitian_eig(lqu_matrix(rho)).eigenvalues[-1]
    return float(np.clip(1 - largest, 0.0, 1.0))


def qfi_from_derivative(rho, drho, eps=QFI_EPS):
    r"""Quantum Fisher information from a state and its parameter derivative.

    .. math::

        F = \sum_{\lambda_m + \lambda_n > \epsilon}
            \frac{2|\langle\Phi_m|\partial\rho|\Phi_n\rangle|^2}{\lambda_m + \lambda_n}

    Args:
        rho (array[complex]): density matrix
        drho (array[complex]): derivative of ``rho`` with respect to the parameter
        eps (float): cutoff on eigenvalue sums

    Returns:
        float
    """
    w, v = hermitian_eig(hermitize(rho))
    d = v.conj().T @ hermitize(drho) @ v
    sums = w[:, None] + w[None, :]
    mask = sums > eps
    return float(max(np.sum(2 * np.abs(d[mask]) ** 2 / sums[mask]), 0.0))


def default_step(value):
    """Central-difference step used for a parameter of the given size."""
    return 1e-4 * max(1.0, abs(value))


def qfi_family(family, theta, h=None):
    """QFI of a one-parameter family of density matrices.

    Args:
        family (callable): maps a parameter value to a density matrix
        theta (float): point at which the QFI is evaluated
        h (float): central-difference step
    """
    h = default_step(theta) if h is None else h
    drho = (np.asarray(family(theta + h)) - np.asarray(family(theta - h))) / (2 * h)
    return qfi_from_derivative(family(theta), drho)


def _shifted(params, theta, h):
    value = getattr(params, theta)
    h = default_step(value) if h is None else h
    if h <= 0:
        raise ValueError("Difference step must be positive, got {}.".format(h))
    try:
        plus = params.replace(**{theta: value + h})
        minus = params.replace(**{theta: value - h})
    except ValueError as e:
        raise ValueError(
            "Parameter {}={} is too close to its domain boundary for step {}.".format(theta, value, h)
        ) from e
    return plus, minus, h


def qfi(params, t, theta="r12", h=None, rho0=None):
    """QFI of the evolved state with respect to one bath parameter.

    Args:
        params (BathParams): bath parameters
        t (float): evolution time
        theta (str): name of the estimated parameter
        h (float): central-difference step, ``1e-4 * max(1, value)`` by default
        rho0 (array[complex]): initial state, :math:`|eg\\rangle` by default

    Returns:
        float
    """
    plus, minus, h = _shifted(params, theta, h)
    rho = state_at(params, t, rho0)
    drho = (state_at(plus, t, rho0) - state_at(minus, t, rho0)) / (2 * h)
    return qfi_from_derivative(rho, drho)


def qfi_series(params, t_max, dt, theta="r12", h=None, rho0=None, states=None):
    """QFI at every point of the time grid ``0, dt, ..., t_max``.

    Args:
        states (array[complex]): states of the unshifted trajectory, when already available

    Returns:
        array[float]
    """
    rho0 = initial_state_eg() if rho0 is None else rho0
    plus, minus, h = _shifted(params, theta, h)
    if states is None:
        states = trajectory(build_liouvillian(params), rho0, t_max, dt).states
    upper = trajectory(build_liouvillian(plus), rho0, t_max, dt).states
    lower = trajectory(build_liouvillian(minus), rho0, t_max, dt).states
    return np.array(
        [qfi_from_derivative(rho, (u - l) / (2 * h)) for rho, u, l in zip(states, upper, lower)]
    )


def qfi_pure(psi, dpsi, tol=1e-10):
    r"""QFI of a pure-state family, :math:`4(\langle\partial\psi|\partial\psi\rangle - |\langle\psi|\partial\psi\rangle|^2)`.

    Raises:
        NormalizationError: if ``psi`` is not normalized within ``tol``
    """
    psi = np.asarray(psi, dtype=complex)
    dpsi = np.asarray(dpsi, dtype=complex)
    norm = np.linalg.norm(psi)
    if abs(norm - 1) > tol:
        raise NormalizationError("State vector has norm {:.12g}.".format(norm))
    value = 4 * (np.vdot(dpsi, dpsi).real - abs(np.vdot(psi, dpsi)) ** 2)
    return float(max(value, 0.0))


@dataclass(frozen=True, eq=False)
class MeasureReport:
    """Values of all correlation measures for one state."""

    c_rel: float
    concurrence: float
    discord: float
    consonance: float
    lqu: float
    correlation_t: np.ndarray
    qfi: Optional[float] = None

    def check(self, tol=1e-9):
        """Raise :class:`~.PhysicsInvariantError` if the report is not physically consistent."""
        values = [self.c_rel, self.concurrence, self.discord, self.consonance, self.lqu]
        if self.qfi is not None:
            values.append(self.qfi)
        if not (np.all(np.isfinite(values)) and np.all(np.isfinite(self.correlation_t))):
            raise PhysicsInvariantError("Measure report contains non-finite values: {}.".format(self))
        if self.consonance < self.concurrence - tol:
            raise PhysicsInvariantError(
                "Consonance {:.12g} is below concurrence {:.12g}.".format(
                    self.consonance, self.concurrence
                )
            )
        return self

    def as_dict(self):
        d = asdict(self)
        d["correlation_t"] = self.correlation_t.tolist()
        return d


def measure_report(rho, basis="dressed", qfi=None, allow_oracle=False):  # pylint: disable=redefined-outer-name
    """Evaluate every measure on ``rho``.

    Args:
        rho (array[complex]): two-qubit density matrix
        basis (str): coherence reference basis
        qfi (float): QFI value computed by the caller, if any
        allow_oracle (bool): evaluate discord and consonance of non-X states by brute force

    Returns:
        MeasureReport
    """
    rho = np.asarray(rho, dtype=complex)
    if allow_oracle and not is_x_state(rho, X_TOL):
        from .oracle import consonance_general  # pylint: disable=import-outside-toplevel

        cons = consonance_general(rho)
    else:
        cons = consonance(rho)

    return MeasureReport(
        c_rel=rel_entropy_coherence(rho, basis),
        concurrence=concurrence(rho),
        discord=discord(rho, allow_oracle=allow_oracle),
        consonance=cons,
        lqu=lqu(rho),
        correlation_t=correlation_matrix(rho),
        qfi=qfi,
    )

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
Reference oracles
=================

.. currentmodule:: pennylane_sqbath.oracle

Brute-force counterparts of the closed forms used elsewhere in the package.
They are slow and meant for validation.

.. autosummary::
   :nosignatures:

   discord_grid
   lqu_minimize
   consonance_general
   rk4_trajectory
   avg_fidelity_monte_carlo

Code details
~~~~~~~~~~~~
"""
import logging
import math
from typing import NamedTuple

import numpy as np
import scipy.optimize
from scipy.spatial.transform import Rotation

from .evolve import Trajectory, _generator, time_grid
from .exceptions import IntegrationError
from .linalg import (
    IDENTITY,
    PAULIS,
    hermitian_eig,
    hermitize,
    kron,
    matrix_sqrt_psd,
    partial_trace,
    unvectorize,
    vectorize,
)
from .measures import conditional_entropy, directions, discord_from_minimum
from .teleport import correlation_matrix

log = logging.getLogger(__name__)

#: Largest local error estimate accepted by :func:`rk4_trajectory`.
RK4_LOCAL_TOL = 1e-8

_PAULI_FRAMES = (IDENTITY,) + PAULIS
_PHI_PLUS = np.array([1, 0, 0, 1], dtype=complex) / math.sqrt(2)
_BELL = tuple(kron(IDENTITY, p) @ _PHI_PLUS for p in _PAULI_FRAMES)
_LOCAL_PAULIS_A = tuple(kron(p, IDENTITY) for p in PAULIS)


def _bloch(theta, phi):
    return np.array(
        [math.sin(theta) * math.cos(phi), math.sin(theta) * math.sin(phi), math.cos(theta)]
    )


def _hemisphere_search(objective, n_theta, n_phi, rounds=12):
    """Minimize a function of unit vectors identified up to sign.

    The grid covers polar angles in ``[0, pi]`` and azimuths in ``[0, pi]``.
    The best grid point is refined by alternating bounded scalar searches in
    each angle within one grid cell, followed by a Nelder-Mead polish.

    Args:
        objective (callable): maps an ``(n, 3)`` stack of unit vectors to ``n`` values

    Returns:
        float: the minimum found
    """
    thetas = np.linspace(0, math.pi, n_theta)
    phis = np.linspace(0, math.pi, n_phi)
    values = objective(directions(thetas, phis))
    k = int(np.argmin(values))
    theta, phi = thetas[k // n_phi], phis[k % n_phi]
    best = float(values[k])
    d_theta = math.pi / max(n_theta - 1, 1)
    d_phi = math.pi / max(n_phi - 1, 1)

    def f(theta, phi):
        return float(objective(_bloch(theta, phi)[None])[0])

    for _ in range(rounds):
        previous = best
        res = scipy.optimize.minimize_scalar(
            lambda x: f(x, phi),
            bounds=(theta - d_theta, theta + d_theta),
            method="bounded",
            options={"xatol": 1e-12},
        )
        if res.fun < best:
            best, theta = float(res.fun), float(res.x)
        res = scipy.optimize.minimize_scalar(
            lambda y: f(theta, y),
            bounds=(phi - d_phi, phi + d_phi),
            method="bounded",
            options={"xatol": 1e-12},
        )
        if res.fun < best:
            best, phi = float(res.fun), float(res.x)
        if previous - best < 1e-15:
            break

    res = scipy.optimize.minimize(
        lambda x: f(x[0], x[1]),
        np.array([theta, phi]),
        method="Nelder-Mead",
        options={"xatol": 1e-10, "fatol": 1e-15, "maxiter": 4000},
    )
    return min(best, float(res.fun))


def discord_grid(rho, n_theta=181, n_phi=91):
    """Quantum discord by direct minimization over measurement directions on qubit B.

    Args:
        rho (array[complex]): two-qubit density matrix
        n_theta (int): polar grid points on ``[0, pi]``
        n_phi (int): azimuthal grid points on ``[0, pi]``

    Returns:
        float
    """
    rho = np.asarray(rho, dtype=complex)
    minimum = _hemisphere_search(lambda n: conditional_entropy(rho, n), n_theta, n_phi)
    return discord_from_minimum(rho, minimum)


def skew_information(rho, n):
    r"""Wigner-Yanase skew information :math:`-\tfrac12\mathrm{Tr}[\sqrt\rho, H]^2` of
    :math:`H = \hat n\cdot\vec\sigma\otimes I` for each direction in ``n`` of shape ``(k, 3)``."""
    root = matrix_sqrt_psd(rho)
    h = np.einsum("nk,kab->nab", np.atleast_2d(n), np.array(_LOCAL_PAULIS_A))
    commutator = root[None] @ h - h @ root[None]
    return -0.5 * np.einsum("nab,nba->n", commutator, commutator).real


def lqu_minimize(rho, n_theta=181, n_phi=91):
    """Local quantum uncertainty on qubit A as the minimal skew information."""
    rho = np.asarray(rho, dtype=complex)
    value = _hemisphere_search(lambda n: skew_information(rho, n), n_theta, n_phi)
    return float(np.clip(value, 0.0, 1.0))


def consonance_general(rho):
    """Quantum consonance of an arbitrary two-qubit state.

    Both marginals are diagonalized by local unitaries; the result sums the
    moduli of the entries that flip both qubits in that local eigenbasis.
    """
    rho = np.asarray(rho, dtype=complex)
    u_a = hermitian_eig(partial_trace(rho, "A")).eigenvectors.conj().T
    u_b = hermitian_eig(partial_trace(rho, "B")).eigenvectors.conj().T
    local = kron(u_a, u_b)
    rotated = (local @ rho @ local.conj().T).reshape(2, 2, 2, 2)
    i, j, m, n = np.indices((2, 2, 2, 2))
    mask = (i != m) & (j != n)
    return float(np.sum(np.abs(rotated[mask])))


def rk4_trajectory(liouvillian, rho0, t_max, dt):
    """Integrate the master equation with the classic fourth-order Runge-Kutta scheme.

    Raises:
        IntegrationError: if ``(||L|| dt)^5 / 120`` exceeds ``1e-8``
    """
    generator = _generator(liouvillian)
    local_error = (np.linalg.norm(generator, 2) * dt) ** 5 / 120
    if local_error > RK4_LOCAL_TOL:
        raise IntegrationError(
            "Step dt={} too large for RK4: local error estimate {:.2e}.".format(dt, local_error)
        )

    times = time_grid(t_max, dt)
    states = np.empty((len(times), 4, 4), dtype=complex)
    vec = vectorize(np.asarray(rho0, dtype=complex))
    states[0] = unvectorize(vec)
    for k in range(1, len(times)):
        k1 = generator @ vec
        k2 = generator @ (vec + 0.5 * dt * k1)
        k3 = generator @ (vec + 0.5 * dt * k2)
        k4 = generator @ (vec + dt * k3)
        vec = vec + dt / 6 * (k1 + 2 * k2 + 2 * k3 + k4)
        states[k] = hermitize(unvectorize(vec))
    return Trajectory(times=times, states=states)


class MonteCarloFidelity(NamedTuple):
    """Sample mean and standard deviation of the teleportation fidelity."""

    mean: float
    stddev: float


def _su2(rotation):
    x, y, z, w = Rotation.from_matrix(rotation).as_quat()
    return w * IDENTITY - 1j * (x * PAULIS[0] + y * PAULIS[1] + z * PAULIS[2])


def _proper(matrix):
    matrix = matrix.copy()
    if np.linalg.det(matrix) < 0:
        matrix[:, -1] = -matrix[:, -1]
    return matrix


def diagonalize_correlations(rho):
    """Local unitary image of ``rho`` whose correlation matrix is diagonal."""
    u, _, vh = np.linalg.svd(correlation_matrix(rho))
    local = kron(_su2(_proper(u).T), _su2(_proper(vh.T).T))
    return local @ rho @ local.conj().T


def teleportation_channel(rho):
    """Action of the standard protocol on the basis matrices of the input qubit.

    Returns:
        array[complex]: ``out[i, j]`` is the ``2x2`` output for the input ``|i><j|``
    """
    out = np.zeros((2, 2, 2, 2), dtype=complex)
    for i in range(2):
        for j in range(2):
            e_ij = np.zeros((2, 2), dtype=complex)
            e_ij[i, j] = 1
            joint = np.kron(e_ij, rho).reshape(4, 2, 4, 2)
            for bell, correction in zip(_BELL, _PAULI_FRAMES):
                bob = np.einsum("a,abcd,c->bd", bell.conj(), joint, bell)
                out[i, j] += correction @ bob @ correction.conj().T
    return out


def _average_fidelity(channel):
    entanglement_fidelity = 0.25 * sum(channel[i, j, i, j] for i in range(2) for j in range(2))
    return (2 * entanglement_fidelity.real + 1) / 3


def avg_fidelity_monte_carlo(rho, n_samples=100000, seed=0):
    """Teleportation fidelity averaged over Haar-random inputs.

    The resource is first brought to diagonal correlations by local unitaries,
    then the Pauli frame on qubit B with the best average fidelity is selected.

    Args:
        rho (array[complex]): two-qubit resource state
        n_samples (int): number of random input states, at least ``10**4``
        seed (int): seed of the random generator

    Returns:
        MonteCarloFidelity
    """
    if n_samples < 10 ** 4:
        raise ValueError("At least 10^4 samples are required, got {}.".format(n_samples))

    rho = diagonalize_correlations(np.asarray(rho, dtype=complex))
    candidates = []
    for frame in _PAULI_FRAMES:
        local = kron(IDENTITY, frame)
        channel = teleportation_channel(local @ rho @ local.conj().T)
        candidates.append((_average_fidelity(channel), channel))
    _, channel = max(candidates, key=lambda c: c[0])

    rng = np.random.default_rng(seed)
    psi = rng.standard_normal((n_samples, 2)) + 1j * rng.standard_normal((n_samples, 2))
    psi /= np.linalg.norm(psi, axis=1, keepdims=True)

    out = np.einsum("ni,nj,ijab->nab", psi, psi.conj(), channel)
    fidelities = np.einsum("na,nab,nb->n", psi.conj(), out, psi).real
    log.debug("Monte Carlo fidelity from %d samples with seed %d.", n_samples, seed)
    return MonteCarloFidelity(float(np.mean(fidelities)), float(np.std(fidelities, ddof=1)))

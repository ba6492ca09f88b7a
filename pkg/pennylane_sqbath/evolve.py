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
Time evolution
==============

.. currentmodule:: pennylane_sqbath.evolve

Propagation of the two-qubit density matrix under a :class:`~.Liouvillian`.

States are advanced with the exact propagator :math:`e^{\mathcal{L}t}`
acting on the column-stacked density matrix; after every step the result is
Hermitized and checked against the density-matrix invariants.

.. autosummary::
   :nosignatures:

   initial_state_eg
   validate_density_matrix
   x_leakage
   expm
   propagate
   trajectory
   Trajectory
   steady_state
   state_at
   parameter_sweep

Code details
~~~~~~~~~~~~
"""
import logging
from dataclasses import dataclass, field
from typing import List

import numpy as np
import scipy.linalg

from .bath import Liouvillian, build_liouvillian
from .exceptions import (
    IntegrationError,
    NormalizationError,
    PhysicsInvariantError,
    PositivityError,
)
from .linalg import (
    HERMITIAN_TOL,
    POSITIVITY_TOL,
    TRACE_TOL,
    check_hermitian,
    eigvalsh,
    hermiticity_error,
    hermitize,
    unvectorize,
    vectorize,
)

log = logging.getLogger(__name__)

#: Hermiticity drift tolerated after unstacking before the step is rejected.
DRIFT_TOL = 1e-10
#: Negative eigenvalue at which propagation is considered to have failed.
HARD_POSITIVITY_TOL = 1e-6
#: Accumulated trace drift tolerated along a trajectory.
TRAJECTORY_TRACE_TOL = 1e-8
#: Largest modulus allowed outside the X pattern for a state to count as an X state.
X_TOL = 1e-8
#: Leakage out of the X pattern tolerated along a trajectory started in it.
LEAKAGE_TOL = 1e-10

# entries on the diagonal and the anti-diagonal
X_MASK = np.eye(4, dtype=bool) | np.fliplr(np.eye(4, dtype=bool))


def initial_state_eg():
    r"""Projector onto the separable state :math:`|e\rangle|g\rangle`."""
    rho = np.zeros((4, 4), dtype=complex)
    rho[1, 1] = 1.0
    return rho


def validate_density_matrix(rho, herm_tol=HERMITIAN_TOL, trace_tol=TRACE_TOL, pos_tol=POSITIVITY_TOL):
    """Check that ``rho`` is a valid two-qubit density matrix.

    Returns:
        array[complex]: ``rho`` as a ``4x4`` complex array

    Raises:
        SymmetryError: if ``rho`` is not a Hermitian ``4x4`` matrix
        NormalizationError: if the trace differs from one
        PositivityError: if an eigenvalue lies below ``-pos_tol``
    """
    rho = check_hermitian(rho, herm_tol)
    if rho.shape != (4, 4):
        raise ValueError("Expected a 4x4 density matrix, got shape {}.".format(rho.shape))
    trace = np.trace(rho).real
    if abs(trace - 1) > trace_tol:
        raise NormalizationError("Density matrix has trace {:.12g}.".format(trace))
    lowest = eigvalsh(rho)[0]
    if lowest < -pos_tol:
        raise PositivityError("Density matrix has eigenvalue {:.3e}.".format(lowest))
    return rho


def x_leakage(rho):
    """Largest modulus of the entries outside the X pattern."""
    return float(np.max(np.abs(np.asarray(rho)[~X_MASK])))


def is_x_state(rho, tol=X_TOL):
    """Whether ``rho`` vanishes outside its diagonal and anti-diagonal within ``tol``."""
    return x_leakage(rho) <= tol


def expm(matrix):
    """Matrix exponential by Padé scaling-and-squaring.

    Raises:
        IntegrationError: if the input or the result is not finite
    """
    matrix = np.asarray(matrix, dtype=complex)
    if not np.all(np.isfinite(matrix)):
        raise IntegrationError("Cannot exponentiate a matrix with non-finite entries.")
    result = scipy.linalg.expm(matrix)
    if not np.all(np.isfinite(result)):
        raise IntegrationError("Matrix exponential overflowed.")
    return result


def _generator(liouvillian):
    if isinstance(liouvillian, Liouvillian):
        return liouvillian.generator
    generator = np.asarray(liouvillian, dtype=complex)
    if generator.shape != (16, 16):
        raise ValueError("Expected a 16x16 generator, got shape {}.".format(generator.shape))
    return generator


def _restore(vec):
    """Unstack, Hermitize and check one propagated state.

    Returns:
        tuple[array[complex], float]: the state and its Hermiticity drift
    """
    rho = unvectorize(vec)
    drift = hermiticity_error(rho)
    if drift > DRIFT_TOL:
        raise IntegrationError("Propagated state drifted from Hermiticity by {:.3e}.".format(drift))
    rho = hermitize(rho)
    lowest = eigvalsh(rho)[0]
    if lowest < -HARD_POSITIVITY_TOL:
        raise IntegrationError("Propagated state has eigenvalue {:.3e}.".format(lowest))
    return rho, drift


def propagate(liouvillian, rho0, t):
    r"""Evolve ``rho0`` for a time ``t``.

    Args:
        liouvillian (Liouvillian or array): the generator
        rho0 (array[complex]): initial density matrix
        t (float): evolution time, in units of the inverse decay rate

    Returns:
        array[complex]: :math:`\rho(t)`

    Raises:
        IntegrationError: if the result drifts out of the set of density matrices
    """
    if t < 0:
        raise ValueError("Evolution time must be non-negative, got {}.".format(t))
    rho0 = np.array(rho0, dtype=complex)
    if t == 0:
        return rho0
    vec = expm(_generator(liouvillian) * t) @ vectorize(rho0)
    return _restore(vec)[0]


@dataclass(eq=False)
class Trajectory:
    """States of a single run on a uniform time grid, together with the
    per-state diagnostics that were gathered while propagating."""

    times: np.ndarray
    states: np.ndarray
    reports: List = None
    trace_errors: np.ndarray = field(default=None)
    min_eigenvalues: np.ndarray = field(default=None)
    hermiticity_errors: np.ndarray = field(default=None)
    x_leakages: np.ndarray = field(default=None)

    def __post_init__(self):
        if len(self.times) != len(self.states):
            raise ValueError("A trajectory needs one state per time point.")
        if self.trace_errors is None:
            self.trace_errors = np.array([abs(np.trace(s).real - 1) for s in self.states])
        if self.min_eigenvalues is None:
            self.min_eigenvalues = np.array([eigvalsh(s)[0] for s in self.states])
        if self.hermiticity_errors is None:
            self.hermiticity_errors = np.array([hermiticity_error(s) for s in self.states])
        if self.x_leakages is None:
            self.x_leakages = np.array([x_leakage(s) for s in self.states])

    def __len__(self):
        return len(self.times)

    def __iter__(self):
        return iter(zip(self.times, self.states))

    def check_invariants(
        self,
        trace_tol=TRACE_TOL,
        pos_tol=POSITIVITY_TOL,
        herm_tol=HERMITIAN_TOL,
        leak_tol=LEAKAGE_TOL,
        x_structure=True,
    ):
        """Raise if any state violates the density-matrix invariants.

        Raises:
            PhysicsInvariantError: naming the first offending time point
        """
        checks = [
            ("trace error", self.trace_errors, trace_tol),
            ("negative eigenvalue", -self.min_eigenvalues, pos_tol),
            ("Hermiticity error", self.hermiticity_errors, herm_tol),
        ]
        if x_structure:
            checks.append(("X-structure leakage", self.x_leakages, leak_tol))

        for name, values, tol in checks:
            bad = np.flatnonzero(values > tol)
            if bad.size:
                k = bad[0]
                raise PhysicsInvariantError(
                    "{} {:.3e} exceeds {:.0e} at t={:.6g}.".format(name, values[k], tol, self.times[k])
                )


def time_grid(t_max, dt):
    """Uniform grid ``0, dt, 2 dt, ..., t_max``."""
    if t_max <= 0 or dt <= 0:
        raise ValueError("t_max and dt must be positive, got t_max={}, dt={}.".format(t_max, dt))
    steps = int(round(t_max / dt))
    return dt * np.arange(steps + 1)


def trajectory(liouvillian, rho0, t_max, dt):
    """States at ``0, dt, ..., t_max`` from repeated one-step propagation.

    Args:
        liouvillian (Liouvillian or array): the generator
        rho0 (array[complex]): initial density matrix
        t_max (float): final time
        dt (float): grid spacing

    Returns:
        Trajectory

    Raises:
        IntegrationError: if the trace drifts by more than ``1e-8``
        PhysicsInvariantError: if a state started in the X pattern leaves it
    """
    times = time_grid(t_max, dt)
    rho0 = np.array(rho0, dtype=complex)
    step = expm(_generator(liouvillian) * dt)
    log.debug("Cached one-step propagator for dt=%g over %d steps.", dt, len(times) - 1)

    track_x = is_x_state(rho0, tol=0.0)
    states = np.empty((len(times), 4, 4), dtype=complex)
    drifts = np.zeros(len(times))
    states[0] = rho0
    drifts[0] = hermiticity_error(rho0)
    vec = vectorize(rho0)

    for k in range(1, len(times)):
        vec = step @ vec
        rho, drifts[k] = _restore(vec)
        vec = vectorize(rho)

        trace_error = abs(np.trace(rho).real - 1)
        if trace_error > TRAJECTORY_TRACE_TOL:
            raise IntegrationError(
                "Trace drifted by {:.3e} at t={:.6g}.".format(trace_error, times[k])
            )
        if track_x and x_leakage(rho) > LEAKAGE_TOL:
            raise PhysicsInvariantError(
                "State left the X pattern at t={:.6g} (leakage {:.3e}).".format(
                    times[k], x_leakage(rho)
                )
            )
        states[k] = rho

    return Trajectory(times=times, states=states, hermiticity_errors=drifts)


def steady_state(liouvillian, rcond=1e-10):
    """Unique stationary state of the generator.

    Raises:
        IntegrationError: if the kernel of the generator is not one-dimensional
    """
    kernel = scipy.linalg.null_space(_generator(liouvillian), rcond=rcond)
    if kernel.shape[1] != 1:
        raise IntegrationError(
            "Generator has a {}-dimensional kernel; the steady state is not unique.".format(
                kernel.shape[1]
            )
        )
    rho = unvectorize(kernel[:, 0])
    rho = hermitize(rho / np.trace(rho))
    return rho


def state_at(params, t, rho0=None):
    """State reached from ``rho0`` (default :func:`initial_state_eg`) after a time ``t``
    under the bath described by ``params``."""
    if rho0 is None:
        rho0 = initial_state_eg()
    return propagate(build_liouvillian(params), rho0, t)


def parameter_sweep(params, t, name, values, rho0=None):
    """States at a fixed time for each value of one bath parameter.

    Args:
        params (BathParams): base parameters
        t (float): evolution time
        name (str): name of the :class:`~.BathParams` field to sweep
        values (Sequence[float]): values taken by that field

    Returns:
        array[complex]: states stacked along the first axis
    """
    return np.array([state_at(params.replace(**{name: v}), t, rho0) for v in values])

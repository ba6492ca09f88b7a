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
Teleportation
=============

.. currentmodule:: pennylane_sqbath.teleport

Figures of merit of a two-qubit state used as the resource of the standard
one-qubit teleportation protocol.

.. autosummary::
   :nosignatures:

   correlation_matrix
   max_fidelity
   fidelity_deviation
   TeleportReport
   teleport_report

Code details
~~~~~~~~~~~~
"""
import logging
import math
from dataclasses import dataclass

import numpy as np

from .linalg import PAULIS, kron

log = logging.getLogger(__name__)

#: Average fidelity reachable without entanglement.
CLASSICAL_LIMIT = 2 / 3

_CORRELATORS = np.array([[kron(a, b) for b in PAULIS] for a in PAULIS])
_DEVIATION_SCALE = 1 / (3 * math.sqrt(10))


def correlation_matrix(rho):
    r"""Correlation matrix :math:`T_{ij} = \mathrm{Tr}[\rho\,\sigma_i\otimes\sigma_j]`.

    Returns:
        array[float]: ``3x3`` real matrix
    """
    rho = np.asarray(rho, dtype=complex)
    return np.einsum("ijab,ba->ij", _CORRELATORS, rho).real


def _fidelity(diagonal):
    return 0.5 * (1 + np.sum(diagonal) / 3)


def _deviation(diagonal):
    a = np.asarray(diagonal, dtype=float)
    gaps = [(a[i] - a[j]) ** 2 for i in range(3) for j in range(i + 1, 3)]
    return _DEVIATION_SCALE * math.sqrt(sum(gaps))


def max_fidelity(rho):
    r"""Maximal average teleportation fidelity :math:`\tfrac12(1 + \tfrac13\sum_i|T_{ii}|)`."""
    return float(_fidelity(np.abs(np.diag(correlation_matrix(rho)))))


def fidelity_deviation(rho):
    r"""Standard deviation of the teleportation fidelity over uniformly random inputs,

    .. math::

        \Delta F = \frac{1}{3\sqrt{10}}\sqrt{\sum_{i<j}(|T_{ii}| - |T_{jj}|)^2}.

    The expression holds when :math:`\det T < 0`; see :func:`teleport_report`
    for the regime flag.
    """
    return float(_deviation(np.abs(np.diag(correlation_matrix(rho)))))


def optimal_correlations(t_matrix):
    r"""Diagonal correlations reachable by local unitaries and a Pauli frame.

    Returns the singular values of ``T``, the smallest one negated when
    :math:`\det T > 0` since proper rotations cannot flip the sign of the
    determinant.
    """
    s = np.linalg.svd(np.asarray(t_matrix, dtype=float), compute_uv=False)
    if np.linalg.det(t_matrix) > 0:
        s[-1] = -s[-1]
    return s


@dataclass(frozen=True, eq=False)
class TeleportReport:
    """Teleportation figures of merit of a resource state.

    ``max_fidelity`` and ``fidelity_deviation`` use the diagonal of the raw
    correlation matrix. ``svd_fidelity`` and ``svd_deviation`` use the
    correlations left after the best local rotation; the two agree whenever
    ``T`` is diagonal with a negative determinant.
    """

    t_matrix: np.ndarray
    max_fidelity: float
    fidelity_deviation: float
    det_t: float
    svd_fidelity: float
    svd_deviation: float

    @property
    def useful(self):
        """Whether the resource beats the classical limit of 2/3."""
        return self.max_fidelity >= CLASSICAL_LIMIT - 1e-12

    @property
    def in_regime(self):
        """Whether the deviation formula applies, i.e. ``det T < 0``."""
        return self.det_t < 0

    def as_dict(self):
        return {
            "t_matrix": self.t_matrix.tolist(),
            "max_fidelity": self.max_fidelity,
            "fidelity_deviation": self.fidelity_deviation,
            "det_t": self.det_t,
            "useful": self.useful,
            "in_regime": self.in_regime,
            "svd_fidelity": self.svd_fidelity,
            "svd_deviation": self.svd_deviation,
        }


def teleport_report(rho):
    """Evaluate all teleportation figures of merit of ``rho``.

    Returns:
        TeleportReport
    """
    t = correlation_matrix(rho)
    diagonal = np.abs(np.diag(t))
    optimal = optimal_correlations(t)
    report = TeleportReport(
        t_matrix=t,
        max_fidelity=float(_fidelity(diagonal)),
        fidelity_deviation=float(_deviation(diagonal)),
        det_t=float(np.linalg.det(t)),
        svd_fidelity=float(_fidelity(optimal)),
        svd_deviation=float(_deviation(optimal)),
    )
    if not report.in_regime:
        log.debug("det T = %.3e >= 0: fidelity deviation outside its validity regime.", report.det_t)
    return report

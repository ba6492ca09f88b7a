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
Linear algebra
==============

.. currentmodule:: pennylane_sqbath.linalg

Dense complex-matrix kernel for the small matrices that appear in the
two-qubit problem (dimensions 2, 3, 4 and 16).

All two-qubit operators use the basis order
:math:`|ee\rangle, |eg\rangle, |ge\rangle, |gg\rangle` with qubit A as the
leftmost tensor factor, and the single-qubit basis is :math:`(|e\rangle, |g\rangle)`,
so that :math:`\sigma_z|e\rangle = +|e\rangle`.

.. autosummary::
   :nosignatures:

   hermitian_eig
   jacobi_eigh
   matrix_sqrt_psd
   von_neumann_entropy
   partial_trace
   kron
   vectorize
   unvectorize
"""
import functools
import logging
from typing import NamedTuple

import numpy as np

from .exceptions import NormalizationError, PositivityError, SymmetryError

log = logging.getLogger(__name__)

BASIS_LABELS = ("ee", "eg", "ge", "gg")

IDENTITY = np.eye(2, dtype=complex)
PAULI_X = np.array([[0, 1], [1, 0]], dtype=complex)
PAULI_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
PAULI_Z = np.array([[1, 0], [0, -1]], dtype=complex)
PAULIS = (PAULI_X, PAULI_Y, PAULI_Z)

#: Raising operator :math:`|e\rangle\langle g|` in the single-qubit basis.
SIGMA_PLUS = np.array([[0, 1], [0, 0]], dtype=complex)
SIGMA_MINUS = SIGMA_PLUS.T.copy()

HERMITIAN_TOL = 1e-12
TRACE_TOL = 1e-10
POSITIVITY_TOL = 1e-9
ZERO_CLAMP = 1e-12


class EigenDecomposition(NamedTuple):
    """Eigenvalues (ascending) and the matching orthonormal eigenvectors, stored as columns."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray


def hermiticity_error(matrix):
    """Largest entry of :math:`|M - M^\\dagger|`."""
    matrix = np.asarray(matrix)
    return float(np.max(np.abs(matrix - matrix.conj().T))) if matrix.size else 0.0


def check_hermitian(matrix, tol=HERMITIAN_TOL):
    """Return ``matrix`` as a square complex array, or raise if it is not Hermitian.

    Raises:
        SymmetryError: if the matrix is not square or ``max|M - M^dagger| > tol``
    """
    matrix = np.asarray(matrix, dtype=complex)
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        raise SymmetryError("Expected a square matrix, got shape {}.".format(matrix.shape))
    violation = hermiticity_error(matrix)
    if violation > tol:
        raise SymmetryError(
            "Matrix is not Hermitian: max|M - M^dagger| = {:.3e} exceeds {:.1e}.".format(
                violation, tol
            )
        )
    return matrix


def _rotation(a, p, q):
    """Unitary Jacobi rotation annihilating the ``(p, q)`` entry of the Hermitian matrix ``a``."""
    apq = a[p, q]
    magnitude = abs(apq)
    phase = apq / magnitude
    theta = 0.5 * np.arctan2(2 * magnitude, (a[q, q] - a[p, p]).real)
    c, s = np.cos(theta), np.sin(theta)

    # remove the phase of a[p, q], then rotate the resulting real symmetric block
    g = np.eye(a.shape[0], dtype=complex)
    g[p, p] = c
    g[p, q] = s
    g[q, p] = -s * phase.conjugate()
    g[q, q] = c * phase.conjugate()
    return g


def jacobi_eigh(matrix, tol=1e-14, max_sweeps=60):
    """Eigendecomposition of a Hermitian matrix by cyclic Jacobi rotations.

    Sweeps over all pairs ``p < q`` above the diagonal and annihilates each
    off-diagonal entry with a complex plane rotation, until the off-diagonal
    Frobenius norm falls below ``tol`` times the norm of the matrix.

    Args:
        matrix (array[complex]): Hermitian matrix
        tol (float): relative convergence threshold on the off-diagonal norm
        max_sweeps (int): sweeps attempted before falling back to LAPACK

    Returns:
        tuple[array[float], array[complex]]: unsorted eigenvalues and the
        unitary whose columns are the eigenvectors
    """
    a = np.array(matrix, dtype=complex)
    n = a.shape[0]
    v = np.eye(n, dtype=complex)
    scale = np.linalg.norm(a)
    if scale == 0.0:
        return np.zeros(n), v

    threshold = tol * scale
    for sweep in range(max_sweeps):
        off = np.linalg.norm(a - np.diag(np.diag(a)))
        if off <= threshold:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                if abs(a[p, q]) <= threshold / n:
                    continue
                g = _rotation(a, p, q)
                a = g.conj().T @ a @ g
                a[p, q] = a[q, p] = 0.0
                v = v @ g
    else:
        log.warning(
            "Jacobi eigensolver did not converge in %d sweeps; falling back to LAPACK.", max_sweeps
        )
        w, v = np.linalg.eigh(matrix)
        return w, v

    log.debug("Jacobi eigensolver converged after %d sweeps (n=%d).", sweep, n)
    return np.diag(a).real.copy(), v


def hermitian_eig(matrix, method="jacobi", tol=HERMITIAN_TOL):
    """Eigendecomposition of a Hermitian matrix with ascending eigenvalues.

    Args:
        matrix (array[complex]): Hermitian matrix of any small dimension
        method (str): ``"jacobi"`` (cyclic Jacobi rotations) or ``"lapack"``
            (:func:`numpy.linalg.eigh`)
        tol (float): Hermiticity tolerance

    Returns:
        EigenDecomposition: eigenvalues in ascending order and eigenvectors as columns

    Raises:
        SymmetryError: if the input is not Hermitian within ``tol``
    """
    matrix = check_hermitian(matrix, tol)
    if method == "jacobi":
        w, v = jacobi_eigh(matrix)
    elif method == "lapack":
        w, v = np.linalg.eigh(matrix)
    else:
        raise ValueError("Unknown eigensolver method {!r}.".format(method))

    order = np.argsort(w, kind="stable")
    return EigenDecomposition(w[order], v[:, order])


def eigvalsh(matrix, method="jacobi"):
    """Ascending eigenvalues of a Hermitian matrix."""
    return hermitian_eig(matrix, method=method).eigenvalues


def hermitize(matrix):
    """Hermitian part :math:`(M + M^\\dagger)/2`."""
    matrix = np.asarray(matrix)
    return 0.5 * (matrix + matrix.conj().T)


def _clamped_spectrum(matrix, tol=POSITIVITY_TOL):
    w, v = hermitian_eig(matrix)
    if w[0] < -tol:
        raise PositivityError(
            "Matrix has eigenvalue {:.3e} below the positivity tolerance -{:.0e}.".format(w[0], tol)
        )
    w = np.where(w <= ZERO_CLAMP, 0.0, w)
    return w, v


def matrix_sqrt_psd(rho, tol=POSITIVITY_TOL):
    """Principal square root of a positive semidefinite Hermitian matrix.

    Eigenvalues in ``[-tol, 1e-12]`` are clamped to zero before the square root.

    Raises:
        PositivityError: if an eigenvalue lies below ``-tol``
    """
    w, v = _clamped_spectrum(rho, tol)
    root = (v * np.sqrt(w)) @ v.conj().T
    return hermitize(root)


def entropy_bits(probabilities):
    r"""Shannon entropy :math:`-\sum p \log_2 p` in bits, with :math:`0 \log 0 = 0`."""
    p = np.asarray(probabilities, dtype=float)
    p = p[p > ZERO_CLAMP]
    return float(max(-np.sum(p * np.log2(p)), 0.0))


def von_neumann_entropy(rho, tol=TRACE_TOL):
    r"""Von Neumann entropy :math:`S(\rho) = -\mathrm{Tr}\,\rho\log_2\rho` in bits.

    Raises:
        NormalizationError: if the trace differs from one by more than ``tol``
    """
    rho = np.asarray(rho, dtype=complex)
    trace = np.trace(rho)
    if abs(trace - 1) > tol:
        raise NormalizationError("State has trace {:.12g}, expected 1.".format(trace.real))
    w, _ = _clamped_spectrum(rho)
    return entropy_bits(w)


def partial_trace(rho, keep="A"):
    """Reduced state of one qubit of a two-qubit density matrix.

    Args:
        rho (array[complex]): ``4x4`` density matrix in the A-major basis order
        keep (str): subsystem to keep, ``"A"`` or ``"B"``

    Returns:
        array[complex]: ``2x2`` reduced density matrix
    """
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (4, 4):
        raise ValueError("partial_trace expects a 4x4 matrix, got shape {}.".format(rho.shape))
    tensor = rho.reshape(2, 2, 2, 2)
    if keep == "A":
        return np.einsum("ijkj->ik", tensor)
    if keep == "B":
        return np.einsum("ijil->jl", tensor)
    raise ValueError("Subsystem label must be 'A' or 'B', got {!r}.".format(keep))


def kron(*factors):
    """Kronecker product of one or more matrices, leftmost factor most significant."""
    if not factors:
        raise ValueError("kron requires at least one factor.")
    return functools.reduce(np.kron, (np.asarray(f) for f in factors))


def vectorize(rho):
    """Column-stacked vector of a square matrix."""
    return np.asarray(rho).reshape(-1, order="F")


def unvectorize(vec):
    """Inverse of :func:`vectorize`."""
    vec = np.asarray(vec)
    dim = int(round(np.sqrt(vec.size)))
    return vec.reshape(dim, dim, order="F")

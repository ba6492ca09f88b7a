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
Devices
=======

.. currentmodule:: pennylane_sqbath.devices

This plugin provides a PennyLane device simulating two qubits coupled to a
common squeezed thermal bath:

.. autosummary::
   :nosignatures:

   SqueezedBathDevice

SqueezedBathDevice
##################

.. autoclass:: SqueezedBathDevice

"""
import logging

import numpy as np
from pennylane import Device, DeviceError
from pennylane.wires import Wires

from ._version import __version__
from .bath import BathParams, build_liouvillian
from .evolve import propagate
from .linalg import IDENTITY, PAULI_X, PAULI_Y, PAULI_Z, kron

log = logging.getLogger(__name__)

PAULI_MATRICES = {
    "PauliX": PAULI_X,
    "PauliY": PAULI_Y,
    "PauliZ": PAULI_Z,
}

_SWAP = np.array([[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]], dtype=complex)


class SqueezedBathDevice(Device):
    """A PennyLane :code:`sqbath.mixed` device for two qubits in a squeezed thermal bath.

    The device holds the two-qubit density matrix. Computational label ``0``
    is the excited state :math:`|e\\rangle` and label ``1`` the ground state
    :math:`|g\\rangle`, so ``BasisState(np.array([0, 1]), wires=[0, 1])``
    prepares :math:`|e\\rangle|g\\rangle`.

    Args:
        wires (int or Iterable[Number, str]]): Number of subsystems represented by the device,
            or iterable of two unique labels. Default 2 if not specified.
        shots (None, int): How many times the circuit should be evaluated (or sampled) to estimate
            the expectation values. Defaults to ``None`` if not specified, which means that the device
            returns analytical results.

    Keyword Args:
        Any field of :class:`~.BathParams`, e.g. ``temperature``, ``squeeze`` or ``r12``.

    This device can, for example, be instantiated from PennyLane as follows:

    .. code-block:: python

        import pennylane as qml
        dev = qml.device('sqbath.mixed', wires=2, temperature=1.0, squeeze=0.35, r12=0.1)

    Supported PennyLane Operations:
      :class:`pennylane.BasisState`,
      :class:`pennylane.PauliX`,
      :class:`pennylane.PauliY`,
      :class:`pennylane.PauliZ`,
      :class:`pennylane_sqbath.BathEvolution <pennylane_sqbath.ops.BathEvolution>`

    Supported PennyLane observables:
      :class:`pennylane.PauliX`,
      :class:`pennylane.PauliY`,
      :class:`pennylane.PauliZ`,
      :class:`pennylane.Identity`

    Tensor products of the supported observables on the two wires can be measured as well.
    """

    name = "Squeezed thermal bath PennyLane plugin"
    short_name = "sqbath.mixed"
    pennylane_requires = ">=0.15.0"
    version = __version__
    plugin_version = __version__
    author = "Xanadu"
    _capabilities = {
        "model": "qubit",
        "tensor_observables": True,
        "supports_tensor_observables": True,
    }

    _operation_map = dict(PAULI_MATRICES, BasisState=None, BathEvolution=None)
    _observable_map = dict(PAULI_MATRICES, Identity=IDENTITY)

    def __init__(self, wires=2, shots=None, **bath_kwargs):
        super().__init__(wires=wires, shots=shots)
        if self.num_wires != 2:
            raise ValueError(
                "The {} device models exactly two qubits, got {} wires.".format(
                    self.short_name, self.num_wires
                )
            )
        self.params = BathParams(**bath_kwargs)
        self._liouvillian = None
        self._rho = None
        self._first_operation = True
        self.reset()

    @property
    def liouvillian(self):
        """Generator of the bath evolution, built on first use."""
        if self._liouvillian is None:
            self._liouvillian = build_liouvillian(self.params)
        return self._liouvillian

    @property
    def state(self):
        """array[complex]: copy of the current two-qubit density matrix"""
        return self._rho.copy()

    @property
    def operations(self):
        """Get the supported set of operations.

        Returns:
            set[str]: the set of PennyLane operation names the device supports
        """
        return set(self._operation_map.keys())

    @property
    def observables(self):
        """Get the supported set of observables.

        Returns:
            set[str]: the set of PennyLane observable names the device supports
        """
        return set(self._observable_map.keys())

    def reset(self):
        """Reset the register to the computational state with all labels ``0``."""
        self._rho = np.zeros((4, 4), dtype=complex)
        self._rho[0, 0] = 1.0
        self._first_operation = True

    def _local(self, matrix, wire):
        return kron(matrix, IDENTITY) if wire == 0 else kron(IDENTITY, matrix)

    def _conjugate(self, unitary):
        self._rho = unitary @ self._rho @ unitary.conj().T

    def apply(self, operation, wires, par):
        """Apply a quantum operation.

        Args:
            operation (str): name of the operation
            wires (Sequence[int]): subsystems the operation is applied on
            par (tuple): parameters for the operation
        """
        if operation == "BasisState" and not self._first_operation:
            raise DeviceError(
                "Operation {} cannot be used after other Operations have already "
                "been applied on a {} device.".format(operation, self.short_name)
            )
        self._first_operation = False

        # translate wires to reflect labels on the device
        device_wires = self.map_wires(wires).labels

        if operation == "BasisState":
            bits = np.asarray(par[0]).astype(int).ravel()
            if bits.size != len(device_wires) or not set(bits) <= {0, 1}:
                raise ValueError("BasisState expects one bit per wire, got {}.".format(par[0]))
            for bit, wire in zip(bits, device_wires):
                if bit:
                    self._conjugate(self._local(PAULI_X, wire))
        elif operation == "BathEvolution":
            if sorted(device_wires) != [0, 1]:
                raise DeviceError("BathEvolution must act on both wires of the device.")
            swapped = list(device_wires) == [1, 0]
            if swapped:
                self._conjugate(_SWAP)
            log.debug("Evolving the register for t=%s.", par[0])
            self._rho = propagate(self.liouvillian, self._rho, float(par[0]))
            if swapped:
                self._conjugate(_SWAP)
        else:
            self._conjugate(self._local(self._operation_map[operation], device_wires[0]))

    def _observable_matrix(self, observable, wires):
        names = observable if isinstance(observable, (list, tuple)) else [observable]
        if isinstance(wires, (list, tuple)):
            wires = Wires.all_wires(wires)
        device_wires = self.map_wires(wires).labels
        factors = [IDENTITY, IDENTITY]
        for name, wire in zip(names, device_wires):
            factors[wire] = factors[wire] @ self._observable_map[name]
        return kron(*factors)

    def expval(self, observable, wires, par):
        """Retrieve the requested observable expectation value."""
        matrix = self._observable_matrix(observable, wires)
        expval = float(np.trace(self._rho @ matrix).real)

        if self.shots is not None and observable != "Identity":
            p0 = (expval + 1) / 2
            p0 = max(min(p0, 1), 0)
            n0 = np.random.binomial(self.shots, p0)
            expval = (n0 - (self.shots - n0)) / self.shots

        return expval

    def var(self, observable, wires, par):
        """Retrieve the requested observable variance."""
        expval = self.expval(observable, wires, par)
        # every supported observable squares to the identity
        return 1 - expval ** 2

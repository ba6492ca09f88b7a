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
Operations
##########

.. currentmodule:: pennylane_sqbath.ops

In addition to the Pauli operations native to PennyLane, the
:code:`sqbath.mixed` device supports the following operation:

.. autosummary::
   BathEvolution

.. note::
    The operation is also accessible directly under the top-level
    :code:`pennylane_sqbath` context, i.e., you can use
    :code:`pennylane_sqbath.BathEvolution(1.0, wires=[0, 1])`.

"""
import pennylane.operation as plops


class BathEvolution(plops.Operation):  # pylint: disable=too-few-public-methods
    r"""Open-system evolution of both qubits in the squeezed thermal bath.

    The register evolves for a time :math:`t` under the master-equation
    generator of the device it runs on,

    .. math:: \rho \mapsto e^{\mathcal{L}t}\rho.

    **Details:**

    * Number of wires: 2
    * Number of parameters: 1
    * Gradient recipe: finite differences

    Args:
        t (float): evolution time in units of the inverse decay rate
        wires (Sequence[int]): the two subsystems the bath acts on
    """
    num_params = 1
    num_wires = 2
    par_domain = "R"
    grad_method = "F"

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
Exceptions
==========

.. currentmodule:: pennylane_sqbath.exceptions

Errors raised by the simulator. All of them derive from :class:`SqBathError`,
and most also derive from the builtin exception that best describes them, so
callers may catch either.
"""


class SqBathError(Exception):
    """Base class for all errors raised by the squeezed-bath simulator."""


class SymmetryError(SqBathError, ValueError):
    """A matrix expected to be Hermitian is not."""


class PositivityError(SqBathError, ValueError):
    """A matrix expected to be positive semidefinite has a negative eigenvalue."""


class NormalizationError(SqBathError, ValueError):
    """A state does not have unit trace (or unit norm)."""


class StructureError(SqBathError, ValueError):
    """A closed-form routine received a state without the required X structure."""


class IntegrationError(SqBathError, RuntimeError):
    """Time propagation failed or drifted out of tolerance."""


class ConfigError(SqBathError, ValueError):
    """Invalid run configuration."""


class PhysicsInvariantError(SqBathError, RuntimeError):
    """A physical invariant (trace, positivity, ordering of measures) was violated."""


class CollectiveShiftWarning(UserWarning):
    """The interqubit distance is close to the divergence of the collective shift."""

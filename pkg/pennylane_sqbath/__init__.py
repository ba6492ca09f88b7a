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
"""
Squeezed thermal bath simulator for two collectively decohering qubits,
with a PennyLane device, correlation measures and a sweep-driving CLI.
"""
from ._version import __version__

from .bath import BathParams, build_liouvillian  # pylint: disable=unused-import
from .devices import SqueezedBathDevice  # pylint: disable=unused-import
from .evolve import initial_state_eg, propagate, trajectory  # pylint: disable=unused-import
from .exceptions import *  # pylint: disable=wildcard-import,unused-wildcard-import
from .measures import measure_report  # pylint: disable=unused-import
from .teleport import teleport_report  # pylint: disable=unused-import

from .ops import *  # pylint: disable=wildcard-import,unused-wildcard-import

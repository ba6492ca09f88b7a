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
Unit tests for the brute-force oracles in :mod:`pennylane_sqbath.oracle`.
"""
import logging as log
import math

import numpy as np
import pytest

from defaults import (
    BaseTest,
    EG,
    MAXIMALLY_MIXED,
    PHI_PLUS,
    PSI_MINUS,
    random_density_matrix,
    random_su2,
    random_x_state,
    werner,
)
from pennylane_sqbath.bath import BathParams, build_liouvillian
from pennylane_sqbath.evolve import initial_state_eg, state_at, trajectory
from pennylane_sqbath.exceptions import IntegrationError
from pennylane_sqbath.linalg import kron
from pennylane_sqbath.measures import consonance, discord, lqu
from pennylane_sqbath.oracle import (
    avg_fidelity_monte_carlo,
    consonance_general,
    diagonalize_correlations,
    discord_grid,
    lqu_minimize,
    rk4_trajectory,
    skew_information,
    teleportation_channel,
)
from pennylane_sqbath.teleport import correlation_matrix, teleport_report

log.getLogger('defaults')


class DiscordGridTest(BaseTest):
    """test the brute-force discord."""

    def test_bell_state(self):
        self.logTestName()
        self.assertAlmostEqual(discord_grid(PHI_PLUS), 1, delta=1e-8)

    def test_product_state(self):
        self.logTestName()
        self.assertAlmostEqual(discord_grid(EG), 0, delta=1e-8)

    def test_werner(self):
        self.logTestName()
        self.assertAlmostEqual(discord_grid(werner(0.5)), discord(werner(0.5)), delta=1e-8)

    def test_general_state_through_discord(self):
        self.logTestName()
        rho = random_density_matrix(np.random.default_rng(83))
        self.assertEqual(discord(rho, allow_oracle=True), discord_grid(rho))


def test_fast_discord_matches_grid_on_x_states():
    """The X-state discord agrees with direct minimization"""
    rng = np.random.default_rng(89)
    for _ in range(500):
        rho = random_x_state(rng)
        assert discord(rho) == pytest.approx(discord_grid(rho), abs=1e-4)


def test_fast_discord_matches_grid_on_evolved_states():
    """The X-state discord agrees with direct minimization along a trajectory"""
    traj = trajectory(build_liouvillian(BathParams(r12=0.2)), initial_state_eg(), 4.0, 0.5)
    for rho in traj.states:
        assert discord(rho) == pytest.approx(discord_grid(rho), abs=1e-4)


class LQUTest(BaseTest):
    """test the brute-force local quantum uncertainty."""

    def test_skew_information_of_bell_state(self):
        self.logTestName()
        n = np.array([[1.0, 0, 0], [0, 1.0, 0], [0, 0, 1.0]])
        self.assertAllAlmostEqual(skew_information(PHI_PLUS, n), 1, delta=1e-12)

    def test_skew_information_of_maximally_mixed(self):
        self.logTestName()
        self.assertAllAlmostEqual(skew_information(MAXIMALLY_MIXED, np.eye(3)), 0, delta=1e-12)

    def test_bell_state(self):
        self.logTestName()
        self.assertAlmostEqual(lqu_minimize(PSI_MINUS), 1, delta=1e-8)


def test_lqu_closed_form_matches_minimization():
    """The eigenvalue formula for the LQU agrees with direct minimization"""
    rng = np.random.default_rng(97)
    states = [random_density_matrix(rng) for _ in range(10)]
    states += [random_x_state(rng) for _ in range(10)]
    for rho in states:
        assert lqu(rho) == pytest.approx(lqu_minimize(rho), abs=1e-6)


class ConsonanceGeneralTest(BaseTest):
    """test the consonance of general states."""

    def test_x_states(self):
        self.logTestName()
        rng = np.random.default_rng(101)
        for _ in range(20):
            rho = random_x_state(rng)
            self.assertAlmostEqual(consonance_general(rho), consonance(rho), delta=1e-12)

    def test_local_unitary_invariance(self):
        self.logTestName()
        rng = np.random.default_rng(103)
        for _ in range(10):
            rho = random_density_matrix(rng)
            u = kron(random_su2(rng), random_su2(rng))
            self.assertAlmostEqual(
                consonance_general(u @ rho @ u.conj().T), consonance_general(rho), delta=1e-9
            )

    def test_product_state(self):
        self.logTestName()
        self.assertAlmostEqual(consonance_general(EG), 0, delta=1e-15)


class RK4Test(BaseTest):
    """test the Runge-Kutta reference integrator."""

    def test_matches_exact_propagation(self):
        self.logTestName()
        liouvillian = build_liouvillian(BathParams(r12=0.2))
        exact = trajectory(liouvillian, initial_state_eg(), 2.0, 0.002)
        approx = rk4_trajectory(liouvillian, initial_state_eg(), 2.0, 0.002)
        self.assertEqual(len(exact), len(approx))
        self.assertAllAlmostEqual(exact.states, approx.states, delta=1e-7)

    def test_step_too_large(self):
        self.logTestName()
        with self.assertRaises(IntegrationError):
            rk4_trajectory(build_liouvillian(BathParams()), initial_state_eg(), 1.0, 0.5)


class TeleportationChannelTest(BaseTest):
    """test the explicit teleportation protocol."""

    def test_perfect_resource(self):
        self.logTestName()
        channel = teleportation_channel(PHI_PLUS)
        for i in range(2):
            for j in range(2):
                e_ij = np.zeros((2, 2))
                e_ij[i, j] = 1
                self.assertAllAlmostEqual(channel[i, j], e_ij, delta=1e-14)

    def test_trace_preserving(self):
        self.logTestName()
        channel = teleportation_channel(random_density_matrix(np.random.default_rng(107)))
        for i in range(2):
            for j in range(2):
                self.assertAlmostEqual(np.trace(channel[i, j]), float(i == j), delta=1e-14)

    def test_diagonalized_correlations(self):
        self.logTestName()
        rho = random_density_matrix(np.random.default_rng(109))
        t = correlation_matrix(diagonalize_correlations(rho))
        self.assertAllAlmostEqual(t - np.diag(np.diag(t)), 0, delta=1e-12)
        self.assertAllAlmostEqual(
            np.sort(np.abs(np.diag(t))),
            np.sort(np.linalg.svd(correlation_matrix(rho), compute_uv=False)),
            delta=1e-12,
        )


class MonteCarloFidelityTest(BaseTest):
    """test the sampled teleportation fidelity."""

    def test_bell_state(self):
        self.logTestName()
        result = avg_fidelity_monte_carlo(PSI_MINUS, n_samples=10 ** 4)
        self.assertAlmostEqual(result.mean, 1, delta=1e-12)
        self.assertAlmostEqual(result.stddev, 0, delta=1e-12)

    def test_maximally_mixed(self):
        self.logTestName()
        result = avg_fidelity_monte_carlo(MAXIMALLY_MIXED, n_samples=10 ** 4)
        self.assertAlmostEqual(result.mean, 0.5, delta=1e-12)

    def test_too_few_samples(self):
        self.logTestName()
        with self.assertRaises(ValueError):
            avg_fidelity_monte_carlo(PHI_PLUS, n_samples=100)

    def test_seeded(self):
        self.logTestName()
        rho = werner(0.6)
        self.assertEqual(
            avg_fidelity_monte_carlo(rho, n_samples=10 ** 4, seed=5),
            avg_fidelity_monte_carlo(rho, n_samples=10 ** 4, seed=5),
        )


EVOLVED_RESOURCES = [(r12, t) for r12 in (0.1, 0.3, 0.5, 0.8, 1.1) for t in (0.5, 1.0, 2.0, 4.0)]


@pytest.mark.parametrize("r12,t", EVOLVED_RESOURCES)
def test_monte_carlo_matches_closed_form(r12, t):
    """Sampled mean and spread of the fidelity agree with the correlation-matrix formulas"""
    n = 10 ** 5
    rho = state_at(BathParams(r12=r12), t)
    report = teleport_report(rho)
    result = avg_fidelity_monte_carlo(rho, n_samples=n, seed=11)
    assert abs(result.mean - report.svd_fidelity) <= 3 * result.stddev / math.sqrt(n) + 1e-12
    assert result.stddev == pytest.approx(report.svd_deviation, rel=2e-2, abs=1e-4)

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
Unit tests for the correlation measures in :mod:`pennylane_sqbath.measures`.
"""
import logging as log
import math

import numpy as np
import pytest

from defaults import (
    BaseTest,
    EG,
    GG,
    MAXIMALLY_MIXED,
    PHI_MINUS,
    PHI_PLUS,
    PSI_MINUS,
    PSI_PLUS,
    random_density_matrix,
    random_su2,
    random_x_state,
    werner,
)
from pennylane_sqbath.bath import BathParams, build_liouvillian
from pennylane_sqbath.evolve import initial_state_eg, state_at, trajectory
from pennylane_sqbath.exceptions import NormalizationError, PhysicsInvariantError, StructureError
from pennylane_sqbath.linalg import kron
from pennylane_sqbath.measures import (
    MeasureReport,
    concurrence,
    conditional_entropy,
    consonance,
    default_step,
    directions,
    discord,
    dressed_basis,
    lqu,
    lqu_matrix,
    measure_report,
    mutual_information,
    qfi,
    qfi_family,
    qfi_from_derivative,
    qfi_pure,
    qfi_series,
    rel_entropy_coherence,
)

log.getLogger('defaults')


def werner_discord(p):
    """Closed-form discord of the Werner state."""
    def xlog(x):
        return x * math.log2(x) if x > 0 else 0.0
    return (xlog(1 - p) - 2 * xlog(1 + p) + xlog(1 + 3 * p)) / 4


def x_state_concurrence(rho):
    """Closed-form concurrence of an X state."""
    rho = np.asarray(rho)
    a = abs(rho[1, 2]) - math.sqrt(rho[0, 0].real * rho[3, 3].real)
    b = abs(rho[0, 3]) - math.sqrt(rho[1, 1].real * rho[2, 2].real)
    return 2 * max(0.0, a, b)


def z_rotation(angle):
    return np.diag([np.exp(-0.5j * angle), np.exp(0.5j * angle)])


class ReferenceStateTest(BaseTest):
    """test every measure on states with known values."""

    def test_bell_state(self):
        self.logTestName()
        self.assertAlmostEqual(rel_entropy_coherence(PHI_PLUS, basis="computational"), 1, delta=1e-8)
        self.assertAlmostEqual(concurrence(PHI_PLUS), 1, delta=1e-8)
        self.assertAlmostEqual(discord(PHI_PLUS), 1, delta=1e-8)
        self.assertAlmostEqual(consonance(PHI_PLUS), 1, delta=1e-8)
        self.assertAlmostEqual(lqu(PHI_PLUS), 1, delta=1e-8)

    def test_all_bell_states(self):
        self.logTestName()
        for rho in (PHI_PLUS, PHI_MINUS, PSI_PLUS, PSI_MINUS):
            self.assertAlmostEqual(concurrence(rho), 1, delta=1e-8)
            self.assertAlmostEqual(mutual_information(rho), 2, delta=1e-8)
            self.assertAlmostEqual(discord(rho), 1, delta=1e-8)

    def test_maximally_mixed(self):
        self.logTestName()
        for basis in ("dressed", "computational"):
            self.assertAlmostEqual(rel_entropy_coherence(MAXIMALLY_MIXED, basis=basis), 0, delta=1e-8)
        self.assertAlmostEqual(concurrence(MAXIMALLY_MIXED), 0, delta=1e-8)
        self.assertAlmostEqual(discord(MAXIMALLY_MIXED), 0, delta=1e-8)
        self.assertAlmostEqual(consonance(MAXIMALLY_MIXED), 0, delta=1e-8)
        self.assertAlmostEqual(lqu(MAXIMALLY_MIXED), 0, delta=1e-8)

    def test_product_state(self):
        self.logTestName()
        self.assertAlmostEqual(rel_entropy_coherence(EG, basis="computational"), 0, delta=1e-8)
        self.assertAlmostEqual(concurrence(EG), 0, delta=1e-8)
        self.assertAlmostEqual(discord(EG), 0, delta=1e-8)
        self.assertAlmostEqual(consonance(EG), 0, delta=1e-8)
        self.assertAlmostEqual(lqu(EG), 0, delta=1e-8)
        self.assertAlmostEqual(mutual_information(EG), 0, delta=1e-8)

    def test_werner(self):
        self.logTestName()
        rho = werner(0.5)
        self.assertAlmostEqual(concurrence(rho), 0.25, delta=1e-8)
        self.assertAlmostEqual(consonance(rho), 0.5, delta=1e-8)
        self.assertAlmostEqual(discord(rho), werner_discord(0.5), delta=1e-7)


@pytest.mark.parametrize("p", np.linspace(0, 1, 11))
def test_werner_family(p):
    """Concurrence and discord of Werner states follow their closed forms"""
    rho = werner(p)
    assert concurrence(rho) == pytest.approx(max(0.0, (3 * p - 1) / 2), abs=1e-8)
    assert discord(rho) == pytest.approx(werner_discord(p), abs=1e-7)


class CoherenceTest(BaseTest):
    """test the relative entropy of coherence."""

    def test_dressed_basis_unitary(self):
        self.logTestName()
        u = dressed_basis()
        self.assertAllAlmostEqual(u.conj().T @ u, np.eye(4), delta=1e-15)

    def test_dressed_states_are_incoherent(self):
        self.logTestName()
        for rho in (PSI_PLUS, PSI_MINUS, GG):
            self.assertAlmostEqual(rel_entropy_coherence(rho, basis="dressed"), 0, delta=1e-8)

    def test_basis_dependence(self):
        self.logTestName()
        self.assertAlmostEqual(rel_entropy_coherence(PSI_PLUS, basis="computational"), 1, delta=1e-8)
        self.assertAlmostEqual(rel_entropy_coherence(EG, basis="dressed"), 1, delta=1e-8)

    def test_unknown_basis(self):
        self.logTestName()
        with self.assertRaises(ValueError):
            rel_entropy_coherence(EG, basis="energy")


class DiscordTest(BaseTest):
    """test the quantum discord of X states."""

    def test_classical_state(self):
        self.logTestName()
        rho = np.diag([0.1, 0.2, 0.3, 0.4]).astype(complex)
        self.assertAlmostEqual(discord(rho), 0, delta=1e-8)

    def test_non_x_state_rejected(self):
        self.logTestName()
        rho = random_density_matrix(np.random.default_rng(3))
        with self.assertRaises(StructureError):
            discord(rho)

    def test_conditional_entropy_of_product_state(self):
        self.logTestName()
        self.assertAlmostEqual(conditional_entropy(EG, np.array([0.0, 0.0, 1.0])), 0, delta=1e-12)

    def test_conditional_entropy_is_vectorized(self):
        self.logTestName()
        rho = werner(0.3)
        n = directions(np.linspace(0, math.pi, 4), np.linspace(0, math.pi, 3))
        values = conditional_entropy(rho, n)
        self.assertEqual(values.shape, (12,))
        for k in range(12):
            self.assertAlmostEqual(values[k], conditional_entropy(rho, n[k]), delta=1e-14)

    def test_directions_are_unit_vectors(self):
        self.logTestName()
        n = directions(np.linspace(0, math.pi, 7), np.linspace(0, 2 * math.pi, 5))
        self.assertAllAlmostEqual(np.linalg.norm(n, axis=1), 1, delta=1e-15)


def test_x_state_measures_are_physical():
    """Bounds and the consonance ordering hold on random X states"""
    rng = np.random.default_rng(41)
    for _ in range(50):
        rho = random_x_state(rng)
        c = concurrence(rho)
        assert 0 <= c <= 1
        assert c == pytest.approx(x_state_concurrence(rho), abs=1e-8)
        assert consonance(rho) >= c - 1e-9
        assert discord(rho) >= -1e-9
        assert 0 <= lqu(rho) <= 1


def test_discord_invariant_under_local_z_rotations():
    """Rotations about z on either qubit keep the X pattern and the discord"""
    rng = np.random.default_rng(43)
    for _ in range(10):
        rho = random_x_state(rng)
        u = kron(z_rotation(rng.uniform(0, 2 * math.pi)), z_rotation(rng.uniform(0, 2 * math.pi)))
        assert discord(u @ rho @ u.conj().T) == pytest.approx(discord(rho), abs=1e-7)


def test_local_unitary_invariance():
    """Concurrence and LQU do not change under local unitaries"""
    rng = np.random.default_rng(47)
    for _ in range(20):
        rho = random_density_matrix(rng)
        u = kron(random_su2(rng), random_su2(rng))
        rotated = u @ rho @ u.conj().T
        assert concurrence(rotated) == pytest.approx(concurrence(rho), abs=1e-9)
        assert lqu(rotated) == pytest.approx(lqu(rho), abs=1e-9)


def test_lqu_matrix_symmetric():
    """The skew-information matrix is real symmetric with eigenvalues in [0, 1]"""
    rho = random_density_matrix(np.random.default_rng(53))
    w = lqu_matrix(rho)
    assert np.allclose(w, w.T, atol=1e-15)
    eigenvalues = np.linalg.eigvalsh(w)
    assert eigenvalues[0] >= -1e-12
    assert eigenvalues[-1] <= 1 + 1e-12


class ConsonanceTest(BaseTest):
    """test the X-state consonance."""

    def test_closed_form(self):
        self.logTestName()
        rho = random_x_state(np.random.default_rng(59))
        self.assertAlmostEqual(consonance(rho), 2 * (abs(rho[1, 2]) + abs(rho[0, 3])), delta=1e-15)

    def test_non_x_state_rejected(self):
        self.logTestName()
        with self.assertRaises(StructureError):
            consonance(random_density_matrix(np.random.default_rng(61)))


class QFITest(BaseTest):
    """test the quantum Fisher information."""

    @staticmethod
    def phase_family(theta):
        psi = np.array([np.exp(-1j * theta), 0, 0, np.exp(1j * theta)]) / math.sqrt(2)
        return np.outer(psi, psi.conj())

    @staticmethod
    def rotation_family(theta):
        psi = np.array([math.cos(theta), 0, 0, math.sin(theta)])
        return np.outer(psi, psi).astype(complex)

    def test_pure_phase_family(self):
        self.logTestName()
        self.assertAlmostEqual(qfi_family(self.phase_family, 0.3), 4, delta=1e-6)

    def test_pure_rotation_family(self):
        self.logTestName()
        for theta in (0.2, 0.4, 1.1):
            self.assertAlmostEqual(qfi_family(self.rotation_family, theta), 4, delta=1e-5)

    def test_rotation_family_step_halving(self):
        self.logTestName()
        coarse = qfi_family(self.rotation_family, 0.4, h=1e-3)
        fine = qfi_family(self.rotation_family, 0.4, h=5e-4)
        self.assertAlmostEqual(coarse, fine, delta=1e-4 * coarse)

    def test_rotation_family_matches_pure_formula(self):
        self.logTestName()
        theta = 0.4
        psi = np.array([math.cos(theta), 0, 0, math.sin(theta)])
        dpsi = np.array([-math.sin(theta), 0, 0, math.cos(theta)])
        self.assertAlmostEqual(qfi_family(self.rotation_family, theta), qfi_pure(psi, dpsi), delta=1e-5)

    def test_pure_state_formula(self):
        self.logTestName()
        theta = 0.3
        psi = np.array([np.exp(-1j * theta), 0, 0, np.exp(1j * theta)]) / math.sqrt(2)
        dpsi = np.array([-1j * np.exp(-1j * theta), 0, 0, 1j * np.exp(1j * theta)]) / math.sqrt(2)
        self.assertAlmostEqual(qfi_pure(psi, dpsi), 4, delta=1e-12)

    def test_pure_state_normalization(self):
        self.logTestName()
        with self.assertRaises(NormalizationError):
            qfi_pure(np.array([1, 1, 0, 0]), np.zeros(4))

    def test_zero_derivative(self):
        self.logTestName()
        self.assertEqual(qfi_from_derivative(werner(0.4), np.zeros((4, 4))), 0)

    def test_default_step(self):
        self.logTestName()
        self.assertEqual(default_step(0.5), 1e-4)
        self.assertAlmostEqual(default_step(-3.0), 3e-4, delta=1e-18)

    def test_initial_state_carries_no_information(self):
        self.logTestName()
        self.assertEqual(qfi(BathParams(r12=0.5), 0.0), 0)

    def test_step_halving(self):
        self.logTestName()
        params = BathParams(r12=0.5)
        coarse = qfi(params, 1.0, h=1e-4)
        fine = qfi(params, 1.0, h=5e-5)
        self.assertGreater(coarse, 0)
        self.assertAlmostEqual(coarse, fine, delta=1e-4 * coarse)

    def test_domain_boundary(self):
        self.logTestName()
        with self.assertRaises(ValueError):
            qfi(BathParams(r12=5e-5), 1.0, h=1e-4)

    def test_other_parameters(self):
        self.logTestName()
        self.assertGreaterEqual(qfi(BathParams(), 1.0, theta="temperature"), 0)
        self.assertGreaterEqual(qfi(BathParams(), 1.0, theta="squeeze"), 0)

    def test_series_matches_pointwise(self):
        self.logTestName()
        params = BathParams(r12=0.3)
        series = qfi_series(params, 1.0, 0.5)
        self.assertEqual(series.shape, (3,))
        self.assertEqual(series[0], 0)
        for value, t in zip(series[1:], (0.5, 1.0)):
            self.assertAlmostEqual(value, qfi(params, t), delta=1e-6 * max(1.0, value))


def sign_changes(series, floor=1e-9):
    """Sign changes of the discrete derivative, ignoring steps below ``floor`` times the peak."""
    steps = np.diff(np.asarray(series, dtype=float))
    steps = steps[np.abs(steps) > floor * np.max(np.abs(series))]
    return int(np.sum(np.sign(steps[1:]) != np.sign(steps[:-1])))


class BathRegimeTest(BaseTest):
    """test the collective and independent regimes of the bath at T=1, r=0.35."""

    def test_independent_regime_correlations(self):
        self.logTestName()
        rho = state_at(BathParams(r12=1.1), 1.0)
        self.assertLess(concurrence(rho), 0.02)
        self.assertLess(discord(rho), 0.02)
        self.assertGreater(consonance(rho), 0.02)

    def test_collective_regime_is_more_sensitive(self):
        self.logTestName()
        self.assertGreater(qfi(BathParams(r12=0.1), 1.0), qfi(BathParams(r12=1.1), 1.0))

    def test_qfi_oscillates_only_in_collective_regime(self):
        self.logTestName()
        collective = qfi_series(BathParams(r12=0.1), 10.0, 0.05)
        independent = qfi_series(BathParams(r12=1.1), 10.0, 0.05)
        self.assertGreaterEqual(sign_changes(collective), 2)
        self.assertLessEqual(sign_changes(independent), 1)

    def test_sign_changes(self):
        self.logTestName()
        self.assertEqual(sign_changes([0, 1, 2, 1, 0]), 1)
        self.assertEqual(sign_changes([0, 1, 0, 1, 0]), 3)
        self.assertEqual(sign_changes([1, 2, 2 + 1e-12, 3]), 0)


def test_consonance_bounds_concurrence_over_time():
    """Consonance never falls below concurrence along the r12=0.2 trajectory"""
    traj = trajectory(build_liouvillian(BathParams(r12=0.2)), initial_state_eg(), 10.0, 0.05)
    for t, rho in traj:
        assert consonance(rho) >= concurrence(rho) - 1e-9, "violated at t={}".format(t)


def test_consonance_bounds_concurrence_over_distance():
    """Consonance never falls below concurrence across the r12 sweep at t=1"""
    for r12 in np.round(np.arange(0.05, 1.5 + 1e-9, 0.01), 12):
        rho = state_at(BathParams(r12=float(r12)), 1.0)
        assert consonance(rho) >= concurrence(rho) - 1e-9, "violated at r12={}".format(r12)


class MeasureReportTest(BaseTest):
    """test the combined measure report."""

    def test_bell_state(self):
        self.logTestName()
        report = measure_report(PHI_PLUS, basis="computational").check()
        self.assertAlmostEqual(report.c_rel, 1, delta=1e-8)
        self.assertAlmostEqual(report.concurrence, 1, delta=1e-8)
        self.assertAllAlmostEqual(report.correlation_t, np.diag([1, -1, 1]), delta=1e-12)
        self.assertIsNone(report.qfi)

    def test_as_dict(self):
        self.logTestName()
        d = measure_report(MAXIMALLY_MIXED, qfi=0.0).as_dict()
        self.assertEqual(
            set(d), {"c_rel", "concurrence", "discord", "consonance", "lqu", "correlation_t", "qfi"}
        )
        self.assertEqual(d["correlation_t"], np.zeros((3, 3)).tolist())

    def test_ordering_violation(self):
        self.logTestName()
        report = MeasureReport(
            c_rel=0, concurrence=0.5, discord=0, consonance=0.1, lqu=0, correlation_t=np.zeros((3, 3))
        )
        with self.assertRaises(PhysicsInvariantError):
            report.check()

    def test_non_finite(self):
        self.logTestName()
        report = MeasureReport(
            c_rel=np.nan, concurrence=0, discord=0, consonance=0, lqu=0, correlation_t=np.zeros((3, 3))
        )
        with self.assertRaises(PhysicsInvariantError):
            report.check()

    def test_non_x_state(self):
        self.logTestName()
        rho = random_density_matrix(np.random.default_rng(67))
        with self.assertRaises(StructureError):
            measure_report(rho)

import logging
import math

import numpy as np
import pytest

from eigensolver import (
    ConvergenceError,
    DenseSolver,
    LanczosSolver,
    SolverManager,
    SolverOptions,
    dense_ground_state,
    ground_state,
)
from graphs import RootedGraph, catalog_graph, complete_graph, dimer
from hamiltonian import Couplings, build_hamiltonian

CATALOG_IDS = range(3, 14)


def test_solver_options_defaults_from_config():
    opts = SolverOptions.from_config()
    assert opts.tolerance == 1e-10
    assert opts.max_iterations == 5000
    assert opts.dense_threshold == 2000
    assert opts.degeneracy_warning_gap == 1e-8


def test_solver_options_validation_and_overrides():
    with pytest.raises(ValueError):
        SolverOptions(tolerance=0.0)
    opts = SolverOptions.from_config({'tolerance': 1e-8, 'unknown': 3})
    assert opts.tolerance == 1e-8
    assert opts.with_overrides(tolerance=None, workers=2).tolerance == 1e-8
    assert opts.with_overrides(workers=2).workers == 2


def test_dimer_ground_energy():
    gs = dense_ground_state(build_hamiltonian(dimer(), 2, Couplings(1.0, 1.0)))
    assert gs.energy == pytest.approx(3.0 - math.sqrt(5.0), abs=1e-12)
    assert gs.solver_used == 'dense'
    assert np.linalg.norm(gs.vector) == pytest.approx(1.0)
    assert gs.residual < 1e-12


def test_ground_vector_is_read_only():
    gs = dense_ground_state(build_hamiltonian(dimer(), 2, Couplings(1.0)))
    with pytest.raises(ValueError):
        gs.vector[0] = 0.0


def test_zero_tunneling_unit_filling_energy():
    gs = ground_state(build_hamiltonian(catalog_graph(5), 4, Couplings(0.0, 1.0)))
    assert gs.energy == pytest.approx(4.0)
    assert not gs.degenerate


def test_one_dimensional_sector():
    H = build_hamiltonian(RootedGraph(1, ()), 3, Couplings(0.0, 1.0))
    for solver in (DenseSolver(), LanczosSolver()):
        gs = solver.solve(H)
        assert gs.energy == pytest.approx(9.0)
        assert gs.gap_estimate == float('inf')


@pytest.mark.parametrize("graph_id", CATALOG_IDS)
def test_lanczos_matches_dense_oracle(graph_id):
    g = catalog_graph(graph_id)
    rng = np.random.default_rng(graph_id)
    lanczos = SolverManager('lanczos')
    for tau in rng.uniform(0.0, 20.0, size=20):
        H = build_hamiltonian(g, 4, Couplings(float(tau), 1.0))
        reference = dense_ground_state(H)
        gs = lanczos.ground_state(H)
        assert gs.solver_used == 'lanczos'
        assert abs(gs.energy - reference.energy) <= 1e-8
        assert abs(abs(gs.vector @ reference.vector) - 1.0) <= 1e-8


def test_lanczos_on_larger_sector():
    H = build_hamiltonian(complete_graph(7), 7, Couplings(0.3, 1.0))
    reference = dense_ground_state(H)
    gs = LanczosSolver().solve(H)
    assert gs.energy == pytest.approx(reference.energy, abs=1e-8)
    assert gs.residual <= 1e-10


@pytest.mark.parametrize("graph_id", CATALOG_IDS)
@pytest.mark.parametrize("tau", [0.5, 1.0, 5.0])
def test_perron_positivity(graph_id, tau):
    gs = ground_state(build_hamiltonian(catalog_graph(graph_id), 4, Couplings(tau, 1.0)))
    assert np.all(gs.vector > 1e-14)


def test_warm_start_saves_iterations():
    H = build_hamiltonian(complete_graph(6), 6, Couplings(0.8, 1.0))
    cold = LanczosSolver().solve(H)
    warm = LanczosSolver().solve(H, start_vector=dense_ground_state(H).vector)
    assert warm.iterations < cold.iterations
    assert warm.energy == pytest.approx(cold.energy, abs=1e-9)


def test_lanczos_rejects_bad_start_vector():
    H = build_hamiltonian(dimer(), 2, Couplings(1.0))
    with pytest.raises(ValueError):
        LanczosSolver().solve(H, start_vector=np.ones(5))


def test_lanczos_reports_non_convergence():
    H = build_hamiltonian(complete_graph(5), 5, Couplings(1.0, 1.0))
    opts = SolverOptions(tolerance=1e-14, max_iterations=2)
    with pytest.raises(ConvergenceError) as excinfo:
        LanczosSolver(opts).solve(H)
    assert excinfo.value.best_residual > 1e-14
    assert excinfo.value.iterations >= 2


def test_degenerate_ground_state_is_flagged(caplog):
    H = build_hamiltonian(RootedGraph(2, (), name="pair"), 1, Couplings(0.0, 1.0))
    with caplog.at_level(logging.WARNING):
        gs = dense_ground_state(H)
    assert gs.degenerate
    assert "degenerate" in caplog.text


TWO_TRIANGLES = RootedGraph(6, ((0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)), name="two-triangles")


@pytest.mark.parametrize("g, N, tau", [
    (TWO_TRIANGLES, 3, 1.0),
    (RootedGraph(2, (), name="pair"), 1, 0.0),
    (catalog_graph(5), 4, 1.14),
    (complete_graph(5), 5, 0.4),
])
def test_lanczos_degeneracy_flag_matches_dense_oracle(g, N, tau):
    H = build_hamiltonian(g, N, Couplings(tau, 1.0, allow_trivial=True))
    reference = dense_ground_state(H)
    gs = LanczosSolver().solve(H)
    assert gs.degenerate == reference.degenerate
    assert isinstance(gs.degenerate, bool)
    assert gs.gap_estimate == pytest.approx(reference.gap_estimate, abs=1e-6)


def test_swap_symmetric_degeneracy_is_detected():
    # uniform start stays symmetric under swapping the two triangles
    H = build_hamiltonian(TWO_TRIANGLES, 3, Couplings(1.0, 1.0))
    gs = LanczosSolver().solve(H)
    assert gs.degenerate
    assert gs.gap_estimate < 1e-8


@pytest.mark.parametrize("method", ['dense', 'lanczos'])
@pytest.mark.parametrize("graph_id", [4, 5, 10, 13])
def test_rayleigh_quotient_equals_energy(method, graph_id):
    H = build_hamiltonian(catalog_graph(graph_id), 4, Couplings(2.5, 1.0))
    gs = ground_state(H, method=method)
    assert abs(gs.vector @ H.matvec(gs.vector) - gs.energy) <= 1e-10


def test_dense_guard():
    H = build_hamiltonian(catalog_graph(13), 4, Couplings(1.0))
    with pytest.raises(ValueError):
        DenseSolver(SolverOptions(dense_guard=10)).solve(H)


def test_solver_manager_dispatch():
    small = build_hamiltonian(dimer(), 2, Couplings(1.0))
    manager = SolverManager('auto', SolverOptions(dense_threshold=2))
    assert manager.solver_for(small).name == 'lanczos'
    assert SolverManager('auto').solver_for(small).name == 'dense'
    with pytest.raises(ValueError):
        SolverManager('arnoldi')
    assert SolverManager.get_available_solvers() == ['auto', 'dense', 'lanczos']

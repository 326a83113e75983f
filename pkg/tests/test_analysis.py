import math

import numpy as np
import pytest

from analysis import (
    NoInteriorPeakError,
    SweepError,
    TauGrid,
    complete_scan,
    concordance,
    dimer_check,
    expected_variance_peak,
    find_derivative_peak,
    find_entanglement_max,
    finite_difference,
    golden_section_max,
    ordering_report,
    pendant_scan,
    solve_point,
    sweep,
)
from eigensolver import SolverManager, SolverOptions
from graphs import GraphCatalog, catalog_graph, complete_graph, dimer
from observables import dimer_variance_derivative

CATALOG_IDS = list(range(3, 14))
SETS = GraphCatalog().sets


@pytest.fixture(scope="module")
def dimer_sweep():
    return sweep(dimer(), 2, 1.0, TauGrid(0.0, 20.0, 201))


@pytest.fixture(scope="module")
def reports():
    return {tau: ordering_report(CATALOG_IDS, 4, 1.0, tau) for tau in (0.1, 20.0)}


def entanglement_of(report, graph_id):
    return next(entry.entanglement for entry in report.entries if entry.graph_id == graph_id)


def test_tau_grid():
    grid = TauGrid(0.0, 20.0, 401)
    assert grid.spacing == pytest.approx(0.05)
    points = grid.points()
    assert points[0] == 0.0
    assert points[-1] == 20.0
    assert points.size == 401
    for bad in ((-1.0, 1.0, 5), (1.0, 1.0, 5), (0.0, 1.0, 1)):
        with pytest.raises(ValueError):
            TauGrid(*bad)


def test_sweep_rows_follow_grid(dimer_sweep):
    assert len(dimer_sweep.points) == 201
    np.testing.assert_allclose(dimer_sweep.taus, TauGrid(0.0, 20.0, 201).points())
    assert dimer_sweep.entanglement_derivative.shape == (201,)
    assert dimer_sweep.points[0].entanglement == pytest.approx(0.0, abs=1e-12)
    assert dimer_sweep.points[-1].entanglement == pytest.approx(0.93823, abs=1e-3)


def test_sweep_means_and_variances(dimer_sweep):
    np.testing.assert_allclose(dimer_sweep.means(0) + dimer_sweep.means(1), 2.0, atol=1e-10)
    np.testing.assert_allclose(dimer_sweep.variances(0), dimer_sweep.variances(1), atol=1e-10)
    with pytest.raises(ValueError):
        dimer_sweep.variances(2)


def test_sweep_to_dict(dimer_sweep):
    data = dimer_sweep.to_dict()
    assert data['graph'] == 'dimer'
    assert data['grid'] == {'tau_min': 0.0, 'tau_max': 20.0, 'steps': 201}
    assert len(data['points']) == 201
    assert set(data['points'][0]) == {
        'tau', 'energy', 'entanglement', 'means', 'variances', 'dE_dtau', 'dvar_dtau', 'degenerate',
    }


def test_parallel_and_descending_sweeps_agree():
    g = catalog_graph(7)
    grid = TauGrid(0.0, 5.0, 21)
    serial = sweep(g, 4, 1.0, grid)
    threaded = sweep(g, 4, 1.0, grid, workers=3)
    backwards = sweep(g, 4, 1.0, grid, descending=True)
    for other in (threaded, backwards):
        np.testing.assert_allclose(other.taus, serial.taus)
        np.testing.assert_allclose(other.entanglements, serial.entanglements, atol=1e-12)
        np.testing.assert_allclose(other.energies, serial.energies, atol=1e-12)


def test_lanczos_sweep_with_warm_start_matches_dense():
    g = complete_graph(5)
    grid = TauGrid(0.0, 2.0, 11)
    dense = sweep(g, 5, 1.0, grid, method='dense')
    lanczos = sweep(g, 5, 1.0, grid, method='lanczos')
    np.testing.assert_allclose(lanczos.energies, dense.energies, atol=1e-8)
    np.testing.assert_allclose(lanczos.entanglements, dense.entanglements, atol=1e-8)


def test_sweep_rejects_bad_arguments():
    grid = TauGrid(0.0, 1.0, 5)
    with pytest.raises(ValueError):
        sweep(dimer(), 0, 1.0, grid)
    with pytest.raises(ValueError):
        sweep(dimer(), 2, 1.0, grid, variance_vertex=2)


def test_solver_failure_becomes_sweep_error():
    manager = SolverManager('lanczos', SolverOptions(tolerance=1e-14, max_iterations=2))
    with pytest.raises(SweepError) as excinfo:
        solve_point(complete_graph(5), 5, 1.0, 0.7, manager)
    assert excinfo.value.tau == pytest.approx(0.7)


def test_finite_difference_is_exact_on_quadratics():
    x = np.linspace(0.0, 2.0, 21)
    np.testing.assert_allclose(finite_difference(x ** 2, x[1] - x[0]), 2 * x, atol=1e-12)


def test_dimer_variance_peak():
    series = sweep(dimer(), 2, 1.0, TauGrid(0.0, 2.0, 801))
    peak = find_derivative_peak(series, 'variance')
    assert peak.tau == pytest.approx(1.0 / (2.0 * math.sqrt(2.0)), abs=1e-3)
    assert peak.height == pytest.approx(dimer_variance_derivative(peak.tau), abs=1e-4)
    assert peak.vertex == 0


def test_peak_on_boundary_is_reported():
    series = sweep(complete_graph(3), 3, 1.0, TauGrid(0.0, 0.05, 11))
    with pytest.raises(NoInteriorPeakError):
        find_derivative_peak(series, 'variance')


def test_peak_argument_checks(dimer_sweep):
    with pytest.raises(ValueError):
        find_derivative_peak(dimer_sweep, 'energy')
    short = sweep(dimer(), 2, 1.0, TauGrid(0.0, 1.0, 4))
    with pytest.raises(ValueError):
        find_derivative_peak(short, 'variance')


def test_golden_section_max():
    c, d = golden_section_max(lambda x: -(x - 1.3) ** 2, 0.0, 3.0, tol=1e-6)
    assert d - c <= 1e-6
    assert 0.5 * (c + d) == pytest.approx(1.3, abs=1e-6)


def test_entanglement_max_rejects_empty_range():
    with pytest.raises(ValueError):
        find_entanglement_max(dimer(), 2, 1.0, search_range=(2.0, 1.0))
    with pytest.raises(ValueError):
        find_entanglement_max(dimer(), 2, 1.0, tol=0.0)


@pytest.mark.slow
@pytest.mark.parametrize("graph_id, tau_star, tolerance", [(5, 1.14, 0.02), (4, 3.22, 0.05)])
def test_interior_entanglement_maxima(graph_id, tau_star, tolerance):
    result = find_entanglement_max(catalog_graph(graph_id), 4, 1.0)
    assert result.interior
    assert result.tau_star == pytest.approx(tau_star, abs=tolerance)


@pytest.mark.slow
def test_complete_graph_maximum_is_on_boundary():
    result = find_entanglement_max(catalog_graph(13), 4, 1.0)
    assert not result.interior
    assert result.tau_star == pytest.approx(20.0)


def test_dimer_maximum_is_on_boundary():
    result = find_entanglement_max(dimer(), 2, 1.0)
    assert not result.interior
    assert result.tau_star == 20.0


@pytest.mark.parametrize("graph_id", CATALOG_IDS)
def test_ground_energy_non_increasing_in_tau(graph_id):
    series = sweep(catalog_graph(graph_id), 4, 1.0, TauGrid(0.0, 20.0, 81))
    assert np.all(np.diff(series.energies) <= 1e-10)


def test_concordance():
    assert concordance([3.0, 2.0, 1.0], [30.0, 20.0, 10.0]) == 1.0
    assert concordance([3.0, 2.0, 1.0], [10.0, 20.0, 30.0]) == 0.0
    assert concordance([1.0, 1.0], [2.0, 3.0]) is None
    assert concordance([3.0, 2.0, 1.0], [5.0, 5.0, 1.0]) == 1.0


def test_small_tau_orderings(reports):
    report = reports[0.1]
    for chain in ([13, 12, 11, 10], [5, 3, 4], [9, 7, 8, 6]):
        values = [entanglement_of(report, graph_id) for graph_id in chain]
        assert all(a - b > 1e-6 for a, b in zip(values, values[1:]))


def test_large_tau_inversion(reports):
    report = reports[20.0]
    values = [entanglement_of(report, graph_id) for graph_id in (10, 11, 12, 13)]
    assert all(a > b for a, b in zip(values, values[1:]))

    set_b = {graph_id: entanglement_of(report, graph_id) for graph_id in SETS['b']}
    assert max(set_b, key=set_b.get) == 6
    assert min(set_b, key=set_b.get) == 9
    assert set_b[7] > set_b[8]


def test_spectral_concordance_within_sets():
    for ids in SETS.values():
        small = ordering_report(ids, 4, 1.0, 0.1)
        assert small.concordance_lambda_max == 1.0
        assert small.rank_by_entanglement == small.rank_by_lambda_max

        large = ordering_report(ids, 4, 1.0, 20.0)
        assert large.concordance_subgraph_lambda_max == 0.0


def test_ordering_report_to_dict(reports):
    data = reports[0.1].to_dict()
    assert data['tau'] == 0.1
    assert len(data['entries']) == len(CATALOG_IDS)
    assert set(data['entries'][0]) == {'name', 'id', 'entanglement', 'lambda_max', 'subgraph_lambda_max'}


@pytest.mark.slow
def test_complete_graph_scan():
    entries = complete_scan([3, 4, 5, 6, 7], TauGrid(0.0, 1.0, 201))
    heights = []
    locations = []
    for entry in entries:
        assert np.all(np.diff(entry.result.entanglements) > 0)
        assert entry.variance_peak is not None
        heights.append(entry.variance_peak.height)
        locations.append(entry.variance_peak.tau)
    assert all(b > a for a, b in zip(heights, heights[1:]))
    assert all(b < a for a, b in zip(locations, locations[1:]))
    assert entries[0].to_dict()['L'] == 3


@pytest.mark.slow
@pytest.mark.parametrize("graph_id", CATALOG_IDS)
def test_monotonicity_partition(graph_id):
    series = sweep(catalog_graph(graph_id), 4, 1.0, TauGrid(0.0, 20.0, 401))
    derivative = series.entanglement_derivative
    if graph_id in (4, 5):
        signs = np.sign(derivative[np.abs(derivative) > 1e-9])
        assert np.count_nonzero(np.diff(signs)) == 1
    elif graph_id == 3:
        # root pendant on the middle of a two-link path: E peaks near tau=6 and sags slightly
        entanglements = series.entanglements
        peak = int(np.argmax(entanglements))
        assert 0 < peak < len(entanglements) - 1
        assert np.all(derivative[:peak - 1] >= -1e-9)
        assert 0.0 < entanglements[peak] - entanglements[-1] < 5e-3
    else:
        assert np.all(derivative >= -1e-9)


@pytest.mark.slow
def test_pendant_family():
    entries = pendant_scan([4, 5, 6, 7, 8], tau=1.0, epsilon=0.0)
    entanglements = [entry.entanglement for entry in entries]
    overlaps = [entry.condensate_overlap for entry in entries]
    assert all(b < a for a, b in zip(entanglements, entanglements[1:]))
    assert all(b > a for a, b in zip(overlaps, overlaps[1:]))


def test_scaling_invariance():
    manager = SolverManager()
    g = catalog_graph(8)
    base, _ = solve_point(g, 4, 1.0, 0.6, manager)
    scaled, _ = solve_point(g, 4, 3.0, 1.8, manager)
    assert scaled.entanglement == pytest.approx(base.entanglement, abs=1e-10)
    assert scaled.energy == pytest.approx(3.0 * base.energy, abs=1e-9)


def test_dimer_check_passes():
    results = dimer_check()
    assert [result.name for result in results] == ['energy', 'entanglement', 'variance', 'variance_peak']
    assert all(result.passed for result in results)
    assert results[-1].deviation <= 1e-3


def test_dimer_check_scales_with_epsilon():
    results = dimer_check(epsilon=2.0)
    assert all(result.passed for result in results)
    assert expected_variance_peak(2.0) == pytest.approx(0.70711, abs=1e-5)


def test_dimer_check_fails_with_impossible_tolerance():
    results = dimer_check(tolerance=1e-300)
    assert not all(result.passed for result in results[:3])

"""
Ground-state sweeps over a uniform tau grid.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np

from eigensolver import ConvergenceError, GroundState, SolverManager, SolverOptions
from graphs import RootedGraph
from hamiltonian import Couplings, build_hamiltonian
from observables import entanglement, mode_marginal, occupation_moments
from .derivatives import finite_difference

logger = logging.getLogger(__name__)


class SweepError(RuntimeError):
    """A grid point failed; tau identifies it."""

    def __init__(self, message: str, tau: float):
        super().__init__(f"tau={tau:.17g}: {message}")
        self.tau = tau


@dataclass(frozen=True)
class TauGrid:
    """
    Uniform grid of `steps` points from tau_min to tau_max, endpoints included.
    """

    tau_min: float
    tau_max: float
    steps: int

    def __post_init__(self):
        if self.tau_min < 0:
            raise ValueError(f"tau_min must be nonnegative, got {self.tau_min}")
        if not self.tau_max > self.tau_min:
            raise ValueError(f"tau_max ({self.tau_max}) must exceed tau_min ({self.tau_min})")
        if self.steps < 2:
            raise ValueError(f"A grid needs at least 2 points, got {self.steps}")

    @property
    def spacing(self) -> float:
        return (self.tau_max - self.tau_min) / (self.steps - 1)

    def points(self) -> np.ndarray:
        return np.linspace(self.tau_min, self.tau_max, self.steps)

    def to_dict(self) -> dict:
        return {'tau_min': self.tau_min, 'tau_max': self.tau_max, 'steps': self.steps}


@dataclass(frozen=True)
class SweepPoint:
    """Observables of the ground state at one tau."""

    tau: float
    energy: float
    entanglement: float
    means: Tuple[float, ...]
    variances: Tuple[float, ...]
    degenerate: bool
    solver_used: str


@dataclass(frozen=True, eq=False)
class SweepResult:
    """
    Per-tau records of a sweep plus finite-difference derivatives.

    Attributes:
        graph_name: Graph the sweep ran on
        L: Number of vertices
        N: Number of bosons
        epsilon: Self-interaction strength
        grid: Tau grid
        points: One record per grid point, in grid order
        entanglement_derivative: dE/dtau per grid point
        variance_derivative: d(variance)/dtau of variance_vertex per grid point
        variance_vertex: Vertex the variance derivative refers to
    """

    graph_name: str
    L: int
    N: int
    epsilon: float
    grid: TauGrid
    points: Tuple[SweepPoint, ...]
    entanglement_derivative: np.ndarray
    variance_derivative: np.ndarray
    variance_vertex: int = 0

    @property
    def taus(self) -> np.ndarray:
        return np.array([point.tau for point in self.points])

    @property
    def entanglements(self) -> np.ndarray:
        return np.array([point.entanglement for point in self.points])

    @property
    def energies(self) -> np.ndarray:
        return np.array([point.energy for point in self.points])

    def variances(self, vertex: int) -> np.ndarray:
        if not 0 <= vertex < self.L:
            raise ValueError(f"Vertex {vertex} out of range for {self.L} vertices")
        return np.array([point.variances[vertex] for point in self.points])

    def means(self, vertex: int) -> np.ndarray:
        if not 0 <= vertex < self.L:
            raise ValueError(f"Vertex {vertex} out of range for {self.L} vertices")
        return np.array([point.means[vertex] for point in self.points])

    def to_dict(self) -> dict:
        return {
            'graph': self.graph_name,
            'L': self.L,
            'N': self.N,
            'epsilon': self.epsilon,
            'grid': self.grid.to_dict(),
            'variance_vertex': self.variance_vertex,
            'points': [
                {
                    'tau': point.tau,
                    'energy': point.energy,
                    'entanglement': point.entanglement,
                    'means': list(point.means),
                    'variances': list(point.variances),
                    'dE_dtau': float(self.entanglement_derivative[k]),
                    'dvar_dtau': float(self.variance_derivative[k]),
                    'degenerate': bool(point.degenerate),
                }
                for k, point in enumerate(self.points)
            ],
        }


def solve_point(
    g: RootedGraph,
    N: int,
    epsilon: float,
    tau: float,
    manager: SolverManager,
    start_vector: Optional[np.ndarray] = None,
) -> Tuple[SweepPoint, GroundState]:
    """
    Ground state and vertex observables at one tau.

    Raises:
        SweepError: If the solver fails
    """
    H = build_hamiltonian(g, N, Couplings(float(tau), epsilon, allow_trivial=True))
    try:
        gs = manager.ground_state(H, start_vector)
    except ConvergenceError as e:
        raise SweepError(str(e), float(tau)) from e

    sector = H.sector
    moments = [occupation_moments(gs, sector, vertex) for vertex in range(g.L)]
    point = SweepPoint(
        tau=float(tau),
        energy=gs.energy,
        entanglement=entanglement(mode_marginal(gs, sector, g.root), N).normalized,
        means=tuple(m.mean for m in moments),
        variances=tuple(m.variance for m in moments),
        degenerate=gs.degenerate,
        solver_used=gs.solver_used,
    )
    return point, gs


def sweep(
    g: RootedGraph,
    N: int,
    epsilon: float,
    grid: TauGrid,
    opts: Optional[SolverOptions] = None,
    method: str = 'auto',
    workers: int = 1,
    variance_vertex: int = 0,
    descending: bool = False,
) -> SweepResult:
    """
    One ground-state solve per grid point.

    Serial runs warm-start each Lanczos solve from the previous point's vector;
    with workers > 1 points are solved concurrently from the default start.
    Records are returned in grid order either way.

    Args:
        g: Rooted graph
        N: Number of bosons, at least 1
        epsilon: Self-interaction strength
        grid: Tau grid
        opts: Solver options
        method: 'auto', 'dense' or 'lanczos'
        workers: Number of concurrent grid points
        variance_vertex: Vertex whose variance derivative is recorded
        descending: Walk the grid from tau_max down (serial warm-start direction)

    Raises:
        SweepError: If any grid point fails
        ValueError: On invalid N or variance_vertex
    """
    if N < 1:
        raise ValueError(f"A sweep needs N >= 1, got N={N}")
    if not 0 <= variance_vertex < g.L:
        raise ValueError(f"Vertex {variance_vertex} out of range for {g.L} vertices")

    manager = SolverManager(method, opts)
    taus = grid.points()
    order = list(range(grid.steps))
    if descending:
        order.reverse()

    records: List[Optional[SweepPoint]] = [None] * grid.steps
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = pool.map(lambda k: solve_point(g, N, epsilon, taus[k], manager)[0], order)
            for k, point in zip(order, results):
                records[k] = point
    else:
        previous = None
        for k in order:
            records[k], gs = solve_point(g, N, epsilon, taus[k], manager, previous)
            previous = gs.vector

    logger.debug("Sweep of %s finished: %d points in [%g, %g]", g.name, grid.steps, grid.tau_min, grid.tau_max)

    entanglements = np.array([point.entanglement for point in records])
    variances = np.array([point.variances[variance_vertex] for point in records])
    return SweepResult(
        graph_name=g.name,
        L=g.L,
        N=N,
        epsilon=epsilon,
        grid=grid,
        points=tuple(records),
        entanglement_derivative=finite_difference(entanglements, grid.spacing),
        variance_derivative=finite_difference(variances, grid.spacing),
        variance_vertex=variance_vertex,
    )

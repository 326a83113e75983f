"""
Solver manager for choosing between ground-state solvers.
"""

import logging
from typing import Optional

import numpy as np

from hamiltonian import SectorHamiltonian
from .base_solver import BaseSolver
from .dense_solver import DenseSolver
from .ground_state import GroundState, SolverOptions
from .lanczos_solver import LanczosSolver

logger = logging.getLogger(__name__)


class SolverManager:
    """
    Dispatches ground-state requests to the dense or Lanczos solver.
    'auto' picks dense up to options.dense_threshold, Lanczos above it.
    """

    AVAILABLE_SOLVERS = {
        'dense': DenseSolver,
        'lanczos': LanczosSolver,
    }

    def __init__(self, method: str = 'auto', options: Optional[SolverOptions] = None):
        """
        Initialize the manager.

        Args:
            method: 'auto', 'dense' or 'lanczos'
            options: Solver options. If None, loads configs/solver.json

        Raises:
            ValueError: If method is not recognized
        """
        if method != 'auto' and method not in self.AVAILABLE_SOLVERS:
            raise ValueError(
                f"Unknown solver: {method}. "
                f"Available: {['auto'] + list(self.AVAILABLE_SOLVERS.keys())}"
            )
        self.method = method
        self.options = options if options is not None else SolverOptions.from_config()
        self._solvers = {name: cls(self.options) for name, cls in self.AVAILABLE_SOLVERS.items()}

    def solver_for(self, H: SectorHamiltonian) -> BaseSolver:
        if self.method != 'auto':
            return self._solvers[self.method]
        if H.dimension <= self.options.dense_threshold:
            return self._solvers['dense']
        return self._solvers['lanczos']

    def ground_state(self, H: SectorHamiltonian, start_vector: Optional[np.ndarray] = None) -> GroundState:
        """
        Ground state of H with the configured method.

        Args:
            H: Sector Hamiltonian
            start_vector: Warm start for the Lanczos path

        Raises:
            ConvergenceError: If the Lanczos path does not converge
        """
        solver = self.solver_for(H)
        logger.debug("Solving %s (dimension %d) with %s", H.graph_name, H.dimension, solver.name)
        return solver.solve(H, start_vector)

    @staticmethod
    def get_available_solvers() -> list:
        return ['auto'] + list(SolverManager.AVAILABLE_SOLVERS.keys())


def ground_state(
    H: SectorHamiltonian,
    opts: Optional[SolverOptions] = None,
    method: str = 'auto',
    start_vector: Optional[np.ndarray] = None,
) -> GroundState:
    """Lowest eigenpair of H; dense up to opts.dense_threshold, Lanczos above."""
    return SolverManager(method, opts).ground_state(H, start_vector)


def dense_ground_state(H: SectorHamiltonian, opts: Optional[SolverOptions] = None) -> GroundState:
    """Dense-oracle ground state with the exact gap."""
    return DenseSolver(opts).solve(H)

"""
Base class for ground-state solvers.
All solvers inherit from this class.
"""

import logging
from abc import ABC, abstractmethod
from typing import Optional

import numpy as np

from hamiltonian import SectorHamiltonian
from .ground_state import GroundState, SolverOptions

logger = logging.getLogger(__name__)


class BaseSolver(ABC):
    """
    Abstract base class for ground-state solvers.
    """

    name = "base"

    def __init__(self, options: Optional[SolverOptions] = None):
        """
        Initialize the solver.

        Args:
            options: Solver options. If None, loads configs/solver.json
        """
        self.options = options if options is not None else SolverOptions.from_config()

    @abstractmethod
    def solve(self, H: SectorHamiltonian, start_vector: Optional[np.ndarray] = None) -> GroundState:
        """
        Compute the lowest eigenpair of H.

        Args:
            H: Sector Hamiltonian
            start_vector: Optional initial guess (ignored by direct solvers)

        Returns:
            GroundState
        """
        pass

    def _finalize(
        self,
        H: SectorHamiltonian,
        energy: float,
        vector: np.ndarray,
        gap_estimate: float,
        iterations: int = 0,
    ) -> GroundState:
        """Normalize, fix the sign, measure the residual and flag degeneracy."""
        vector = vector / np.linalg.norm(vector)
        if vector[np.argmax(np.abs(vector))] < 0:
            vector = -vector
        residual = float(np.linalg.norm(H.matvec(vector, workers=self.options.workers) - energy * vector))

        degenerate = bool(float(gap_estimate) < self.options.degeneracy_warning_gap)
        if degenerate:
            logger.warning(
                "Ground state of %s (tau=%g, epsilon=%g) is degenerate within %.1e; "
                "observables come from one representative",
                H.graph_name, H.couplings.tau, H.couplings.epsilon, gap_estimate,
            )

        vector.setflags(write=False)
        return GroundState(
            energy=float(energy),
            vector=vector,
            gap_estimate=float(gap_estimate),
            solver_used=self.name,
            degenerate=degenerate,
            residual=residual,
            iterations=iterations,
        )

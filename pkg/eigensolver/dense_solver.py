"""
Dense ground-state solver.
Full symmetric eigendecomposition; the reference oracle for small sectors.
"""

from typing import Optional

import numpy as np
from scipy.linalg import eigh

from hamiltonian import SectorHamiltonian
from .base_solver import BaseSolver
from .ground_state import GroundState


class DenseSolver(BaseSolver):
    """
    Ground state from scipy.linalg.eigh on the materialized matrix.
    """

    name = "dense"

    def solve(self, H: SectorHamiltonian, start_vector: Optional[np.ndarray] = None) -> GroundState:
        """
        Lowest eigenpair with the exact gap to the next level.

        Raises:
            ValueError: If the sector exceeds the dense_guard option
        """
        if H.dimension > self.options.dense_guard:
            raise ValueError(
                f"Sector dimension {H.dimension} exceeds the dense limit {self.options.dense_guard}"
            )

        matrix = H.to_dense()
        if H.dimension == 1:
            return self._finalize(H, matrix[0, 0], np.ones(1), float('inf'))

        values, vectors = eigh(matrix, subset_by_index=[0, 1])
        return self._finalize(H, values[0], vectors[:, 0], values[1] - values[0])

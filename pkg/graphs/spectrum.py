"""
One-particle (adjacency) spectra of rooted graphs.
"""

from dataclasses import dataclass
from typing import Any, Dict, Tuple

from scipy.linalg import eigvalsh

from .rooted_graph import RootedGraph


@dataclass(frozen=True)
class SpectrumReport:
    """
    Adjacency eigenvalues of a graph.

    one_particle_ground_energy is the ground energy of the tunneling term -A
    in units of tau, i.e. minus the spectral radius.
    """

    eigenvalues: Tuple[float, ...]
    lambda_max: float
    one_particle_ground_energy: float

    def to_dict(self) -> Dict[str, Any]:
        return {
            'eigenvalues': list(self.eigenvalues),
            'lambda_max': self.lambda_max,
            'one_particle_ground_energy': self.one_particle_ground_energy,
        }


def adjacency_spectrum(g: RootedGraph) -> SpectrumReport:
    """
    Dense symmetric eigensolve of the 0/1 adjacency matrix.

    Returns:
        SpectrumReport with eigenvalues in ascending order
    """
    eigenvalues = eigvalsh(g.adjacency_matrix())
    values = tuple(float(x) for x in eigenvalues)
    lambda_max = values[-1]
    return SpectrumReport(
        eigenvalues=values,
        lambda_max=lambda_max,
        one_particle_ground_energy=-lambda_max,
    )

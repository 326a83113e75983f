"""
Overlap of a ground state with the condensate over the uniform mode of Γ - {0}.

In the condensate all N bosons occupy (b_1 + ... + b_{L-1}) / sqrt(L - 1), so the
root is empty and the root mode factors out of the state.
"""

import numpy as np
from scipy.special import gammaln

from eigensolver import GroundState
from fock import SectorIndex
from graphs import RootedGraph


def condensate_state(sector: SectorIndex) -> np.ndarray:
    """
    Number-basis amplitudes of the uniform sub-graph condensate.

    Amplitudes are sqrt(N! / prod n_i!) (L - 1)^(-N/2) on states with n_0 = 0.

    Raises:
        ValueError: If L < 2
    """
    if sector.L < 2:
        raise ValueError(f"Condensate over Γ - {{0}} needs L >= 2, got L={sector.L}")

    states = sector.basis()
    empty_root = states[:, 0] == 0
    log_amplitude = 0.5 * (
        gammaln(sector.N + 1) - gammaln(states[empty_root] + 1).sum(axis=1)
    ) - 0.5 * sector.N * np.log(sector.L - 1)

    amplitudes = np.zeros(sector.dimension)
    amplitudes[empty_root] = np.exp(log_amplitude)
    return amplitudes


def condensate_overlap(gs: GroundState, sector: SectorIndex, g: RootedGraph) -> float:
    """
    Squared overlap |<psi|C>|^2 with the uniform sub-graph condensate.

    Meaningful when Γ - {0} is connected; this is not enforced.

    Raises:
        ValueError: If L < 2 or the graph does not match the sector
    """
    if g.L != sector.L:
        raise ValueError(f"Graph '{g.name}' has {g.L} vertices but the sector has {sector.L} modes")
    if gs.vector.shape != (sector.dimension,):
        raise ValueError(
            f"Ground vector of length {gs.vector.size} does not match sector dimension {sector.dimension}"
        )
    overlap = float(gs.vector @ condensate_state(sector)) ** 2
    return min(1.0, overlap)

"""
Single-mode observables of a ground state.

Total particle number is fixed, so the reduced density matrix of one mode is
diagonal in the number basis and equals the occupation distribution of that mode.
"""

import math
from dataclasses import dataclass

import numpy as np
from scipy.stats import entropy

from eigensolver import GroundState
from fock import SectorIndex


@dataclass(frozen=True, eq=False)
class ModeMarginal:
    """
    Occupation distribution of one vertex.

    Attributes:
        vertex: Vertex index
        probabilities: p_n for n = 0..N
    """

    vertex: int
    probabilities: np.ndarray


@dataclass(frozen=True)
class EntanglementValue:
    """
    Von Neumann entropy of one mode.

    Attributes:
        raw_entropy: Entropy in bits
        normalized: raw_entropy / log2(N + 1), in [0, 1]
    """

    raw_entropy: float
    normalized: float


@dataclass(frozen=True)
class OccupationMoments:
    vertex: int
    mean: float
    variance: float


def _check(gs: GroundState, sector: SectorIndex, vertex: int):
    if not 0 <= vertex < sector.L:
        raise ValueError(f"Vertex {vertex} out of range for {sector.L} vertices")
    if gs.vector.shape != (sector.dimension,):
        raise ValueError(
            f"Ground vector of length {gs.vector.size} does not match sector dimension {sector.dimension}"
        )


def mode_marginal(gs: GroundState, sector: SectorIndex, vertex: int) -> ModeMarginal:
    """
    Diagonal of the reduced density matrix of one vertex.

    Args:
        gs: Ground state over the sector basis
        sector: Sector the ground vector lives in
        vertex: Vertex whose marginal is taken

    Raises:
        ValueError: If vertex is out of range
    """
    _check(gs, sector, vertex)
    weights = gs.vector ** 2
    probabilities = np.bincount(sector.basis()[:, vertex], weights=weights, minlength=sector.N + 1)
    probabilities.setflags(write=False)
    return ModeMarginal(vertex=vertex, probabilities=probabilities)


def entanglement(m: ModeMarginal, N: int) -> EntanglementValue:
    """
    Normalized mode entanglement -sum p log2 p / log2(N + 1).

    Raises:
        ValueError: If N == 0 (normalization undefined)
    """
    if N < 1:
        raise ValueError(f"Entanglement normalization needs N >= 1, got N={N}")
    raw = float(entropy(m.probabilities, base=2))
    normalized = min(1.0, max(0.0, raw / math.log2(N + 1)))
    return EntanglementValue(raw_entropy=raw, normalized=normalized)


def occupation_moments(gs: GroundState, sector: SectorIndex, vertex: int) -> OccupationMoments:
    """
    Mean and variance of the occupation number of one vertex.

    Raises:
        ValueError: If vertex is out of range
    """
    p = mode_marginal(gs, sector, vertex).probabilities
    n = np.arange(sector.N + 1, dtype=np.float64)
    mean = float(p @ n)
    variance = max(0.0, float(p @ n ** 2) - mean ** 2)
    return OccupationMoments(vertex=vertex, mean=mean, variance=variance)


def reduced_density_matrix(gs: GroundState, sector: SectorIndex, vertex: int) -> np.ndarray:
    """
    Brute-force partial trace of |psi><psi| over every vertex but one.

    Returns:
        (N + 1) x (N + 1) density matrix of the vertex in its number basis
    """
    _check(gs, sector, vertex)
    states = sector.basis()
    if sector.L == 1:
        column = np.zeros(sector.dimension, dtype=np.int64)
    else:
        environment = np.delete(states, vertex, axis=1)
        _, column = np.unique(environment, axis=0, return_inverse=True)
        column = column.reshape(-1)

    coefficients = np.zeros((sector.N + 1, column.max() + 1))
    coefficients[states[:, vertex], column] = gs.vector
    return coefficients @ coefficients.T

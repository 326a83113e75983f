"""
Sector matrix of H = -tau * sum_(i,j in E) (b_i^dagger b_j + h.c.) + epsilon * sum_i n_i^2.

Only the strict upper triangle of the hopping part is stored; the product
with a vector applies it together with its transpose.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import List

import numpy as np
import scipy.sparse as sparse

from fock import SectorIndex
from graphs import RootedGraph

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Couplings:
    """
    Tunneling amplitude and self-interaction strength.

    Args:
        tau: Tunneling amplitude, >= 0
        epsilon: Self-interaction strength, >= 0
        allow_trivial: Accept tau == epsilon == 0 (the zero Hamiltonian)
    """

    tau: float
    epsilon: float = 1.0
    allow_trivial: bool = False

    def __post_init__(self):
        if self.tau < 0:
            raise ValueError(f"Tunneling amplitude must be nonnegative, got tau={self.tau}")
        if self.epsilon < 0:
            raise ValueError(f"Self-interaction must be nonnegative, got epsilon={self.epsilon}")
        if self.tau == 0 and self.epsilon == 0 and not self.allow_trivial:
            raise ValueError("tau and epsilon are both zero; pass allow_trivial=True to accept")

    def scaled(self, factor: float) -> 'Couplings':
        return Couplings(self.tau * factor, self.epsilon * factor, self.allow_trivial)


@dataclass(frozen=True, eq=False)
class SectorHamiltonian:
    """
    Real symmetric Hamiltonian restricted to one fixed-N sector.

    Attributes:
        sector: Basis index of the sector
        couplings: (tau, epsilon) used to assemble the matrix
        diagonal: epsilon * sum_i n_i^2 per basis state
        upper: Strict upper triangle of the hopping part (CSR)
        graph_name: Name of the graph the matrix was built on
    """

    sector: SectorIndex
    couplings: Couplings
    diagonal: np.ndarray
    upper: sparse.csr_matrix
    graph_name: str = "graph"

    @property
    def dimension(self) -> int:
        return self.sector.dimension

    def matvec(self, x: np.ndarray, workers: int = 1) -> np.ndarray:
        return matvec(self, x, workers=workers)

    def to_sparse(self) -> sparse.csr_matrix:
        """Full symmetric matrix in CSR form."""
        return (self.upper + self.upper.T + sparse.diags(self.diagonal)).tocsr()

    def to_dense(self) -> np.ndarray:
        return self.to_sparse().toarray()


def build_hamiltonian(g: RootedGraph, N: int, c: Couplings) -> SectorHamiltonian:
    """
    Assemble the sector Hamiltonian of a graph.

    Every basis state is visited once per directed edge; hop targets are
    located with the vectorised combinatorial rank.

    Args:
        g: Rooted graph
        N: Number of bosons
        c: Couplings

    Returns:
        SectorHamiltonian over the (g.L, N) sector

    Raises:
        SectorOverflowError: If the sector dimension does not fit 63 bits
    """
    sector = SectorIndex(g.L, N)
    states = sector.basis()
    diagonal = c.epsilon * (states ** 2).sum(axis=1).astype(np.float64)

    rows: List[np.ndarray] = []
    cols: List[np.ndarray] = []
    amplitudes: List[np.ndarray] = []
    if c.tau > 0:
        for u, v in g.edges:
            for i, j in ((u, v), (v, u)):
                source = np.nonzero(states[:, j] > 0)[0]
                targets = states[source].copy()
                amplitude = np.sqrt(((targets[:, i] + 1) * targets[:, j]).astype(np.float64))
                targets[:, i] += 1
                targets[:, j] -= 1
                target_rank = sector.rank_many(targets)
                # each connected pair is produced once from each side
                keep = target_rank > source
                rows.append(source[keep])
                cols.append(target_rank[keep])
                amplitudes.append(amplitude[keep])

    if rows:
        upper = sparse.coo_matrix(
            (-c.tau * np.concatenate(amplitudes), (np.concatenate(rows), np.concatenate(cols))),
            shape=(sector.dimension, sector.dimension),
        ).tocsr()
    else:
        upper = sparse.csr_matrix((sector.dimension, sector.dimension), dtype=np.float64)

    logger.debug(
        "Assembled %s sector L=%d N=%d: dimension %d, %d off-diagonal pairs",
        g.name, g.L, N, sector.dimension, upper.nnz,
    )
    return SectorHamiltonian(sector=sector, couplings=c, diagonal=diagonal, upper=upper, graph_name=g.name)


def matvec(H: SectorHamiltonian, x: np.ndarray, workers: int = 1) -> np.ndarray:
    """
    Product y = H x.

    Args:
        H: Sector Hamiltonian
        x: Vector of length H.dimension
        workers: Number of threads; rows are split into contiguous blocks

    Returns:
        H x as a float64 array

    Raises:
        ValueError: If x has the wrong length
    """
    x = np.asarray(x, dtype=np.float64)
    if x.shape != (H.dimension,):
        raise ValueError(f"Vector of shape {x.shape} does not match sector dimension {H.dimension}")

    if workers <= 1 or H.dimension < 2 * workers:
        return H.diagonal * x + H.upper @ x + H.upper.T @ x

    bounds = np.linspace(0, H.dimension, workers + 1).astype(int)

    def block_product(start: int, stop: int) -> np.ndarray:
        block = H.upper[start:stop]
        partial = block.T @ x[start:stop]
        partial[start:stop] += H.diagonal[start:stop] * x[start:stop] + block @ x
        return partial

    with ThreadPoolExecutor(max_workers=workers) as pool:
        partials = list(pool.map(block_product, bounds[:-1], bounds[1:]))
    return np.sum(partials, axis=0)

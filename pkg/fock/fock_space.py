"""
Fixed-N Fock sector bookkeeping.
Enumerates, ranks and unranks the occupation-number basis of N bosons on L modes.
"""

import math
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Optional, Sequence, Tuple

import numpy as np

# Per-vertex boson counts (n_0, ..., n_{L-1})
OccupationVector = Tuple[int, ...]

# Largest sector dimension representable in int64 index arrays
MAX_DIMENSION = 2 ** 63


class SectorOverflowError(OverflowError):
    """Raised when a sector dimension does not fit a signed 64-bit index."""


def dimension(L: int, N: int) -> int:
    """
    Size of the fixed-N Fock sector, binomial(N + L - 1, N).

    Args:
        L: Number of modes (vertices), at least 1
        N: Number of bosons, at least 0

    Returns:
        Number of occupation vectors with L entries summing to N

    Raises:
        ValueError: If L < 1 or N < 0
        SectorOverflowError: If the dimension does not fit in 63 bits
    """
    if L < 1:
        raise ValueError(f"Number of modes must be at least 1, got {L}")
    if N < 0:
        raise ValueError(f"Number of bosons must be nonnegative, got {N}")

    size = math.comb(N + L - 1, N)
    if size >= MAX_DIMENSION:
        raise SectorOverflowError(
            f"Sector dimension binomial({N + L - 1}, {N}) = {size} exceeds 2^63"
        )
    return size


@dataclass(frozen=True)
class SectorIndex:
    """
    Index of the fixed-N sector over L modes.

    Basis states are ordered ascending-lexicographically on (n_0, ..., n_{L-1}),
    so states sharing n_0 form contiguous blocks.
    """

    L: int
    N: int
    dimension: int = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, 'dimension', dimension(self.L, self.N))

    @cached_property
    def _binomials(self) -> np.ndarray:
        # table[m, r] = dimension(m, r); row 0 is never read
        table = np.zeros((self.L + 1, self.N + 1), dtype=np.int64)
        for m in range(1, self.L + 1):
            for r in range(self.N + 1):
                table[m, r] = math.comb(r + m - 1, r)
        return table

    def validate(self, occ: Sequence[int]) -> OccupationVector:
        """
        Check that an occupation vector belongs to this sector.

        Returns:
            The occupation vector as a tuple of ints

        Raises:
            ValueError: On wrong length, negative entries or wrong total
        """
        occ = tuple(int(n) for n in occ)
        if len(occ) != self.L:
            raise ValueError(f"Occupation vector {occ} has length {len(occ)}, expected {self.L}")
        if any(n < 0 for n in occ):
            raise ValueError(f"Occupation vector {occ} has negative entries")
        if sum(occ) != self.N:
            raise ValueError(f"Occupation vector {occ} holds {sum(occ)} bosons, expected {self.N}")
        return occ

    def rank(self, occ: Sequence[int]) -> int:
        """
        Position of an occupation vector in the lexicographic basis order.

        Args:
            occ: Occupation vector of this sector

        Returns:
            Index in [0, dimension)
        """
        occ = self.validate(occ)
        index = 0
        remaining = self.N
        for i, n in enumerate(occ[:-1]):
            modes = self.L - i
            # states whose i-th entry is smaller than n
            index += math.comb(remaining + modes - 1, remaining) - math.comb(
                remaining - n + modes - 1, remaining - n
            )
            remaining -= n
        return index

    def unrank(self, k: int) -> OccupationVector:
        """
        Occupation vector at position k of the lexicographic basis order.

        Raises:
            ValueError: If k is outside [0, dimension)
        """
        if not 0 <= k < self.dimension:
            raise ValueError(f"Rank {k} outside [0, {self.dimension}) for L={self.L}, N={self.N}")

        counts = []
        remaining = self.N
        for i in range(self.L - 1):
            modes = self.L - i
            total = math.comb(remaining + modes - 1, remaining)

            def below(c: int) -> int:
                return total - math.comb(remaining - c + modes - 1, remaining - c)

            n = 0
            while n < remaining and below(n + 1) <= k:
                n += 1
            k -= below(n)
            remaining -= n
            counts.append(n)
        counts.append(remaining)
        return tuple(counts)

    def rank_many(self, states: np.ndarray) -> np.ndarray:
        """
        Vectorised rank of a (M, L) array of occupation vectors of this sector.

        Args:
            states: Integer array, one occupation vector per row

        Returns:
            int64 array of M ranks
        """
        states = np.asarray(states, dtype=np.int64)
        assert np.all(states.sum(axis=1) == self.N), "states leave the fixed-N sector"

        before = np.cumsum(states, axis=1) - states
        remaining = self.N - before
        modes = self.L - np.arange(self.L)
        table = self._binomials
        return (table[modes, remaining] - table[modes, remaining - states]).sum(axis=1)

    def basis(self) -> np.ndarray:
        """
        Full occupation table in rank order.

        Returns:
            int64 array of shape (dimension, L); row k is unrank(k)
        """
        return self._basis

    @cached_property
    def _basis(self) -> np.ndarray:
        # stars and bars: lexicographic bar positions give lexicographic counts
        bars = np.array(
            list(combinations(range(self.N + self.L - 1), self.L - 1)), dtype=np.int64
        ).reshape(self.dimension, self.L - 1)
        table = np.diff(bars, axis=1, prepend=-1, append=self.N + self.L - 1) - 1
        table.setflags(write=False)
        return table


def rank(occ: Sequence[int], sector: Optional[SectorIndex] = None) -> int:
    """
    Rank of an occupation vector.

    Args:
        occ: Occupation vector
        sector: Sector it must belong to; inferred from length and total if None

    Raises:
        ValueError: If occ does not belong to the given sector
    """
    occ = tuple(occ)
    if sector is None:
        sector = SectorIndex(len(occ), sum(occ))
    return sector.rank(occ)


def unrank(k: int, sector: SectorIndex) -> OccupationVector:
    """k-th occupation vector of a sector."""
    return sector.unrank(k)


def hop_apply(occ: Sequence[int], i: int, j: int) -> Optional[Tuple[OccupationVector, float]]:
    """
    Apply b_i^dagger b_j to a number state.

    Args:
        occ: Occupation vector
        i: Vertex receiving a boson
        j: Vertex losing a boson

    Returns:
        (new occupation vector, sqrt((n_i + 1) * n_j)), or None when vertex j is empty

    Raises:
        ValueError: If i == j or either vertex is out of range
    """
    if i == j:
        raise ValueError(f"Hopping needs two distinct vertices, got i = j = {i}")
    size = len(occ)
    if not (0 <= i < size and 0 <= j < size):
        raise ValueError(f"Vertices ({i}, {j}) out of range for {size} modes")
    if occ[j] == 0:
        return None

    target = list(occ)
    amplitude = math.sqrt((target[i] + 1) * target[j])
    target[i] += 1
    target[j] -= 1
    return tuple(target), amplitude

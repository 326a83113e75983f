"""
Fock space package.
Basis bookkeeping for N bosons distributed over L modes.
"""

from .fock_space import (
    OccupationVector,
    SectorIndex,
    SectorOverflowError,
    dimension,
    rank,
    unrank,
    hop_apply,
)

__all__ = [
    'OccupationVector',
    'SectorIndex',
    'SectorOverflowError',
    'dimension',
    'rank',
    'unrank',
    'hop_apply',
]

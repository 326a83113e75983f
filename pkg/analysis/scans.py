"""
Family scans: complete graphs K_L and pendant-complete graphs at unit filling.
"""

import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence

from eigensolver import SolverManager, SolverOptions
from fock import SectorIndex
from graphs import complete_graph, pendant_complete
from observables import condensate_overlap
from .derivatives import DerivativePeak, NoInteriorPeakError, find_derivative_peak
from .sweep import SweepResult, TauGrid, solve_point, sweep

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class CompleteScanEntry:
    """
    Sweep of K_L with N = L and its derivative peaks (None when the peak is on the boundary).
    """

    L: int
    result: SweepResult
    entanglement_peak: Optional[DerivativePeak]
    variance_peak: Optional[DerivativePeak]

    def to_dict(self) -> dict:
        def peak(p: Optional[DerivativePeak]) -> Optional[dict]:
            return None if p is None else {'tau': p.tau, 'height': p.height}

        return {
            'L': self.L,
            'graph': self.result.graph_name,
            'entanglement_peak': peak(self.entanglement_peak),
            'variance_peak': peak(self.variance_peak),
        }


@dataclass(frozen=True)
class PendantScanEntry:
    L: int
    entanglement: float
    condensate_overlap: float
    energy: float

    def to_dict(self) -> dict:
        return {
            'L': self.L,
            'entanglement': self.entanglement,
            'condensate_overlap': self.condensate_overlap,
            'energy': self.energy,
        }


def _peak_or_none(result: SweepResult, which: str) -> Optional[DerivativePeak]:
    try:
        return find_derivative_peak(result, which)
    except NoInteriorPeakError as e:
        logger.warning("%s", e)
        return None


def complete_scan(
    sizes: Sequence[int],
    grid: TauGrid,
    epsilon: float = 1.0,
    opts: Optional[SolverOptions] = None,
    method: str = 'auto',
    workers: int = 1,
) -> List[CompleteScanEntry]:
    """
    Sweep K_L at N = L for each size and locate the derivative peaks.

    Raises:
        ValueError: On a size below 2
        SweepError: If a solve fails
    """
    entries = []
    for L in sizes:
        result = sweep(complete_graph(L), L, epsilon, grid, opts, method, workers)
        entries.append(CompleteScanEntry(
            L=L,
            result=result,
            entanglement_peak=_peak_or_none(result, 'entanglement'),
            variance_peak=_peak_or_none(result, 'variance'),
        ))
        logger.info("✓ K%d swept over %d points", L, grid.steps)
    return entries


def pendant_scan(
    sizes: Sequence[int],
    tau: float = 1.0,
    epsilon: float = 0.0,
    opts: Optional[SolverOptions] = None,
    method: str = 'auto',
) -> List[PendantScanEntry]:
    """
    Root entanglement and sub-graph condensate overlap of pendant-complete graphs at N = L.

    Raises:
        ValueError: On a size below 3
        SweepError: If a solve fails
    """
    manager = SolverManager(method, opts)
    entries = []
    for L in sizes:
        g = pendant_complete(L)
        point, gs = solve_point(g, L, epsilon, tau, manager)
        entries.append(PendantScanEntry(
            L=L,
            entanglement=point.entanglement,
            condensate_overlap=condensate_overlap(gs, SectorIndex(L, L), g),
            energy=point.energy,
        ))
    return entries

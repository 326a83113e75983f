"""
Location of the entanglement maximum over a tau range.

A coarse scan brackets the global maximum; golden-section search refines the
bracket, so unimodality is only assumed between two coarse neighbours.
"""

import logging
import math
from dataclasses import dataclass
from typing import Callable, Optional, Tuple

import numpy as np

from eigensolver import SolverManager, SolverOptions
from graphs import RootedGraph
from .sweep import solve_point

logger = logging.getLogger(__name__)

INV_PHI = (math.sqrt(5) - 1) / 2  # 1 / phi
INV_PHI_SQUARE = (3 - math.sqrt(5)) / 2  # 1 / phi^2

MIN_COARSE_POINTS = 64
# boundary values this close to the scan maximum count as the maximum
FLAT_TOLERANCE = 1e-12


@dataclass(frozen=True)
class EntanglementMax:
    """
    Attributes:
        tau_star: Location of the maximum
        E_star: Normalized entanglement at tau_star
        interior: False when the maximum sits on the range boundary
    """

    tau_star: float
    E_star: float
    interior: bool

    def to_dict(self) -> dict:
        return {'tau_star': self.tau_star, 'E_star': self.E_star, 'interior': self.interior}


def golden_section_max(f: Callable[[float], float], a: float, b: float, tol: float = 1e-5) -> Tuple[float, float]:
    """
    Golden-section search for the maximum of a function unimodal on [a, b].

    Returns:
        Interval [c, d] containing the maximum with d - c <= tol
    """
    a, b = min(a, b), max(a, b)
    h = b - a
    if h <= tol:
        return a, b

    # Required steps to achieve tolerance
    n = int(math.ceil(math.log(tol / h) / math.log(INV_PHI)))

    c = a + INV_PHI_SQUARE * h
    d = a + INV_PHI * h
    yc = f(c)
    yd = f(d)

    for _ in range(n - 1):
        if yc > yd:
            b = d
            d = c
            yd = yc
            h = INV_PHI * h
            c = a + INV_PHI_SQUARE * h
            yc = f(c)
        else:
            a = c
            c = d
            yc = yd
            h = INV_PHI * h
            d = a + INV_PHI * h
            yd = f(d)

    if yc > yd:
        return a, d
    return c, b


def find_entanglement_max(
    g: RootedGraph,
    N: int,
    epsilon: float,
    search_range: Tuple[float, float] = (0.0, 20.0),
    tol: float = 1e-3,
    opts: Optional[SolverOptions] = None,
    method: str = 'auto',
    coarse_points: int = 81,
) -> EntanglementMax:
    """
    Global maximum of the root-mode entanglement E(tau) over a range.

    Args:
        g: Rooted graph
        N: Number of bosons
        epsilon: Self-interaction strength
        search_range: (tau_low, tau_high)
        tol: Width of the final golden-section interval
        opts: Solver options
        method: 'auto', 'dense' or 'lanczos'
        coarse_points: Coarse scan size, raised to at least 64

    Raises:
        ValueError: On an empty range or nonpositive tol
        SweepError: If a solve fails
    """
    low, high = float(search_range[0]), float(search_range[1])
    if not high > low:
        raise ValueError(f"Search range ({low}, {high}) is empty")
    if not tol > 0:
        raise ValueError(f"Tolerance must be positive, got {tol}")

    manager = SolverManager(method, opts)

    def entanglement_at(tau: float) -> float:
        return solve_point(g, N, epsilon, tau, manager)[0].entanglement

    taus = np.linspace(low, high, max(MIN_COARSE_POINTS, coarse_points))
    values = np.array([entanglement_at(tau) for tau in taus])
    k = int(np.argmax(values))

    if values[-1] >= values[k] - FLAT_TOLERANCE:
        k = taus.size - 1
    elif values[0] >= values[k] - FLAT_TOLERANCE:
        k = 0
    if k == 0 or k == taus.size - 1:
        logger.info("E(tau) of %s peaks at the range boundary tau=%g", g.name, taus[k])
        return EntanglementMax(tau_star=float(taus[k]), E_star=float(values[k]), interior=False)

    c, d = golden_section_max(entanglement_at, taus[k - 1], taus[k + 1], tol)
    tau_star = 0.5 * (c + d)
    E_star = entanglement_at(tau_star)
    logger.info("E(tau) of %s has an interior maximum %.6f at tau=%.4f", g.name, E_star, tau_star)
    return EntanglementMax(tau_star=tau_star, E_star=E_star, interior=True)

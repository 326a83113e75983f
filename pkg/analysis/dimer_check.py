"""
Analytic-vs-numeric comparison on the bosonic dimer at N = 2.
"""

import math
from dataclasses import dataclass
from typing import List, Optional

import numpy as np

from eigensolver import SolverManager, SolverOptions
from graphs import dimer
from observables import DIMER_PARTICLES, dimer_analytic
from .derivatives import find_derivative_peak
from .sweep import TauGrid, solve_point, sweep

PEAK_TOLERANCE = 1e-3


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    deviation: float
    tolerance: float
    detail: str = ""

    def to_dict(self) -> dict:
        return {
            'name': self.name,
            'passed': self.passed,
            'deviation': self.deviation,
            'tolerance': self.tolerance,
            'detail': self.detail,
        }


def expected_variance_peak(epsilon: float = 1.0) -> float:
    """tau at which d(variance)/d(tau) of the dimer is largest: epsilon / (2 sqrt(2))."""
    return epsilon / (2.0 * math.sqrt(2.0))


def dimer_check(
    epsilon: float = 1.0,
    tau_min: float = 0.0,
    tau_max: float = 20.0,
    points: int = 50,
    tolerance: float = 1e-9,
    peak_steps: int = 801,
    opts: Optional[SolverOptions] = None,
    method: str = 'auto',
) -> List[CheckResult]:
    """
    Compare the numerical pipeline with the closed forms.

    Energy, root entanglement and root variance are compared at `points` taus;
    the variance-derivative peak is located on [0, 2 epsilon] with `peak_steps` points.

    Raises:
        ValueError: If epsilon <= 0
        SweepError: If a solve fails
    """
    if not epsilon > 0:
        raise ValueError(f"Dimer check needs epsilon > 0, got {epsilon}")

    g = dimer()
    manager = SolverManager(method, opts)
    deviations = {'energy': [], 'entanglement': [], 'variance': []}

    for tau in np.linspace(tau_min, tau_max, points):
        point, _ = solve_point(g, DIMER_PARTICLES, epsilon, tau, manager)
        exact = dimer_analytic(float(tau), epsilon)
        deviations['energy'].append(abs(point.energy - exact.energy))
        deviations['entanglement'].append(abs(point.entanglement - exact.entanglement.normalized))
        deviations['variance'].append(abs(point.variances[g.root] - exact.variance))

    results = []
    for name, values in deviations.items():
        worst = float(max(values))
        results.append(CheckResult(
            name=name,
            passed=worst <= tolerance,
            deviation=worst,
            tolerance=tolerance,
            detail=f"max deviation {worst:.3e} over {points} points",
        ))

    expected = expected_variance_peak(epsilon)
    result = sweep(g, DIMER_PARTICLES, epsilon, TauGrid(0.0, 2.0 * epsilon, peak_steps), opts, method)
    peak = find_derivative_peak(result, 'variance')
    offset = abs(peak.tau - expected)
    results.append(CheckResult(
        name='variance_peak',
        passed=offset <= PEAK_TOLERANCE,
        deviation=offset,
        tolerance=PEAK_TOLERANCE,
        detail=f"peak at tau={peak.tau:.5f}, expected {expected:.5f}",
    ))
    return results

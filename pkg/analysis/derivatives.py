"""
Finite-difference derivatives of sweep series and their peaks.
"""

from dataclasses import dataclass
from typing import TYPE_CHECKING, Optional

import numpy as np

if TYPE_CHECKING:
    from .sweep import SweepResult

DERIVATIVE_KINDS = ('entanglement', 'variance')
MIN_PEAK_POINTS = 5


class NoInteriorPeakError(ValueError):
    """The derivative is largest at a grid endpoint."""


@dataclass(frozen=True)
class DerivativePeak:
    """
    Attributes:
        tau: Peak location refined by quadratic interpolation
        height: Interpolated derivative value at the peak
        which: 'entanglement' or 'variance'
        vertex: Vertex of the variance series (None for entanglement)
    """

    tau: float
    height: float
    which: str
    vertex: Optional[int] = None


def finite_difference(values: np.ndarray, spacing: float) -> np.ndarray:
    """
    Derivative on a uniform grid: second-order central differences inside,
    one-sided three-point stencils at the endpoints.
    """
    values = np.asarray(values, dtype=np.float64)
    edge_order = 2 if values.size >= 3 else 1
    return np.gradient(values, spacing, edge_order=edge_order)


def find_derivative_peak(series: 'SweepResult', which: str = 'variance', vertex: Optional[int] = None) -> DerivativePeak:
    """
    Location of the maximum of a derivative series.

    Args:
        series: Sweep result with at least 5 points
        which: 'entanglement' or 'variance'
        vertex: Vertex for the variance series; defaults to the sweep's variance vertex

    Raises:
        ValueError: On an unknown kind or a series that is too short
        NoInteriorPeakError: If the derivative peaks at a grid endpoint
    """
    if which not in DERIVATIVE_KINDS:
        raise ValueError(f"Unknown derivative '{which}'. Available: {list(DERIVATIVE_KINDS)}")
    if len(series.points) < MIN_PEAK_POINTS:
        raise ValueError(f"Peak search needs at least {MIN_PEAK_POINTS} points, got {len(series.points)}")

    if which == 'entanglement':
        derivative = series.entanglement_derivative
        vertex = None
    else:
        if vertex is None or vertex == series.variance_vertex:
            vertex = series.variance_vertex
            derivative = series.variance_derivative
        else:
            derivative = finite_difference(series.variances(vertex), series.grid.spacing)

    k = int(np.argmax(derivative))
    if k == 0 or k == derivative.size - 1:
        raise NoInteriorPeakError(
            f"no interior peak: d({which})/dtau of {series.graph_name} is largest at the grid endpoint "
            f"tau={series.points[k].tau:g}"
        )

    left, centre, right = derivative[k - 1], derivative[k], derivative[k + 1]
    curvature = left - 2.0 * centre + right
    offset = 0.0 if curvature == 0 else 0.5 * (left - right) / curvature
    return DerivativePeak(
        tau=series.points[k].tau + offset * series.grid.spacing,
        height=float(centre - 0.25 * (left - right) * offset),
        which=which,
        vertex=vertex,
    )

"""
Closed forms for the bosonic dimer (two modes, one edge) at N = 2.

The ground state is cos(theta/2)|11> + sin(theta/2)(|02> + |20>)/sqrt(2)
with theta = -arctan(2 tau / epsilon).
"""

import math
from dataclasses import dataclass

import numpy as np

from .mode_observables import EntanglementValue, ModeMarginal, entanglement

DIMER_PARTICLES = 2


@dataclass(frozen=True, eq=False)
class DimerAnalytic:
    """
    Attributes:
        entanglement: Mode entanglement of either site
        variance: Occupation variance of either site, sin^2(theta/2)
        theta: Mixing angle
        energy: Ground energy 3 epsilon - sqrt(epsilon^2 + 4 tau^2)
        probabilities: Occupation distribution (p_0, p_1, p_2) of either site
    """

    entanglement: EntanglementValue
    variance: float
    theta: float
    energy: float
    probabilities: np.ndarray


def dimer_analytic(tau: float, epsilon: float = 1.0) -> DimerAnalytic:
    """
    Dimer ground-state observables in closed form.

    The variance is sin^2(theta/2) = (1 - 1/sqrt(1 + 4 (tau/epsilon)^2)) / 2.

    Raises:
        ValueError: If epsilon <= 0 (use the numerical pipeline instead)
    """
    if epsilon <= 0:
        raise ValueError(f"Dimer closed form needs epsilon > 0, got {epsilon}")
    if tau < 0:
        raise ValueError(f"Tunneling amplitude must be nonnegative, got tau={tau}")

    theta = -math.atan(2.0 * tau / epsilon)
    hopping_weight = math.sin(theta / 2.0) ** 2
    probabilities = np.array([hopping_weight / 2.0, math.cos(theta / 2.0) ** 2, hopping_weight / 2.0])
    probabilities.setflags(write=False)

    return DimerAnalytic(
        entanglement=entanglement(ModeMarginal(vertex=0, probabilities=probabilities), DIMER_PARTICLES),
        variance=hopping_weight,
        theta=theta,
        energy=3.0 * epsilon - math.sqrt(epsilon ** 2 + 4.0 * tau ** 2),
        probabilities=probabilities,
    )


def dimer_variance_derivative(tau: float, epsilon: float = 1.0) -> float:
    """d(variance)/d(tau) = 2x (1 + 4x^2)^(-3/2) / epsilon with x = tau / epsilon."""
    if epsilon <= 0:
        raise ValueError(f"Dimer closed form needs epsilon > 0, got {epsilon}")
    x = tau / epsilon
    return 2.0 * x * (1.0 + 4.0 * x ** 2) ** -1.5 / epsilon

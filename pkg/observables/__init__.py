"""
Observables package.
Single-mode marginals, mode entanglement, occupation moments, condensate overlap
and the bosonic dimer closed forms.
"""

from .mode_observables import (
    ModeMarginal,
    EntanglementValue,
    OccupationMoments,
    mode_marginal,
    entanglement,
    occupation_moments,
    reduced_density_matrix,
)
from .condensate import condensate_state, condensate_overlap
from .dimer import DIMER_PARTICLES, DimerAnalytic, dimer_analytic, dimer_variance_derivative

__all__ = [
    'ModeMarginal',
    'EntanglementValue',
    'OccupationMoments',
    'mode_marginal',
    'entanglement',
    'occupation_moments',
    'reduced_density_matrix',
    'condensate_state',
    'condensate_overlap',
    'DIMER_PARTICLES',
    'DimerAnalytic',
    'dimer_analytic',
    'dimer_variance_derivative',
]

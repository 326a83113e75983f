"""
Eigensolver package.
Ground states of sector Hamiltonians: dense oracle and Lanczos with full reorthogonalization.
"""

from .ground_state import GroundState, SolverOptions, ConvergenceError
from .base_solver import BaseSolver
from .dense_solver import DenseSolver
from .lanczos_solver import LanczosSolver
from .solver_manager import SolverManager, ground_state, dense_ground_state

__all__ = [
    'GroundState',
    'SolverOptions',
    'ConvergenceError',
    'BaseSolver',
    'DenseSolver',
    'LanczosSolver',
    'SolverManager',
    'ground_state',
    'dense_ground_state',
]

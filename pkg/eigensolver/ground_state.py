"""
Ground-state result and solver options.
"""

import json
import os
from dataclasses import dataclass, fields, replace
from typing import Any, Dict, Optional

import numpy as np


class ConvergenceError(RuntimeError):
    """Iterative solver did not reach the residual tolerance."""

    def __init__(self, message: str, best_residual: float, iterations: int):
        super().__init__(f"{message} (best residual {best_residual:.3e} after {iterations} iterations)")
        self.best_residual = best_residual
        self.iterations = iterations


@dataclass(frozen=True, eq=False)
class GroundState:
    """
    Lowest eigenpair of a sector Hamiltonian.

    Attributes:
        energy: Ground energy in units of epsilon
        vector: Unit-norm ground vector, sign fixed so its largest-magnitude entry is positive
        gap_estimate: Second-lowest minus lowest value (Lanczos: deflated second pass); inf for one-dimensional sectors
        solver_used: 'dense' or 'lanczos'
        degenerate: gap_estimate below the degeneracy warning threshold
        residual: ||H v - E v||
        iterations: Matrix-vector products spent on the ground state (dense: 0)
    """

    energy: float
    vector: np.ndarray
    gap_estimate: float
    solver_used: str
    degenerate: bool = False
    residual: float = 0.0
    iterations: int = 0


@dataclass(frozen=True)
class SolverOptions:
    """
    Eigensolver settings; defaults come from configs/solver.json.

    Attributes:
        tolerance: Residual bound for the Lanczos path
        max_iterations: Matrix-vector product budget for the Lanczos path
        dense_threshold: Largest dimension solved densely by the automatic choice
        degeneracy_warning_gap: Gap below which the ground state is flagged degenerate
        krylov_size: Krylov basis size before an explicit restart
        dense_guard: Largest dimension the dense path accepts at all
        workers: Threads used by the matrix-vector product
    """

    tolerance: float = 1e-10
    max_iterations: int = 5000
    dense_threshold: int = 2000
    degeneracy_warning_gap: float = 1e-8
    krylov_size: int = 120
    dense_guard: int = 20000
    workers: int = 1

    CONFIG_FILE = "solver.json"

    def __post_init__(self):
        for item in fields(self):
            value = getattr(self, item.name)
            if not value > 0:
                raise ValueError(f"Solver option '{item.name}' must be positive, got {value}")

    @staticmethod
    def _load_config_file() -> Dict[str, Any]:
        """Load solver defaults from JSON; empty if the file is missing."""
        config_path = os.path.join(
            os.path.dirname(os.path.abspath(__file__)), 'configs', SolverOptions.CONFIG_FILE
        )
        if not os.path.exists(config_path):
            return {}

        with open(config_path, 'r', encoding='utf-8') as f:
            return json.load(f)

    @classmethod
    def from_config(cls, config: Optional[Dict[str, Any]] = None) -> 'SolverOptions':
        """
        Build options from a config dictionary, ignoring unknown keys.

        Args:
            config: Option values. If None, loads configs/solver.json
        """
        if config is None:
            config = cls._load_config_file()
        known = {item.name for item in fields(cls)}
        return cls(**{key: value for key, value in config.items() if key in known})

    def with_overrides(self, **overrides: Any) -> 'SolverOptions':
        """Copy with the non-None overrides applied."""
        return replace(self, **{key: value for key, value in overrides.items() if value is not None})

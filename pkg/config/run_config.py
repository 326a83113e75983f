"""
Run configuration for the command-line front end.

Values are layered: built-in dataclass defaults, then config/default_run.json
(shared keys, then the command's section), then an optional user file with the
same layout, then command-line flags.
"""

import json
import logging
import os
from dataclasses import dataclass, field, fields
from typing import Any, Dict, List, Optional

from eigensolver import SolverManager, SolverOptions
from graphs import SOURCE_KINDS, RootedGraph
from output import OutputManager

logger = logging.getLogger(__name__)

COMMANDS = ['sweep', 'argmax', 'spectrum', 'order', 'dimer-check', 'catalog', 'complete-scan', 'pendant-scan']
GRAPH_COMMANDS = ('sweep', 'argmax', 'spectrum')
GRID_COMMANDS = ('sweep', 'argmax', 'dimer-check', 'complete-scan')
SIZE_COMMANDS = {'complete-scan': 2, 'pendant-scan': 3}

# one-sided three-point stencils need three grid points
MIN_GRID_STEPS = 3


@dataclass
class RunConfig:
    """
    Settings of one command-line run.

    Attributes:
        command: Subcommand name
        graph: Graph source (catalog:<id> | file:<path> | complete:<L> | pendant:<L> | dimer)
        particles: Number of bosons; None means one per vertex
        tol: Residual tolerance override for the eigensolver
        search_tol: Final bracket width of the maximum search
        out: Output file (directory for complete-scan); stdout if None
        sizes: Graph sizes of the family scans
        ids: Catalog ids of the ordering report
        taus: Tunneling amplitudes of the ordering report
        check_points: Number of tau points of the dimer comparison
        check_tol: Largest accepted analytic/numeric deviation
        peak_steps: Grid size of the dimer variance-derivative peak search
    """

    command: str
    graph: Optional[str] = None
    particles: Optional[int] = None
    epsilon: float = 1.0
    tau_min: float = 0.0
    tau_max: float = 20.0
    steps: int = 401
    tau: float = 1.0
    solver: str = 'auto'
    tol: Optional[float] = None
    search_tol: float = 1e-3
    coarse_points: int = 81
    out: Optional[str] = None
    format: str = 'csv'
    workers: int = 1
    sizes: List[int] = field(default_factory=list)
    ids: List[int] = field(default_factory=list)
    taus: List[float] = field(default_factory=list)
    check_points: int = 50
    check_tol: float = 1e-9
    peak_steps: int = 801
    verbose: bool = False

    CONFIG_FILE = "default_run.json"

    @staticmethod
    def _load_config_file(config_path: Optional[str] = None) -> Dict[str, Any]:
        """
        Load a run configuration file.

        Args:
            config_path: Path to a JSON file. If None, loads the packaged defaults

        Raises:
            FileNotFoundError: If an explicit path does not exist
            ValueError: If the file is not valid JSON
        """
        if config_path is None:
            config_path = os.path.join(os.path.dirname(os.path.abspath(__file__)), RunConfig.CONFIG_FILE)
            if not os.path.exists(config_path):
                return {}
        elif not os.path.exists(config_path):
            raise FileNotFoundError(f"Run configuration not found: {config_path}")

        try:
            with open(config_path, 'r', encoding='utf-8') as f:
                return json.load(f)
        except json.JSONDecodeError as e:
            raise ValueError(f"Invalid JSON in {config_path}: {e}")

    @staticmethod
    def _section(config: Dict[str, Any], command: str) -> Dict[str, Any]:
        """Shared keys overlaid with the command's own section."""
        values = {key: value for key, value in config.items() if key not in ('commands', 'description')}
        values.update(config.get('commands', {}).get(command, {}))
        return values

    def apply(self, values: Dict[str, Any], source: str) -> None:
        """Overwrite known fields; None values are skipped, unknown keys are logged and ignored."""
        known = {item.name for item in fields(self)}
        for key, value in values.items():
            if value is None:
                continue
            if key not in known or key == 'command':
                logger.warning("Ignoring unknown run option '%s' from %s", key, source)
                continue
            setattr(self, key, value)

    def validate(self) -> None:
        """
        Check every setting before any computation starts.

        Raises:
            ValueError: Naming the first invalid setting
        """
        if self.command not in COMMANDS:
            raise ValueError(f"Unknown command '{self.command}'. Available: {COMMANDS}")

        if self.command in GRAPH_COMMANDS:
            if not self.graph:
                raise ValueError(f"Command '{self.command}' needs --graph")
            kind = self.graph.partition(':')[0].strip().lower()
            if kind not in SOURCE_KINDS:
                raise ValueError(f"Unknown graph source '{self.graph}'. Available: {SOURCE_KINDS}")

        if self.particles is not None and self.particles < 1:
            raise ValueError(f"--particles must be at least 1, got {self.particles}")
        if self.epsilon < 0:
            raise ValueError(f"--epsilon must be nonnegative, got {self.epsilon}")
        if self.tau < 0:
            raise ValueError(f"--tau must be nonnegative, got {self.tau}")

        if self.command in GRID_COMMANDS:
            if self.tau_min < 0:
                raise ValueError(f"--tau-min must be nonnegative, got {self.tau_min}")
            if not self.tau_max > self.tau_min:
                raise ValueError(f"--tau-max ({self.tau_max}) must exceed --tau-min ({self.tau_min})")
            if self.steps < MIN_GRID_STEPS:
                raise ValueError(f"--steps must be at least {MIN_GRID_STEPS}, got {self.steps}")

        if self.solver not in SolverManager.AVAILABLE_SOLVERS and self.solver != 'auto':
            raise ValueError(f"Unknown solver '{self.solver}'")
        if self.tol is not None and not self.tol > 0:
            raise ValueError(f"--tol must be positive, got {self.tol}")
        if not self.search_tol > 0:
            raise ValueError(f"Search tolerance must be positive, got {self.search_tol}")
        if self.coarse_points < 2:
            raise ValueError(f"Coarse scan needs at least 2 points, got {self.coarse_points}")
        if self.format not in OutputManager.get_available_formats():
            raise ValueError(f"Unknown format '{self.format}'. Available: {OutputManager.get_available_formats()}")
        if self.workers < 1:
            raise ValueError(f"--workers must be at least 1, got {self.workers}")

        if self.command in SIZE_COMMANDS:
            smallest = SIZE_COMMANDS[self.command]
            if not self.sizes:
                raise ValueError(f"Command '{self.command}' needs at least one size")
            if min(self.sizes) < smallest:
                raise ValueError(f"Command '{self.command}' needs sizes >= {smallest}, got {self.sizes}")

        if self.command == 'order':
            if not self.ids or not self.taus:
                raise ValueError("Command 'order' needs catalog ids and tau values")
            if any(not 3 <= graph_id <= 13 for graph_id in self.ids):
                raise ValueError(f"Catalog ids must be in 3..13, got {self.ids}")
            if any(tau < 0 for tau in self.taus):
                raise ValueError(f"Tau values must be nonnegative, got {self.taus}")

        if self.command == 'dimer-check':
            if not self.epsilon > 0:
                raise ValueError(f"dimer-check needs --epsilon > 0, got {self.epsilon}")
            if not self.check_tol > 0:
                raise ValueError(f"--check-tol must be positive, got {self.check_tol}")
            if self.check_points < 2:
                raise ValueError(f"dimer-check needs at least 2 points, got {self.check_points}")
            if self.peak_steps < MIN_GRID_STEPS:
                raise ValueError(f"Peak grid needs at least {MIN_GRID_STEPS} points, got {self.peak_steps}")

    def particles_for(self, g: RootedGraph) -> int:
        """Number of bosons for a graph: --particles or unit filling."""
        return g.L if self.particles is None else self.particles

    def solver_options(self) -> SolverOptions:
        return SolverOptions.from_config().with_overrides(tolerance=self.tol, workers=self.workers)


def load_run_config(command: str, overrides: Optional[Dict[str, Any]] = None,
                    config_path: Optional[str] = None) -> RunConfig:
    """
    Build and validate the configuration of one run.

    Args:
        command: Subcommand name
        overrides: Command-line values; None entries keep the configured value
        config_path: Optional user JSON file with the layout of default_run.json

    Raises:
        FileNotFoundError: If config_path does not exist
        ValueError: On an invalid setting
    """
    config = RunConfig(command=command)
    config.apply(RunConfig._section(RunConfig._load_config_file(), command), RunConfig.CONFIG_FILE)
    if config_path is not None:
        config.apply(RunConfig._section(RunConfig._load_config_file(config_path), command), config_path)
    config.apply(overrides or {}, 'the command line')
    config.validate()
    return config

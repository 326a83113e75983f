"""
Command handlers of the command-line front end.

Each handler takes a validated RunConfig and returns the process exit status.
Results are written once, after all computation has finished; status lines go
to stderr so JSON on stdout stays machine-readable.
"""

import logging
import os
import sys
from typing import Any, Callable, Dict, List, Optional, Sequence

from analysis import (
    SweepError,
    TauGrid,
    complete_scan,
    dimer_check,
    find_entanglement_max,
    ordering_report,
    pendant_scan,
    sweep,
)
from config import RunConfig, load_run_config
from eigensolver import ConvergenceError
from fock import SectorOverflowError
from graphs import GraphParseError, RootedGraph, adjacency_spectrum, default_catalog, graph_source, subgraph_without_root
from output import OutputManager
from .parser import build_parser, overrides_from

logger = logging.getLogger(__name__)

# graph size of the catalog
CATALOG_PARTICLES = 4


def setup_logging(verbose: bool = False) -> None:
    """Log records to stderr; DEBUG with --verbose, INFO otherwise."""
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.INFO,
        format="%(asctime)s - %(levelname)s - %(message)s",
        handlers=[logging.StreamHandler(sys.stderr)],
    )


def status(message: str) -> None:
    print(message, file=sys.stderr)


def _resolve_graph(config: RunConfig) -> RootedGraph:
    g = graph_source(config.graph)
    if not g.is_connected():
        logger.warning("%s is disconnected; ground vectors need not be positive", g.name)
    return g


def _write(data: Any, path: Optional[str], output_format: str = 'json') -> bool:
    manager = OutputManager(output_format)
    if not manager.write(data, path):
        status(f"✗ Could not write output: {manager.error_message}")
        return False
    if path is not None:
        status(f"✓ Wrote {path}")
    return True


def cmd_sweep(config: RunConfig) -> int:
    g = _resolve_graph(config)
    N = config.particles_for(g)
    grid = TauGrid(config.tau_min, config.tau_max, config.steps)

    result = sweep(g, N, config.epsilon, grid, config.solver_options(), config.solver, config.workers)
    degenerate = sum(point.degenerate for point in result.points)
    status(f"✓ Swept {g.name} (L={g.L}, N={N}) over {grid.steps} points")
    if degenerate:
        status(f"  {degenerate} points have a degenerate ground state")

    return 0 if _write(result, config.out, config.format) else 1


def cmd_argmax(config: RunConfig) -> int:
    g = _resolve_graph(config)
    result = find_entanglement_max(
        g,
        config.particles_for(g),
        config.epsilon,
        search_range=(config.tau_min, config.tau_max),
        tol=config.search_tol,
        opts=config.solver_options(),
        method=config.solver,
        coarse_points=config.coarse_points,
    )
    where = "interior" if result.interior else "boundary"
    status(f"✓ {g.name}: E* = {result.E_star:.6f} at tau* = {result.tau_star:.4f} ({where})")
    return 0 if _write(result, config.out) else 1


def cmd_spectrum(config: RunConfig) -> int:
    g = _resolve_graph(config)
    report = {
        'graph': g.name,
        'spectrum': adjacency_spectrum(g).to_dict(),
        'subgraph_spectrum': adjacency_spectrum(subgraph_without_root(g)).to_dict(),
    }
    return 0 if _write(report, config.out) else 1


def cmd_order(config: RunConfig) -> int:
    N = CATALOG_PARTICLES if config.particles is None else config.particles
    reports = []
    for tau in config.taus:
        report = ordering_report(config.ids, N, config.epsilon, tau, config.solver_options(), config.solver)
        status(f"✓ tau={tau:g}: {' > '.join(report.rank_by_entanglement)}")
        reports.append(report)
    return 0 if _write(reports, config.out) else 1


def cmd_dimer_check(config: RunConfig) -> int:
    results = dimer_check(
        epsilon=config.epsilon,
        tau_min=config.tau_min,
        tau_max=config.tau_max,
        points=config.check_points,
        tolerance=config.check_tol,
        peak_steps=config.peak_steps,
        opts=config.solver_options(),
        method=config.solver,
    )
    for result in results:
        mark = "✓" if result.passed else "✗"
        print(f"{mark} {result.name}: {result.detail} (tolerance {result.tolerance:g})")

    failed = [result.name for result in results if not result.passed]
    if failed:
        status(f"✗ Dimer check failed: {', '.join(failed)}")
        return 1
    status("✓ All dimer checks passed")
    return 0


def cmd_catalog(config: RunConfig) -> int:
    catalog = default_catalog()
    listing = []
    for graph_id in catalog.ids():
        entry = {'id': graph_id, 'set': catalog.set_of(graph_id), 'description': catalog.description(graph_id)}
        entry.update(catalog.graph(graph_id).to_dict())
        listing.append(entry)
    return 0 if _write(listing, config.out) else 1


def cmd_complete_scan(config: RunConfig) -> int:
    grid = TauGrid(config.tau_min, config.tau_max, config.steps)
    entries = complete_scan(config.sizes, grid, config.epsilon, config.solver_options(), config.solver, config.workers)

    summary = []
    for entry in entries:
        path = os.path.join(config.out, f"K{entry.L}.{config.format}") if config.out else None
        if path is not None and not _write(entry.result, path, config.format):
            return 1
        summary.append({**entry.to_dict(), 'file': path})
    return 0 if _write(summary, None) else 1


def cmd_pendant_scan(config: RunConfig) -> int:
    entries = pendant_scan(config.sizes, config.tau, config.epsilon, config.solver_options(), config.solver)
    return 0 if _write(entries, config.out) else 1


COMMAND_HANDLERS: Dict[str, Callable[[RunConfig], int]] = {
    'sweep': cmd_sweep,
    'argmax': cmd_argmax,
    'spectrum': cmd_spectrum,
    'order': cmd_order,
    'dimer-check': cmd_dimer_check,
    'catalog': cmd_catalog,
    'complete-scan': cmd_complete_scan,
    'pendant-scan': cmd_pendant_scan,
}


def run(argv: Optional[Sequence[str]] = None) -> int:
    """
    Parse arguments, build the run configuration and dispatch the command.

    Args:
        argv: Arguments without the program name. If None, uses sys.argv

    Returns:
        Exit status: 0 on success, 1 on any reported failure
        (argparse exits with 2 on usage errors)
    """
    args = build_parser().parse_args(argv)
    setup_logging(bool(args.verbose))

    try:
        config = load_run_config(args.command, overrides_from(args), args.config)
        return COMMAND_HANDLERS[config.command](config)
    except GraphParseError as e:
        status(f"✗ Error: invalid graph file: {e}")
    except FileNotFoundError as e:
        status(f"✗ Error: {e}")
    except (SweepError, ConvergenceError) as e:
        status(f"✗ Error: eigensolver failed: {e}")
    except SectorOverflowError as e:
        status(f"✗ Error: sector too large: {e}")
    except ValueError as e:
        status(f"✗ Error: {e}")
    return 1


def main(argv: Optional[List[str]] = None) -> None:
    sys.exit(run(argv))

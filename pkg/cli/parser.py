"""
Command-line argument definitions.
"""

import argparse
from typing import Any, Dict

from eigensolver import SolverManager
from output import OutputManager

EPILOG = '''
Examples:
  python main.py catalog
  python main.py sweep --graph catalog:5 --tau-max 20 --steps 401 --out g5.csv
  python main.py sweep --graph dimer --particles 2 --format json
  python main.py argmax --graph catalog:4
  python main.py spectrum --graph catalog:13
  python main.py order --ids 10 11 12 13 --taus 0.1 20
  python main.py dimer-check --epsilon 2
  python main.py complete-scan --sizes 3 4 5 --out scans/
  python main.py pendant-scan --sizes 4 5 6 7 8
'''

# flags that are not run settings
NON_CONFIG_ARGS = ('command', 'config', 'func')


def _common_arguments() -> argparse.ArgumentParser:
    """Flags shared by every subcommand. Defaults are None so the run configuration fills them."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        '--graph',
        default=None,
        help='Graph source: catalog:<id> | file:<path> | complete:<L> | pendant:<L> | dimer'
    )
    common.add_argument(
        '--particles',
        type=int,
        default=None,
        help='Number of bosons (default: one per vertex)'
    )
    common.add_argument('--epsilon', type=float, default=None, help='Self-interaction strength')
    common.add_argument('--tau-min', type=float, default=None, help='Lower end of the tau grid')
    common.add_argument('--tau-max', type=float, default=None, help='Upper end of the tau grid')
    common.add_argument('--steps', type=int, default=None, help='Number of tau grid points')
    common.add_argument(
        '--solver',
        choices=['auto'] + list(SolverManager.AVAILABLE_SOLVERS),
        default=None,
        help='Eigensolver: auto (dense for small sectors), dense or lanczos'
    )
    common.add_argument('--tol', type=float, default=None, help='Eigensolver residual tolerance')
    common.add_argument('--out', default=None, help='Output file (directory for complete-scan); stdout if omitted')
    common.add_argument(
        '--format',
        choices=OutputManager.get_available_formats(),
        default=None,
        help='Output format for sweep tables'
    )
    common.add_argument('--workers', type=int, default=None, help='Concurrent solves / matvec threads')
    common.add_argument('--config', default=None, help='Run configuration JSON (layout of config/default_run.json)')
    common.add_argument('-v', '--verbose', action='store_true', default=None, help='Debug logging')
    return common


def build_parser() -> argparse.ArgumentParser:
    """
    Build the argument parser with one subparser per command.

    Returns:
        Configured ArgumentParser
    """
    parser = argparse.ArgumentParser(
        prog='main.py',
        description='Bose-Hubbard graph entanglement - exact ground states of bosons on small rooted graphs',
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog=EPILOG
    )
    subparsers = parser.add_subparsers(dest='command', metavar='command')
    subparsers.required = True
    common = _common_arguments()

    def add(name: str, help_text: str) -> argparse.ArgumentParser:
        return subparsers.add_parser(name, parents=[common], help=help_text, description=help_text)

    add('sweep', 'Ground-state observables over a tau grid (CSV or JSON)')

    argmax = add('argmax', 'Location of the root-mode entanglement maximum (JSON)')
    argmax.add_argument('--coarse-points', type=int, default=None, help='Coarse scan size (at least 64 are used)')
    argmax.add_argument('--search-tol', type=float, default=None, help='Final bracket width of the maximum search')

    add('spectrum', 'Adjacency spectra of the graph and its root-deleted sub-graph (JSON)')

    order = add('order', 'Catalog graphs ranked by entanglement and spectral radius (JSON)')
    order.add_argument('--ids', type=int, nargs='+', default=None, help='Catalog ids (3..13)')
    order.add_argument('--taus', type=float, nargs='+', default=None, help='Tunneling amplitudes')

    check = add('dimer-check', 'Numerical pipeline against the dimer closed forms')
    check.add_argument('--check-tol', type=float, default=None, help='Largest accepted deviation')
    check.add_argument('--check-points', type=int, default=None, help='Number of compared tau points')
    check.add_argument('--peak-steps', type=int, default=None, help='Grid size of the peak search on [0, 2 epsilon]')

    add('catalog', 'List the catalog graphs with their edge lists (JSON)')

    complete = add('complete-scan', 'Sweeps of complete graphs at unit filling, one table per size')
    complete.add_argument('--sizes', type=int, nargs='+', default=None, help='Graph sizes L (N = L)')

    pendant = add('pendant-scan', 'Root entanglement and condensate overlap of pendant-complete graphs (JSON)')
    pendant.add_argument('--sizes', type=int, nargs='+', default=None, help='Graph sizes L (N = L)')
    pendant.add_argument('--tau', type=float, default=None, help='Tunneling amplitude')

    return parser


def overrides_from(args: argparse.Namespace) -> Dict[str, Any]:
    """Run settings given on the command line."""
    return {key: value for key, value in vars(args).items() if key not in NON_CONFIG_ARGS}

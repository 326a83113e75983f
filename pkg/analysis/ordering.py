"""
Topology orderings: catalog graphs ranked by root-mode entanglement and by
the spectral radius of the graph and of its root-deleted sub-graph.
"""

from dataclasses import dataclass
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple

from eigensolver import SolverManager, SolverOptions
from graphs import adjacency_spectrum, catalog_graph, subgraph_without_root
from .sweep import solve_point

# values closer than this are ties when ranking
SPECTRAL_TIE = 1e-9
ENTANGLEMENT_TIE = 1e-12


@dataclass(frozen=True)
class GraphEntry:
    name: str
    graph_id: int
    entanglement: float
    lambda_max: float
    subgraph_lambda_max: float

    def to_dict(self) -> dict:
        return {
            'name': self.name,
            'id': self.graph_id,
            'entanglement': self.entanglement,
            'lambda_max': self.lambda_max,
            'subgraph_lambda_max': self.subgraph_lambda_max,
        }


@dataclass(frozen=True)
class OrderingReport:
    """
    Rankings at one tau; every rank sequence lists graph names, largest value first.

    Concordance fractions count, over graph pairs untied in both quantities,
    the share ordered the same way as by entanglement (None without such pairs).
    """

    tau: float
    N: int
    epsilon: float
    entries: Tuple[GraphEntry, ...]
    rank_by_entanglement: Tuple[str, ...]
    rank_by_lambda_max: Tuple[str, ...]
    rank_by_subgraph_lambda_max: Tuple[str, ...]
    concordance_lambda_max: Optional[float]
    concordance_subgraph_lambda_max: Optional[float]

    def to_dict(self) -> dict:
        return {
            'tau': self.tau,
            'N': self.N,
            'epsilon': self.epsilon,
            'entries': [entry.to_dict() for entry in self.entries],
            'rank_by_entanglement': list(self.rank_by_entanglement),
            'rank_by_lambda_max': list(self.rank_by_lambda_max),
            'rank_by_subgraph_lambda_max': list(self.rank_by_subgraph_lambda_max),
            'concordance_lambda_max': self.concordance_lambda_max,
            'concordance_subgraph_lambda_max': self.concordance_subgraph_lambda_max,
        }


def _ranking(entries: Sequence[GraphEntry], key: str) -> Tuple[str, ...]:
    ordered = sorted(entries, key=lambda entry: (-getattr(entry, key), entry.graph_id))
    return tuple(entry.name for entry in ordered)


def concordance(first: Sequence[float], second: Sequence[float], first_tie: float = ENTANGLEMENT_TIE,
                second_tie: float = SPECTRAL_TIE) -> Optional[float]:
    """
    Share of untied pairs ordered the same way by two value lists.

    Returns:
        Fraction in [0, 1], or None if every pair is tied in one of the lists
    """
    agree = 0
    counted = 0
    for i, j in combinations(range(len(first)), 2):
        a = first[i] - first[j]
        b = second[i] - second[j]
        if abs(a) <= first_tie or abs(b) <= second_tie:
            continue
        counted += 1
        if (a > 0) == (b > 0):
            agree += 1
    if counted == 0:
        return None
    return agree / counted


def ordering_report(
    ids: Sequence[int],
    N: int,
    epsilon: float,
    tau: float,
    opts: Optional[SolverOptions] = None,
    method: str = 'auto',
) -> OrderingReport:
    """
    Rank catalog graphs at one tau.

    Args:
        ids: Catalog ids, each in [3, 13]
        N: Number of bosons
        epsilon: Self-interaction strength
        tau: Tunneling amplitude

    Raises:
        ValueError: On an id outside the catalog
        SweepError: If a solve fails
    """
    graphs = [catalog_graph(graph_id) for graph_id in ids]
    manager = SolverManager(method, opts)

    entries: List[GraphEntry] = []
    for graph_id, g in zip(ids, graphs):
        point, _ = solve_point(g, N, epsilon, tau, manager)
        entries.append(GraphEntry(
            name=g.name,
            graph_id=int(graph_id),
            entanglement=point.entanglement,
            lambda_max=adjacency_spectrum(g).lambda_max,
            subgraph_lambda_max=adjacency_spectrum(subgraph_without_root(g)).lambda_max,
        ))

    values: Dict[str, List[float]] = {
        key: [getattr(entry, key) for entry in entries]
        for key in ('entanglement', 'lambda_max', 'subgraph_lambda_max')
    }
    return OrderingReport(
        tau=float(tau),
        N=N,
        epsilon=epsilon,
        entries=tuple(entries),
        rank_by_entanglement=_ranking(entries, 'entanglement'),
        rank_by_lambda_max=_ranking(entries, 'lambda_max'),
        rank_by_subgraph_lambda_max=_ranking(entries, 'subgraph_lambda_max'),
        concordance_lambda_max=concordance(values['entanglement'], values['lambda_max']),
        concordance_subgraph_lambda_max=concordance(values['entanglement'], values['subgraph_lambda_max']),
    )

"""
Rooted graph value type and the parametric graph families.
"""

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, List, Tuple

import networkx as nx
import numpy as np

Edge = Tuple[int, int]


@dataclass(frozen=True)
class RootedGraph:
    """
    Undirected simple graph whose vertex 0 is the reference (root) mode.

    Edges are stored as sorted (u, v) pairs with u < v, in ascending order.
    """

    L: int
    edges: Tuple[Edge, ...]
    name: str = "graph"
    root: int = 0

    def __post_init__(self):
        if self.L < 1:
            raise ValueError(f"A graph needs at least one vertex, got L={self.L}")
        if self.root != 0:
            raise ValueError(f"Root must be vertex 0, got {self.root}")

        normalized = []
        for u, v in self.edges:
            u, v = int(u), int(v)
            if u == v:
                raise ValueError(f"Self-loop ({u}, {v}) in graph '{self.name}'")
            if not (0 <= u < self.L and 0 <= v < self.L):
                raise ValueError(f"Edge ({u}, {v}) out of range for {self.L} vertices")
            normalized.append((min(u, v), max(u, v)))

        if len(set(normalized)) != len(normalized):
            raise ValueError(f"Duplicate edge in graph '{self.name}'")
        object.__setattr__(self, 'edges', tuple(sorted(normalized)))

    @classmethod
    def from_edges(cls, L: int, edges: Iterable[Iterable[int]], name: str = "graph") -> 'RootedGraph':
        """Build a graph from any iterable of vertex pairs."""
        return cls(L=L, edges=tuple(tuple(edge) for edge in edges), name=name)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def to_networkx(self) -> nx.Graph:
        """Equivalent networkx graph on nodes 0..L-1."""
        graph = nx.Graph()
        graph.add_nodes_from(range(self.L))
        graph.add_edges_from(self.edges)
        return graph

    def adjacency_matrix(self) -> np.ndarray:
        """Dense 0/1 adjacency matrix in vertex order."""
        return nx.to_numpy_array(self.to_networkx(), nodelist=list(range(self.L)))

    def degree(self, vertex: int) -> int:
        return sum(1 for edge in self.edges if vertex in edge)

    def is_connected(self) -> bool:
        return nx.is_connected(self.to_networkx())

    def to_dict(self) -> dict:
        return {
            'name': self.name,
            'vertices': self.L,
            'root': self.root,
            'edges': [list(edge) for edge in self.edges],
        }


def complete_graph(L: int) -> RootedGraph:
    """
    Complete graph K_L rooted at vertex 0.

    Raises:
        ValueError: If L < 2
    """
    if L < 2:
        raise ValueError(f"Complete graph needs L >= 2, got {L}")
    return RootedGraph(L, tuple(combinations(range(L), 2)), name=f"K{L}")


def dimer(name: str = "dimer") -> RootedGraph:
    """Two modes joined by a single edge."""
    return RootedGraph(2, ((0, 1),), name=name)


def pendant_complete(L: int) -> RootedGraph:
    """
    Root attached by the single edge (0, 1) to a complete graph on {1, ..., L-1}.

    Raises:
        ValueError: If L < 3
    """
    if L < 3:
        raise ValueError(f"Pendant-complete graph needs L >= 3, got {L}")
    edges: List[Edge] = [(0, 1)]
    edges.extend(combinations(range(1, L), 2))
    return RootedGraph(L, tuple(edges), name=f"pendant_K{L - 1}")


def subgraph_without_root(g: RootedGraph) -> RootedGraph:
    """
    Graph Γ - {0}: vertices 1..L-1 relabeled to 0..L-2, edges touching the root dropped.

    Raises:
        ValueError: If g has a single vertex
    """
    if g.L < 2:
        raise ValueError(f"Graph '{g.name}' has no vertex besides the root")
    edges = tuple((u - 1, v - 1) for u, v in g.edges if u != 0 and v != 0)
    return RootedGraph(g.L - 1, edges, name=f"{g.name}-0")

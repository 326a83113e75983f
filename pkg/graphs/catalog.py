"""
Catalog of the inequivalent four-vertex rooted graphs.
Edge lists are loaded from catalog.json next to this module.
"""

import json
import os
from functools import lru_cache
from typing import Any, Dict, List, Optional

from .rooted_graph import RootedGraph

CATALOG_VERTICES = 4


class GraphCatalog:
    """
    Loader and accessor for the rooted graph catalog (ids 3 to 13).
    """

    CONFIG_FILE = "catalog.json"

    def __init__(self, config: Optional[Dict[str, Any]] = None):
        """
        Initialize the catalog.

        Args:
            config: Catalog dictionary. If None, loads from catalog.json
        """
        if config is None:
            config = self._load_config_file()

        self.name = config.get("catalog_name", "Unknown")
        self.version = config.get("version", "1.0")
        self.sets: Dict[str, List[int]] = {
            label: [int(i) for i in ids] for label, ids in config.get("sets", {}).items()
        }
        self._graphs: Dict[int, RootedGraph] = {}
        self._descriptions: Dict[int, str] = {}
        for key, entry in config.get("graphs", {}).items():
            graph_id = int(key)
            self._graphs[graph_id] = RootedGraph.from_edges(
                CATALOG_VERTICES, entry["edges"], name=f"G{graph_id}"
            )
            self._descriptions[graph_id] = entry.get("description", "")

    @staticmethod
    def _load_config_file() -> Dict[str, Any]:
        """
        Load the catalog from its JSON file.

        Raises:
            FileNotFoundError: If catalog.json is missing
        """
        config_path = os.path.join(os.path.dirname(os.path.abspath(__file__)), GraphCatalog.CONFIG_FILE)
        if not os.path.exists(config_path):
            raise FileNotFoundError(f"Graph catalog not found: {config_path}")

        with open(config_path, 'r', encoding='utf-8') as f:
            return json.load(f)

    def ids(self) -> List[int]:
        return sorted(self._graphs)

    def graph(self, graph_id: int) -> RootedGraph:
        """
        Catalog graph by id.

        Raises:
            ValueError: If the id is not in the catalog
        """
        if graph_id not in self._graphs:
            raise ValueError(f"Catalog id must be in {self.ids()[0]}..{self.ids()[-1]}, got {graph_id}")
        return self._graphs[graph_id]

    def description(self, graph_id: int) -> str:
        self.graph(graph_id)
        return self._descriptions[graph_id]

    def set_of(self, graph_id: int) -> str:
        """Label of the catalog set (root degree class) holding a graph."""
        for label, ids in self.sets.items():
            if graph_id in ids:
                return label
        raise ValueError(f"Catalog id {graph_id} belongs to no set")


@lru_cache(maxsize=1)
def default_catalog() -> GraphCatalog:
    return GraphCatalog()


def catalog_graph(graph_id: int) -> RootedGraph:
    """
    Four-vertex rooted graph from the catalog.

    Args:
        graph_id: Catalog id in [3, 13]

    Raises:
        ValueError: If graph_id is outside the catalog
    """
    return default_catalog().graph(int(graph_id))

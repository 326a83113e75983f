"""
Graphs package.
Rooted graphs, the four-vertex catalog, parametric families and adjacency spectra.
"""

from .rooted_graph import RootedGraph, complete_graph, pendant_complete, dimer, subgraph_without_root
from .catalog import GraphCatalog, catalog_graph, default_catalog
from .graph_parser import GraphParseError, parse_graph, load_graph
from .spectrum import SpectrumReport, adjacency_spectrum
from .sources import SOURCE_KINDS, graph_source

__all__ = [
    'RootedGraph',
    'complete_graph',
    'pendant_complete',
    'dimer',
    'subgraph_without_root',
    'GraphCatalog',
    'catalog_graph',
    'default_catalog',
    'GraphParseError',
    'parse_graph',
    'load_graph',
    'SpectrumReport',
    'adjacency_spectrum',
    'SOURCE_KINDS',
    'graph_source',
]

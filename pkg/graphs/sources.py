"""
Resolution of graph source strings used on the command line.
"""

from .catalog import catalog_graph
from .graph_parser import load_graph
from .rooted_graph import RootedGraph, complete_graph, dimer, pendant_complete

SOURCE_KINDS = ['catalog', 'file', 'complete', 'pendant', 'dimer']


def graph_source(text: str) -> RootedGraph:
    """
    Build a graph from a source string.

    Accepted forms: catalog:<id>, file:<path>, complete:<L>, pendant:<L>, dimer

    Raises:
        ValueError: On an unknown kind or a malformed argument
        FileNotFoundError: If a file source does not exist
    """
    kind, _, argument = text.partition(':')
    kind = kind.strip().lower()

    if kind == 'dimer':
        if argument:
            raise ValueError(f"Graph source 'dimer' takes no argument, got '{text}'")
        return dimer()

    if kind not in SOURCE_KINDS:
        raise ValueError(f"Unknown graph source '{text}'. Available: {SOURCE_KINDS}")
    if not argument:
        raise ValueError(f"Graph source '{kind}' needs an argument, e.g. '{kind}:4'")

    if kind == 'file':
        return load_graph(argument)

    try:
        value = int(argument)
    except ValueError:
        raise ValueError(f"Graph source '{text}' needs an integer argument")

    if kind == 'catalog':
        return catalog_graph(value)
    if kind == 'complete':
        return complete_graph(value)
    return pendant_complete(value)

import math

import numpy as np
import pytest

from graphs import (
    GraphCatalog,
    GraphParseError,
    RootedGraph,
    adjacency_spectrum,
    catalog_graph,
    complete_graph,
    dimer,
    graph_source,
    load_graph,
    parse_graph,
    pendant_complete,
    subgraph_without_root,
)

CATALOG_IDS = range(3, 14)
BIPARTITE_IDS = (4, 6, 8, 10)


def test_rooted_graph_normalizes_edges():
    g = RootedGraph.from_edges(3, [(2, 1), (0, 1)])
    assert g.edges == ((0, 1), (1, 2))
    assert g.root == 0


@pytest.mark.parametrize("edges", [[(0, 0)], [(0, 3)], [(0, 1), (1, 0)]])
def test_rooted_graph_rejects_invalid_edges(edges):
    with pytest.raises(ValueError):
        RootedGraph.from_edges(3, edges)


def test_catalog_examples():
    k4 = catalog_graph(13)
    assert k4.num_edges == 6
    assert k4.edges == complete_graph(4).edges

    star = catalog_graph(10)
    assert star.edges == ((0, 1), (0, 2), (0, 3))

    g5 = catalog_graph(5)
    assert g5.degree(0) == 1
    assert subgraph_without_root(g5).edges == complete_graph(3).edges


@pytest.mark.parametrize("graph_id", [2, 14, 0])
def test_catalog_rejects_unknown_ids(graph_id):
    with pytest.raises(ValueError):
        catalog_graph(graph_id)


def test_catalog_root_degree_partition():
    catalog = GraphCatalog()
    expected = {'a': 1, 'b': 2, 'c': 3}
    for graph_id in CATALOG_IDS:
        assert catalog_graph(graph_id).degree(0) == expected[catalog.set_of(graph_id)]


def test_catalog_subgraph_link_counts():
    counts = {graph_id: subgraph_without_root(catalog_graph(graph_id)).num_edges for graph_id in CATALOG_IDS}
    assert [counts[i] for i in (10, 11, 12, 13)] == [0, 1, 2, 3]
    assert [counts[i] for i in (6, 7, 8, 9)] == [1, 2, 2, 3]
    assert [counts[i] for i in (3, 4, 5)] == [2, 2, 3]


def test_catalog_graphs_are_connected():
    assert all(catalog_graph(graph_id).is_connected() for graph_id in CATALOG_IDS)


def test_complete_graph():
    assert complete_graph(2).edges == dimer().edges
    assert complete_graph(7).num_edges == 21
    with pytest.raises(ValueError):
        complete_graph(1)


def test_pendant_complete():
    assert pendant_complete(4).edges == catalog_graph(5).edges
    assert pendant_complete(5).num_edges == 7
    assert pendant_complete(8).num_edges == 22
    with pytest.raises(ValueError):
        pendant_complete(2)


def test_subgraph_without_root():
    assert subgraph_without_root(catalog_graph(13)).edges == complete_graph(3).edges
    empty = subgraph_without_root(catalog_graph(10))
    assert empty.L == 3
    assert empty.num_edges == 0
    assert not empty.is_connected()


def test_parse_graph_examples():
    assert parse_graph("vertices 2\n0 1\n").edges == dimer().edges
    text = "# path\nvertices 4\n\n0 1\n1 2\n2 3\n"
    assert parse_graph(text).edges == catalog_graph(4).edges


@pytest.mark.parametrize("text, line", [
    ("vertices 3\n0 0\n", 2),
    ("vertices 3\n0 3\n", 2),
    ("vertices 3\n0 1\n1 0\n", 3),
    ("vertices 3\n0 1 2\n", 2),
    ("0 1\n", 1),
    ("# only a comment\n", 1),
])
def test_parse_graph_errors_carry_line_number(text, line):
    with pytest.raises(GraphParseError) as excinfo:
        parse_graph(text)
    assert excinfo.value.line_number == line
    assert f"line {line}" in str(excinfo.value)


def test_load_graph(tmp_path):
    path = tmp_path / "triangle.graph"
    path.write_text("vertices 3\n0 1\n1 2\n0 2\n", encoding="utf-8")
    g = load_graph(str(path))
    assert g.name == "triangle"
    assert g.num_edges == 3


def test_load_graph_missing_file_names_path(tmp_path):
    missing = str(tmp_path / "missing.graph")
    with pytest.raises(FileNotFoundError, match="missing.graph"):
        load_graph(missing)


def test_graph_source(tmp_path):
    assert graph_source("catalog:5").edges == catalog_graph(5).edges
    assert graph_source("complete:5").num_edges == 10
    assert graph_source("pendant:6").num_edges == 11
    assert graph_source("dimer").L == 2

    path = tmp_path / "g.graph"
    path.write_text("vertices 2\n0 1\n", encoding="utf-8")
    assert graph_source(f"file:{path}").L == 2

    for bad in ("torus:3", "catalog:x", "catalog", "dimer:2"):
        with pytest.raises(ValueError):
            graph_source(bad)


@pytest.mark.parametrize("g, expected", [
    (complete_graph(4), 3.0),
    (catalog_graph(4), (1 + math.sqrt(5)) / 2),
    (catalog_graph(10), math.sqrt(3)),
    (dimer(), 1.0),
])
def test_adjacency_spectrum_radius(g, expected):
    report = adjacency_spectrum(g)
    assert report.lambda_max == pytest.approx(expected, abs=1e-6)
    assert report.one_particle_ground_energy == -report.lambda_max
    assert report.eigenvalues[-1] == report.lambda_max
    assert list(report.eigenvalues) == sorted(report.eigenvalues)


@pytest.mark.parametrize("graph_id", CATALOG_IDS)
def test_adjacency_spectrum_is_traceless(graph_id):
    eigenvalues = np.array(adjacency_spectrum(catalog_graph(graph_id)).eigenvalues)
    assert abs(eigenvalues.sum()) < 1e-10
    if graph_id in BIPARTITE_IDS:
        np.testing.assert_allclose(np.sort(eigenvalues), np.sort(-eigenvalues), atol=1e-10)


def test_subgraph_spectra():
    assert adjacency_spectrum(subgraph_without_root(catalog_graph(13))).lambda_max == pytest.approx(2.0)
    assert adjacency_spectrum(subgraph_without_root(catalog_graph(10))).lambda_max == pytest.approx(0.0, abs=1e-12)
    assert adjacency_spectrum(subgraph_without_root(dimer())).lambda_max == pytest.approx(0.0, abs=1e-12)


def test_small_tau_chains_follow_spectral_radius():
    radius = {graph_id: adjacency_spectrum(catalog_graph(graph_id)).lambda_max for graph_id in CATALOG_IDS}
    for chain in ([13, 12, 11, 10], [5, 3, 4], [9, 7, 8, 6]):
        values = [radius[graph_id] for graph_id in chain]
        assert all(a > b for a, b in zip(values, values[1:]))

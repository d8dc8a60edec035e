import pytest

from minipaint.errors import CapacityError, InputError
from minipaint.graph import (
    Graph,
    cogem_free_by_domination,
    cogem_witnesses,
    color_component,
    connected_components,
    dominating_edges,
    induced_p4s,
    is_cogem_free,
    is_cograph,
    is_connected,
    is_connected_subset,
    is_dominating,
    is_separator,
    minimal_separators,
)

from helpers import all_induced_p4_sets, cycle, path


def test_construction_rejects_bad_edges():
    with pytest.raises(InputError):
        Graph(3, [(0, 0)])
    with pytest.raises(InputError):
        Graph(3, [(0, 99)])
    with pytest.raises(CapacityError):
        Graph(64)


def test_graph_is_immutable_and_hashable():
    g = path(3)
    with pytest.raises(ValueError):
        g.adjacency[0] = 0
    assert g == path(3) and hash(g) == hash(path(3))
    assert g.neighbors(1) == {0, 2}
    assert g.closed_neighborhood(0) == {0, 1}


def test_components_single_edge():
    assert connected_components(Graph(2, [(0, 1)])) == [frozenset({0, 1})]


def test_components_two_disjoint_edges():
    parts = connected_components(Graph(4, [(0, 1), (2, 3)]))
    assert sorted(len(p) for p in parts) == [2, 2]


def test_components_figure1(fig1):
    assert connected_components(fig1.graph) == [frozenset(range(12))]


def test_connected_subset_figure1(fig1, vset):
    assert is_connected_subset(fig1.graph, vset("b f p"))
    assert not is_connected_subset(fig1.graph, vset("x m"))
    assert all(is_connected_subset(fig1.graph, {v}) for v in range(12))


def test_color_component_figure1(fig1, vid, vset, cid):
    g, t = fig1.graph, fig1.template
    assert color_component(g, t, vid("x")) == {vid("x")}
    after = tuple(cid("G") if v == vid("p") else c for v, c in enumerate(t))
    # (c,W) leaves p's component alone, (p,G) then merges p with b and f
    assert color_component(g, after, vid("p")) == vset("p b f")


def test_color_component_monochromatic():
    g = cycle(5)
    assert color_component(g, (3,) * 5, 2) == frozenset(range(5))


def test_color_component_undefined_is_shared():
    g = path(3)
    assert color_component(g, (None, None, 1), 0) == {0, 1}


def test_dominating_figure1(fig1, vset):
    g = fig1.graph
    assert is_dominating(g, vset("r b s m"))
    assert not is_dominating(g, vset("b"))
    assert is_dominating(g, range(12))


def test_separator_examples(fig1, vset):
    p3 = path(3)
    assert is_separator(p3, {1})
    assert not is_separator(p3, {0})
    assert is_separator(fig1.graph, vset("b p s f"))
    with pytest.raises(InputError):
        is_separator(Graph(2), {0})


def test_induced_p4s_examples(fig1, vset):
    assert induced_p4s(path(4)) == [(0, 1, 2, 3)]
    assert vset("r b s m") in {frozenset(p) for p in induced_p4s(fig1.graph)}
    assert induced_p4s(cycle(4)) == []


def test_induced_p4s_are_paths_in_order(fig1):
    g = fig1.graph
    for a, b, c, d in induced_p4s(g):
        assert g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(c, d)
        assert not (g.has_edge(a, c) or g.has_edge(b, d) or g.has_edge(a, d))
        assert a < d


def test_induced_p4s_match_brute_force(fig1):
    assert {frozenset(p) for p in induced_p4s(fig1.graph)} == all_induced_p4_sets(fig1.graph)


def test_cograph_examples(fig1):
    assert is_cograph(cycle(4))
    assert not is_cograph(path(4))
    assert not is_cograph(fig1.graph)


def test_cogem_free_examples(fig1):
    assert is_cogem_free(fig1.graph)
    assert is_cogem_free(path(5))
    cogem = Graph(5, [(0, 1), (1, 2), (2, 3)])
    assert not is_cogem_free(cogem)
    assert cogem_witnesses(cogem) == [(0, 1, 2, 3, 4)]
    assert cogem_free_by_domination(path(5)) and not cogem_free_by_domination(cogem)


def test_dominating_edges_examples():
    assert dominating_edges(Graph(2, [(0, 1)])) == [(0, 1)]
    assert len(dominating_edges(cycle(4))) == 4
    assert dominating_edges(path(5)) == []


def test_minimal_separators_of_c4():
    assert sorted(sorted(s) for s in minimal_separators(cycle(4))) == [[0, 2], [1, 3]]


def test_empty_graph():
    g = Graph(0)
    assert connected_components(g) == [] and not is_connected(g)
    assert is_cograph(g) and is_cogem_free(g)

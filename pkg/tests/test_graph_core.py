import networkx as nx
import pytest
from hypothesis import given, settings

from src.isolation.errors import GraphParseError, GraphSizeError, IsolationError, StructureError
from src.isolation.families import complete, cycle, fan_triangulation, path, petersen, star
from src.isolation.graph_core import (
    Graph,
    VertexSet,
    bfs_tree,
    bipartite_double,
    bipartition,
    cartesian_product,
    closed_neighborhood,
    combinations_of,
    complement,
    component_bits,
    disjoint_union,
    emit_edge_list,
    emit_graph6,
    from_networkx,
    graph_id,
    induced_subgraph,
    is_bipartite,
    is_connected,
    is_forest,
    is_maximal_outerplanar,
    is_outerplanar,
    is_tree,
    iter_bits,
    line_graph,
    open_neighborhood,
    parse_edge_list,
    parse_graph6,
    read_graph,
    remainder,
    square,
    to_networkx,
)

from .strategies import graphs


def test_from_edges_is_symmetric():
    g = Graph.from_edges(3, [(0, 1), (1, 2)])
    assert g.has_edge(1, 0) and g.has_edge(2, 1)
    assert g.degrees() == [1, 2, 1]
    assert list(g.edges()) == [(0, 1), (1, 2)]


def test_validated_adjacency_rejects_asymmetry_and_loops():
    with pytest.raises(ValueError):
        Graph.from_adjacency([0b10, 0b00])
    with pytest.raises(ValueError):
        Graph.from_adjacency([0b1])
    with pytest.raises(IsolationError):
        Graph.from_edges(2, [(0, 0)])


def test_vertex_set_operations():
    a = VertexSet.of(5, [0, 2])
    b = VertexSet.of(5, [2, 3])
    assert str(a | b) == "{0,2,3}"
    assert str(a & b) == "{2}"
    assert (a - b).sorted() == [0]
    assert len(a.complement()) == 3
    assert 2 in a and 1 not in a
    with pytest.raises(ValueError):
        VertexSet.of(3, [4])
    with pytest.raises(IsolationError):
        _ = a | VertexSet.of(4, [0])


def test_neighbourhoods_and_remainder_on_c5():
    c5 = cycle(5)
    s = c5.vertex_set([0])
    assert closed_neighborhood(c5, s).sorted() == [0, 1, 4]
    assert open_neighborhood(c5, s).sorted() == [1, 4]
    assert remainder(c5, s).sorted() == [2, 3]


def test_combinations_in_numeric_order():
    combos = list(combinations_of(4, 2))
    assert combos == sorted(combos)
    assert len(combos) == 6
    assert all(c.bit_count() == 2 for c in combos)
    assert list(combinations_of(3, 0)) == [0]
    assert list(combinations_of(2, 3)) == []


def test_complement_of_c5_is_c5():
    assert nx.is_isomorphic(to_networkx(complement(cycle(5))), to_networkx(cycle(5)))


def test_cartesian_product_layout():
    c4 = cartesian_product(path(2), path(2))
    assert c4.n == 4 and c4.edge_count() == 4 and c4.is_regular()
    prism = cartesian_product(cycle(3), complete(2))
    # (i, j) at 2i + j: layers are the two triangles
    assert prism.has_edge(0, 1) and prism.has_edge(0, 2) and not prism.has_edge(0, 3)
    assert prism.edge_count() == 9


def test_square_and_bipartite_double():
    sq = square(path(5))
    assert sq.neighbors(0) == [1, 2]
    assert sq.neighbors(2) == [0, 1, 3, 4]
    b = bipartite_double(complete(2))
    assert b.n == 4 and b.edge_count() == 4
    assert is_bipartite(b)
    assert b.min_degree() == 2


def test_induced_subgraph_and_union():
    h, keep = induced_subgraph(cycle(5), 0b10110)
    assert keep == [1, 2, 4]
    assert list(h.edges()) == [(0, 1)]
    u = disjoint_union(complete(2), path(3))
    assert u.n == 5 and list(u.edges()) == [(0, 1), (2, 3), (3, 4)]


def test_line_graph_of_claw_is_triangle():
    lg = line_graph(star(3))
    assert lg.n == 3 and lg.edge_count() == 3


def test_structure_queries():
    assert is_tree(path(4)) and is_forest(disjoint_union(path(2), path(3)))
    assert not is_tree(cycle(4))
    assert component_bits(disjoint_union(path(2), Graph.empty(1), path(2))) == [0b11, 0b100, 0b11000]
    left, right = bipartition(cycle(6))
    assert left.sorted() == [0, 2, 4] and right.sorted() == [1, 3, 5]
    with pytest.raises(StructureError):
        bipartition(cycle(5))


def test_bfs_tree_levels():
    t = bfs_tree(path(4), 1)
    assert t.order == [1, 0, 2, 3]
    assert t.parent[3] == 2 and t.level[3] == 2
    assert t.depth == 2
    with pytest.raises(StructureError):
        bfs_tree(disjoint_union(path(2), path(2)), 0)


def test_outerplanarity():
    assert is_maximal_outerplanar(fan_triangulation(6))
    assert is_outerplanar(cycle(7))
    assert not is_outerplanar(complete(4))
    assert not is_maximal_outerplanar(cycle(5))


def test_graph6_matches_networkx_on_petersen():
    g = petersen()
    expected = nx.to_graph6_bytes(to_networkx(g), header=False).decode().strip()
    assert emit_graph6(g) == expected
    assert parse_graph6(expected).adj == g.adj
    assert graph_id(g) == expected


def test_graph6_errors():
    with pytest.raises(GraphParseError):
        parse_graph6("A")
    with pytest.raises(GraphParseError) as info:
        parse_graph6("B w")
    assert info.value.offset == 2
    with pytest.raises(GraphSizeError):
        emit_graph6(Graph.empty(63))


def test_edge_list_errors_carry_position():
    with pytest.raises(GraphParseError) as info:
        parse_edge_list("3\n0 5\n")
    assert info.value.line == 2
    with pytest.raises(GraphParseError):
        parse_edge_list("# nothing\n")
    with pytest.raises(GraphParseError):
        parse_edge_list("2\n0 x\n")


def test_read_graph_by_suffix(tmp_path):
    el = tmp_path / "c5.el"
    el.write_text(emit_edge_list(cycle(5)))
    g6 = tmp_path / "c5.g6"
    g6.write_text(emit_graph6(cycle(5)) + "\n")
    assert read_graph(el).adj == read_graph(g6).adj == cycle(5).adj


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=9))
def test_text_formats_round_trip(g):
    assert parse_edge_list(emit_edge_list(g)).adj == g.adj
    assert parse_graph6(emit_graph6(g)).adj == g.adj
    assert from_networkx(to_networkx(g)).adj == g.adj


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=8))
def test_queries_agree_with_networkx(g):
    h = to_networkx(g)
    if g.n:
        assert is_connected(g) == nx.is_connected(h)
        assert len(component_bits(g)) == nx.number_connected_components(h)
    assert is_bipartite(g) == nx.is_bipartite(h)
    assert nx.is_isomorphic(to_networkx(complement(complement(g))), h)
    assert sum(len(list(iter_bits(nv))) for nv in g.adj) == 2 * h.number_of_edges()

from fractions import Fraction

import networkx as nx
import pytest
from hypothesis import given, settings
from networkx.algorithms import isomorphism

from src.isolation.errors import ParameterError
from src.isolation.families import complete, cycle, path, petersen, star
from src.isolation.graph_core import Graph, VertexSet, emit_edge_list, full_mask, induced_subgraph, to_networkx
from src.isolation.patterns import (
    ISOLATION,
    Certificate,
    CliqueFamily,
    CyclesFamily,
    ExplicitFamily,
    StarFamily,
    TreesFamily,
    check_certificate,
    claw_center,
    contains_subgraph,
    family_min_order,
    family_quotient,
    find_clique,
    find_violation,
    is_claw_free,
    is_f_free,
    parse_family,
)

from .strategies import graph_and_set, graphs

FAMILIES = [StarFamily(k=0), StarFamily(k=1), CliqueFamily(k=3), CyclesFamily(), TreesFamily(k=3)]


def _region(g: Graph, vertices=None) -> VertexSet:
    return VertexSet.full(g.n) if vertices is None else g.vertex_set(vertices)


def test_star_family_bounds_remainder_degree():
    p4 = path(4)
    assert is_f_free(p4, p4.vertex_set([0, 1]), ISOLATION) is False
    assert is_f_free(p4, p4.vertex_set([0, 2]), ISOLATION)
    assert is_f_free(p4, _region(p4), StarFamily(k=1)) is False
    assert is_f_free(cycle(6), _region(cycle(6)), StarFamily(k=2))


def test_clique_cycle_and_tree_families():
    assert not is_f_free(complete(4), _region(complete(4)), CliqueFamily(k=4))
    assert is_f_free(cycle(5), _region(cycle(5)), CliqueFamily(k=3))
    assert not is_f_free(cycle(5), _region(cycle(5)), CyclesFamily())
    assert is_f_free(path(7), _region(path(7)), CyclesFamily())
    assert is_f_free(path(5), path(5).vertex_set([0, 1, 3, 4]), TreesFamily(k=3))
    assert not is_f_free(path(5), path(5).vertex_set([0, 1, 2]), TreesFamily(k=3))


def test_find_violation_returns_an_occurrence():
    c5 = cycle(5)
    found = find_violation(c5, _region(c5), CyclesFamily())
    assert found is not None and found.sorted() == [0, 1, 2, 3, 4]
    star_hit = find_violation(petersen(), _region(petersen()), StarFamily(k=1))
    assert star_hit is not None and len(star_hit) == 3
    assert find_violation(path(3), path(3).vertex_set([0, 2]), ISOLATION) is None
    tree_hit = find_violation(path(6), _region(path(6)), TreesFamily(k=4))
    assert tree_hit is not None and len(tree_hit) == 4


def test_find_clique_and_claws():
    assert find_clique(petersen(), full_mask(10), 3) is None
    assert find_clique(complete(5), full_mask(5), 4) == 0b1111
    assert claw_center(star(3)) == 0
    assert not is_claw_free(petersen())
    assert is_claw_free(cycle(7))


def test_explicit_family_drops_members_containing_others():
    fam = ExplicitFamily(patterns=(complete(3), path(3)))
    assert len(fam.patterns) == 1 and fam.patterns[0].edge_count() == 2
    assert not fam.degenerate
    assert ExplicitFamily(patterns=(Graph.empty(1),)).degenerate


def test_parse_family_forms(tmp_path):
    assert parse_family("star:2") == StarFamily(k=2)
    assert parse_family("clique:3") == CliqueFamily(k=3)
    assert parse_family("cycles") == CyclesFamily()
    assert parse_family("trees:4") == TreesFamily(k=4)
    p = tmp_path / "p3.el"
    p.write_text(emit_edge_list(path(3)))
    fam = parse_family(f"file:{p}")
    assert isinstance(fam, ExplicitFamily) and fam.patterns[0].n == 3
    for bad in ["star:-1", "trees:1", "cycle", "star:x", "file:", "wheel:3"]:
        with pytest.raises(ParameterError):
            parse_family(bad)


def test_family_constants():
    assert family_min_order(StarFamily(k=2)) == 4
    assert family_min_order(CyclesFamily()) == 3
    assert family_quotient(ISOLATION) == Fraction(1, 2)
    assert family_quotient(StarFamily(k=1)) == Fraction(1, 3)
    assert family_quotient(TreesFamily(k=5)) == Fraction(2, 5)
    assert family_quotient(ExplicitFamily(patterns=(path(4),))) == Fraction(1, 2)


def test_check_certificate_respects_bound_and_width():
    c5 = cycle(5)
    cert = Certificate(vertices=c5.vertex_set([0, 2]), producer="manual", promised_bound=Fraction(2))
    assert check_certificate(c5, cert)
    tight = cert.model_copy(update={"promised_bound": Fraction(3, 2)})
    assert not check_certificate(c5, tight)
    assert not check_certificate(cycle(6), cert)
    bad = Certificate(vertices=c5.vertex_set([0]), producer="manual")
    assert not check_certificate(c5, bad)


@settings(max_examples=80, deadline=None)
@given(graphs(max_n=7), graphs(min_n=1, max_n=4))
def test_subgraph_matcher_agrees_with_networkx(host, pattern):
    expected = isomorphism.GraphMatcher(to_networkx(host), to_networkx(pattern)).subgraph_is_monomorphic()
    assert contains_subgraph(host, full_mask(host.n), pattern) == expected


@settings(max_examples=80, deadline=None)
@given(graph_and_set(max_n=7))
def test_builtin_families_agree_with_explicit_definitions(data):
    g, s = data
    h, _ = induced_subgraph(g, s.bits)
    nh = to_networkx(h)
    degrees = [d for _, d in nh.degree()]
    assert is_f_free(g, s, StarFamily(k=0)) == (max(degrees, default=0) == 0)
    assert is_f_free(g, s, StarFamily(k=1)) == (max(degrees, default=0) <= 1)
    if h.n:
        assert is_f_free(g, s, CyclesFamily()) == nx.is_forest(nh)
    sizes = [len(c) for c in nx.connected_components(nh)]
    assert is_f_free(g, s, TreesFamily(k=3)) == (max(sizes, default=0) < 3)
    has_triangle = any(v for v in nx.triangles(nh).values())
    assert is_f_free(g, s, CliqueFamily(k=3)) == (not has_triangle)


@settings(max_examples=60, deadline=None)
@given(graph_and_set(max_n=7))
def test_violation_found_exactly_when_not_free(data):
    g, s = data
    for family in FAMILIES:
        found = find_violation(g, s, family)
        assert (found is None) == is_f_free(g, s, family)
        if found is not None:
            assert found.bits & ~s.bits == 0

import logging
from fractions import Fraction

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from src.isolation.bounds import grid_bounds
from src.isolation.constructive import (
    bipartite_sampling_probability,
    certify,
    double_dominating,
    equal_degree_tree_isolating,
    greedy_pattern_removal,
    greedy_star_removal,
    grid_isolating,
    is_isolating,
    isolating_components,
    isolating_third,
    isolating_with_seed_set,
    max_degree_half,
    one_isolation_via_partition,
    printed_set,
    product_isolating,
    randomized_bipartite_isolating,
    randomized_isolating,
    sampling_probability,
    tree_k_isolating,
)
from src.isolation.errors import ConstructionError, PreconditionError, StructureError
from src.isolation.families import (
    complete,
    cycle,
    equal_degree_caterpillar,
    grid,
    path,
    petersen,
    star,
)
from src.isolation.graph_core import Graph, bipartite_double, cartesian_product, disjoint_union
from src.isolation.patterns import ISOLATION, StarFamily, check_certificate
from src.isolation.solvers import exact_isolation

from .strategies import connected_graphs, graphs, trees


def test_certify_rejects_bad_sets():
    c5 = cycle(5)
    with pytest.raises(ConstructionError):
        certify(c5, 0b1, "manual", None)
    with pytest.raises(ConstructionError):
        certify(c5, 0b111, "manual", Fraction(2))
    cert = certify(c5, 0b101, "manual", Fraction(2))
    assert cert.size == 2 and cert.producer == "manual"
    over = certify(c5, 0b111, "manual", Fraction(2), enforce_bound=False)
    assert over.size == 3 and not check_certificate(c5, over)


@settings(max_examples=60, deadline=None)
@given(connected_graphs(min_n=3, max_n=10))
def test_third_on_connected_graphs(g):
    assume(not (g.n == 5 and g.edge_count() == 5 and g.is_regular()))
    cert = isolating_third(g)
    assert cert.size <= g.n // 3
    assert check_certificate(g, cert)


def test_third_rejects_c5_small_and_disconnected():
    with pytest.raises(PreconditionError):
        isolating_third(cycle(5))
    with pytest.raises(PreconditionError):
        isolating_third(path(2))
    with pytest.raises(PreconditionError):
        isolating_third(disjoint_union(path(3), path(3)))


def test_third_on_named_graphs():
    assert isolating_third(petersen()).size == 3
    assert isolating_third(cycle(6)).size <= 2
    assert isolating_third(star(5)).size == 1


def test_third_path_patch_on_a_tiny_rest(caplog):
    caplog.set_level(logging.DEBUG, logger="src.isolation.constructive.third")
    cert = isolating_third(path(5))
    assert cert.vertices.bits == 1 << 2
    assert "path/small-rest" in caplog.text


def test_third_adjacent_grandchildren_patch_on_a_tiny_rest(caplog):
    caplog.set_level(logging.DEBUG, logger="src.isolation.constructive.third")
    # the 5-cycle 0-1-3-4-2 plus the chord 1-2
    g = Graph.from_edges(5, [(0, 1), (1, 3), (3, 4), (2, 4), (0, 2), (1, 2)])
    cert = isolating_third(g)
    assert cert.vertices.bits == 1 << 1
    assert "adjacent-grandchildren/small-rest" in caplog.text


def test_components_with_a_c5():
    g = disjoint_union(cycle(5), path(3))
    cert = isolating_components(g)
    assert cert.promised_bound == Fraction(16, 5)
    assert cert.size == 3
    with pytest.raises(PreconditionError):
        isolating_components(disjoint_union(cycle(5), path(2)))


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=9), st.integers(min_value=0, max_value=2))
def test_greedy_star_removal_bound(g, k):
    cert = greedy_star_removal(g, k)
    assert cert.size <= g.n // (k + 2)
    assert cert.family == StarFamily(k=k)


def test_greedy_pattern_removal():
    g = disjoint_union(path(3), path(3), complete(2))
    cert = greedy_pattern_removal(g, path(3), path(3).vertex_set([1]))
    assert cert.size == 2 and cert.promised_bound == Fraction(2)
    with pytest.raises(PreconditionError):
        greedy_pattern_removal(g, path(3), path(3).vertex_set([0]))


def test_sampling_probabilities():
    assert sampling_probability(1) == pytest.approx(0.34657359)
    assert bipartite_sampling_probability(1) == 0.5
    assert bipartite_sampling_probability(2) == pytest.approx(0.5)
    assert bipartite_sampling_probability(3) == pytest.approx(1 - 3**-0.5)


@settings(max_examples=40, deadline=None)
@given(connected_graphs(min_n=2, max_n=12), st.integers(min_value=0, max_value=2**32))
def test_randomized_is_valid_and_reproducible(g, seed):
    first = randomized_isolating(g, seed)
    again = randomized_isolating(g, seed)
    assert first.vertices == again.vertices
    assert check_certificate(g, first)
    assert first.note == f"seed={seed}"


def test_randomized_preconditions():
    with pytest.raises(PreconditionError):
        randomized_isolating(disjoint_union(path(2), Graph.empty(1)), 1)
    with pytest.raises(StructureError):
        randomized_bipartite_isolating(cycle(5), 1)
    cert = randomized_bipartite_isolating(cycle(8), 7)
    assert check_certificate(cycle(8), cert)
    assert cert.vertices == randomized_bipartite_isolating(cycle(8), 7).vertices


@settings(max_examples=60, deadline=None)
@given(trees(min_n=1, max_n=20), st.integers(min_value=0, max_value=3))
def test_tree_peeling_bound(t, k):
    assume(not (t.n == k + 2 and t.max_degree() == k + 1))
    cert = tree_k_isolating(t, k)
    assert cert.size <= t.n // (k + 3)
    assert check_certificate(t, cert)


def test_tree_peeling_rejects_the_star():
    with pytest.raises(PreconditionError):
        tree_k_isolating(star(2), 1)
    with pytest.raises(PreconditionError):
        tree_k_isolating(cycle(4), 0)


def test_equal_degree_caterpillar():
    cat = equal_degree_caterpillar(4, 4)
    assert cat.n == 14
    cert = equal_degree_tree_isolating(cat, 0, 4)
    assert cert.size == 2 and cert.promised_bound == 2
    assert exact_isolation(cat, ISOLATION)[0] == 2
    with pytest.raises(PreconditionError):
        equal_degree_tree_isolating(cat, 2, 4)
    with pytest.raises(PreconditionError):
        equal_degree_tree_isolating(path(6), 0, 4)


def test_seed_set_modes_on_c6():
    c6 = cycle(6)
    seed = c6.vertex_set([0])
    half = isolating_with_seed_set(c6, seed, "half")
    assert half.promised_bound == Fraction(5, 2) and half.size == 2
    third = isolating_with_seed_set(c6, seed, "third")
    assert third.promised_bound == 2 and third.size == 2
    with pytest.raises(PreconditionError):
        isolating_with_seed_set(c6, seed, "two_fifths")
    with pytest.raises(PreconditionError):
        isolating_with_seed_set(c6, cycle(5).vertex_set([0]), "half")


def test_seed_set_two_fifths_with_c5_rest():
    # N[5] is the K_2, so the rest is the whole C_5
    g = disjoint_union(cycle(5), complete(2))
    cert = isolating_with_seed_set(g, g.vertex_set([5]), "two_fifths")
    assert cert.size == 3
    assert cert.promised_bound == Fraction(2 * 7 - 2 + 3, 5)


@settings(max_examples=60, deadline=None)
@given(graphs(min_n=1, max_n=10))
def test_max_degree_half(g):
    cert = max_degree_half(g)
    assert 2 * cert.size <= g.n - g.max_degree() + 1


@settings(max_examples=60, deadline=None)
@given(graphs(min_n=2, max_n=10))
def test_one_isolation_via_partition(g):
    assume(g.max_degree() >= 1)
    cert = one_isolation_via_partition(g)
    assert 3 * cert.size <= g.n - g.max_degree() + 2
    assert cert.family == StarFamily(k=1)


def test_product_and_double():
    cert = product_isolating(cycle(4), 2, ISOLATION)
    assert cert.size == 3 and cert.vertices.n == 8
    assert check_certificate(cartesian_product(cycle(4), complete(2)), cert)
    double = double_dominating(cycle(5))
    assert double.size == 4
    assert check_certificate(bipartite_double(cycle(5)), double)
    with pytest.raises(PreconditionError):
        product_isolating(cycle(4), 0, ISOLATION)


@pytest.mark.parametrize("kind", ["torus", "cylinder", "grid"])
@pytest.mark.parametrize("s,t", [(3, 3), (4, 4), (4, 5)])
def test_grid_sets_within_upper_bound(kind, s, t):
    cert = grid_isolating(kind, s, t)
    assert cert.size <= grid_bounds(kind, s, t)[1]
    assert check_certificate(grid(kind, s, t), cert)
    assert cert.note.split(",")[0] in ("printed", "printed-improved", "printed-invalid")
    assert "exceeds-bound" not in cert.note


@pytest.mark.parametrize("s,t", [(4, 4), (8, 8), (4, 8), (8, 12)])
def test_printed_torus_set_on_sharp_residues(s, t):
    assert printed_set("torus", s, t).bit_count() == s * t // 8
    cert = grid_isolating("torus", s, t)
    assert cert.size == s * t // 8
    assert cert.note == "printed"


def test_grid_needs_three_rows():
    with pytest.raises(PreconditionError):
        grid_isolating("torus", 2, 4)


def test_valid_printed_grid_set_is_pruned():
    g = grid("grid", 3, 3)
    assert printed_set("grid", 3, 3).bit_count() == 3
    assert is_isolating(g, printed_set("grid", 3, 3))
    cert = grid_isolating("grid", 3, 3)
    assert cert.vertices.bits == 1 << 4
    assert cert.note == "printed-improved"


def test_invalid_printed_torus_set_is_repaired():
    g = grid("torus", 5, 5)
    assert not is_isolating(g, printed_set("torus", 5, 5))
    cert = grid_isolating("torus", 5, 5)
    assert check_certificate(g, cert)
    assert cert.note.startswith("printed-invalid")


def test_grid_above_its_bound_is_returned_and_flagged():
    g = grid("grid", 6, 10)
    assert printed_set("grid", 6, 10).bit_count() == 14
    cert = grid_isolating("grid", 6, 10)
    assert cert.promised_bound == Fraction(77, 8)
    assert cert.size == 10
    assert cert.note.endswith(",exceeds-bound")
    assert is_isolating(g, cert.vertices.bits)
    assert not check_certificate(g, cert)

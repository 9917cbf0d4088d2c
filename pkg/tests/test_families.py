import pytest

from src.isolation.errors import ParameterError
from src.isolation.families import (
    FAMILIES,
    STANDARD_KINDS,
    compose_general,
    corona_k2,
    cycle,
    generate,
    grid,
    hypercube,
    lb_equality_bipartite,
    outerplanar_sharp,
    parse_params,
    path,
    path_of_stars,
    random_polygon_triangulation,
    random_regular,
    random_tree,
    standard,
    star_lower_sharp,
    subdivided_star,
)
from src.isolation.graph_core import is_bipartite, is_connected, is_maximal_outerplanar, is_tree
from src.isolation.patterns import ISOLATION, StarFamily
from src.isolation.solvers import exact_isolation


def iota(g, k=0):
    return exact_isolation(g, StarFamily(k=k))[0]


def test_parse_params():
    assert parse_params(["n=5", "kind=torus", "x=-1"]) == {"n": 5, "kind": "torus", "x": -1}
    for bad in ["n", "=3"]:
        with pytest.raises(ParameterError):
            parse_params([bad])


def test_generate_checks_names_params_and_inputs():
    assert generate("path", {"n": 4}).edge_count() == 3
    with pytest.raises(ParameterError):
        generate("wheel", {"n": 4})
    with pytest.raises(ParameterError):
        generate("path", {})
    with pytest.raises(ParameterError):
        generate("path", {"n": 4, "m": 1})
    with pytest.raises(ParameterError):
        generate("corona", {"mode": "one_edge"})
    with pytest.raises(ParameterError):
        generate("cycle", {"n": 2})


def test_standard_kinds_only():
    assert set(STANDARD_KINDS) <= set(FAMILIES)
    assert standard("petersen", {}).n == 10
    with pytest.raises(ParameterError):
        standard("fan", {"n": 5})


def test_hypercube_and_grids():
    q3 = hypercube(3)
    assert q3.n == 8 and q3.is_regular() and q3.max_degree() == 3
    assert grid("torus", 4, 4).edge_count() == 32
    assert grid("cylinder", 3, 4).edge_count() == 20
    assert grid("grid", 3, 4).edge_count() == 17
    with pytest.raises(ParameterError):
        grid("sphere", 3, 3)  # type: ignore[arg-type]


@pytest.mark.parametrize("seed", [0, 1, 99])
def test_seeded_generators_are_reproducible(seed):
    t = random_tree(15, seed)
    assert is_tree(t) and t.adj == random_tree(15, seed).adj
    r = random_regular(10, 3, seed)
    assert r.is_regular() and r.max_degree() == 3
    assert r.adj == random_regular(10, 3, seed).adj
    p = random_polygon_triangulation(9, seed)
    assert is_maximal_outerplanar(p) and p.adj == random_polygon_triangulation(9, seed).adj


def test_impossible_regular_graph():
    with pytest.raises(ParameterError):
        random_regular(5, 3, 0)


def test_corona_has_iota_a_third():
    g = corona_k2(path(4), "one_edge")
    assert g.n == 12 and iota(g) == 4
    tri = corona_k2(path(4), "two_edges")
    assert tri.edge_count() == 3 + 12
    with pytest.raises(ParameterError):
        corona_k2(path(4), "three_edges")  # type: ignore[arg-type]


def test_f_rst_and_copies():
    g = generate("f_rst", {"r": 1, "s": 1, "t": 1})
    assert g.n == 12 and iota(g) == 4
    assert generate("copies", {"c": 3}, [cycle(5)]).n == 15


def test_kr_minus_cr_is_regular():
    g = generate("kr_minus_cr", {"r": 7})
    assert g.is_regular() and g.max_degree() == 4
    assert iota(g) == 2


def test_compose_general():
    g = compose_general(path(3), 0, path(2), "delta1")
    assert g.n == 8 and g.edge_count() == 7 and is_connected(g)
    with pytest.raises(ParameterError):
        compose_general(cycle(3), 0, path(2), "delta1")
    with pytest.raises(ParameterError):
        compose_general(path(3), 5, path(2), "delta1")


def test_path_of_stars_is_sharp_for_trees():
    g = path_of_stars(3, 1)
    assert g.n == 12 and is_tree(g)
    assert iota(g, 1) == 3


def test_caterpillar_layout():
    g = generate("caterpillar", {"t": 4, "r": 4})
    assert g.n == 2 * 2 * 3 + 2 and is_tree(g)
    assert {g.degree(v) for v in range(g.n) if g.degree(v) > 1} == {4}


def test_outerplanar_sharp():
    g = outerplanar_sharp(2)
    assert g.n == 8 and is_maximal_outerplanar(g)
    assert iota(g) == 2
    with pytest.raises(ParameterError):
        outerplanar_sharp(2, cycle(4))


def test_lower_bound_equality_family():
    g = lb_equality_bipartite(2, 3)
    assert g.n == 12 and is_bipartite(g) and g.is_regular() and g.max_degree() == 3
    assert exact_isolation(g, ISOLATION)[0] == 2


def test_hub_and_subdivided_star():
    hub = star_lower_sharp(3, 1)
    assert hub.n == 7 and hub.degree(0) == 3
    s = subdivided_star(1, 1)
    assert s.n == 6 and s.max_degree() == 3
    assert iota(s) == 2


def test_nordhaus_gaddum_families():
    g0 = generate("ng_delta0", {"n": 6})
    assert g0.n == 6 and g0.edge_count() == 2 and g0.min_degree() == 0
    g1 = generate("ng_delta1", {"n": 5})
    assert g1.n == 5 and g1.edge_count() == 3 and g1.min_degree() == 1


def test_line_graph_entry():
    assert generate("line", {}, [path(4)]).edge_count() == 2

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.isolation.errors import GraphSizeError, ParameterError
from src.isolation.families import complete, cycle, path
from src.isolation.graph_core import Graph
from src.isolation.verify import (
    CHECKS,
    SWEEP_CHECKS,
    CheckTally,
    GraphFacts,
    canonical_mask,
    canonical_masks,
    enumerate_graphs,
    graph_from_mask,
    make_chunks,
    mask_of,
    open_problem_probe,
    resolve_checks,
    run_chunk,
    sample_verify,
    sweep_theorems,
)
from src.isolation.verify.checks import min_degree_ratio, run_check
from src.isolation.verify.models import TSV_HEADER

from .strategies import graphs

UNLABELLED = [1, 1, 2, 4, 11, 34, 156]


@pytest.mark.parametrize("n,count", enumerate(UNLABELLED))
def test_isomorphism_class_counts(n, count):
    assert len(canonical_masks(n)) == count


def test_labelled_and_connected_counts():
    assert sum(1 for _ in enumerate_graphs(3)) == 8
    assert sum(1 for _ in enumerate_graphs(4, connected_only=True, dedup=True)) == 6
    assert sum(1 for _ in enumerate_graphs(5, connected_only=True, dedup=True)) == 21
    assert [g.n for g in enumerate_graphs(0)] == [0]


def test_enumeration_limits():
    with pytest.raises(GraphSizeError):
        list(enumerate_graphs(8))
    with pytest.raises(ParameterError):
        list(enumerate_graphs(-1))


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=6), st.randoms(use_true_random=False))
def test_canonical_mask_ignores_labels(g, rnd):
    order = list(range(g.n))
    rnd.shuffle(order)
    relabelled = Graph.from_edges(g.n, ((order[u], order[v]) for u, v in g.edges()))
    assert canonical_mask(relabelled) == canonical_mask(g)
    assert graph_from_mask(g.n, mask_of(g)).adj == g.adj


def test_chunks_partition_the_masks():
    chunks = make_chunks(4, ("la-dom-sum-i",), chunk_bits=2)
    assert [c.index for c in chunks] == [0, 1, 2, 3]
    tested = [run_chunk(chunk).tallies["la-dom-sum-i"].graphs_tested for chunk in chunks]
    assert tested == [16, 16, 16, 16]
    assert len(make_chunks(2, ("la-dom-sum-i",), chunk_bits=4)) == 2


def test_resolve_checks():
    assert resolve_checks(None) == SWEEP_CHECKS
    assert resolve_checks(["all"]) == SWEEP_CHECKS
    assert resolve_checks(["tree-k0"]) == ("tree-k0",)
    with pytest.raises(ParameterError):
        resolve_checks(["no-such-check"])


def test_small_sweep_has_no_violations():
    result = sweep_theorems(4)
    assert result.violation_count == 0
    assert result.violations == []
    assert set(result.checks) == set(SWEEP_CHECKS)
    assert result.checks["la-dom-sum-i"].graphs_tested == 1 + 2 + 8 + 64
    assert result.n_max == 4 and result.source == "exhaustive"


def test_sweep_counts_follow_the_filters():
    one = ["la-dom-sum-i"]
    assert sweep_theorems(3, one, dedup=True).checks["la-dom-sum-i"].graphs_tested == 1 + 2 + 4
    assert sweep_theorems(3, one, dedup=True, connected_only=True).checks["la-dom-sum-i"].graphs_tested == 1 + 1 + 2
    assert sweep_theorems(3, ["thm-n3"]).checks["thm-n3"].graphs_tested == 4


def test_sweep_records_equality_graphs():
    result = sweep_theorems(4, ["ng-delta0"], dedup=True)
    tally = result.checks["ng-delta0"]
    assert tally.violations == 0 and tally.equality_count > 0
    assert tally.example_g6 is not None
    assert result.tightness["ng-delta0"] == tally.equality_count


def test_sweep_is_independent_of_workers_and_chunking():
    names = ["la-dom-sum-i", "sandwich-k0", "ng-delta1"]
    serial = sweep_theorems(4, names, chunk_bits=0)
    parallel = sweep_theorems(4, names, jobs=2, chunk_bits=3)
    assert serial.to_tsv() == parallel.to_tsv()
    assert serial.tightness == parallel.tightness


def test_sweep_parameter_errors():
    with pytest.raises(ParameterError):
        sweep_theorems(0)
    with pytest.raises(GraphSizeError):
        sweep_theorems(8)
    with pytest.raises(ParameterError):
        sweep_theorems(3, jobs=0)


def test_tsv_layout():
    text = sweep_theorems(2, ["la-dom-sum-i", "tree-k0"]).to_tsv()
    assert text.splitlines() == [TSV_HEADER, "la-dom-sum-i\t3\t0\t1\tA_", "tree-k0\t1\t0\t1\t@"]
    assert text.endswith("\n")


def test_tally_merge_keeps_first_violation_example():
    a = CheckTally(graphs_tested=2, equality_count=1, example_g6="A_")
    b = CheckTally(graphs_tested=3, violations=1, example_g6="B?")
    merged = a.merge(b)
    assert merged.graphs_tested == 5 and merged.violations == 1
    assert merged.example_g6 == "B?"
    assert b.merge(a).example_g6 == "B?"
    assert a.merge(CheckTally(equality_count=1, example_g6="C~")).example_g6 == "A_"


def test_checks_skip_outside_their_hypotheses():
    assert run_check(CHECKS["thm-n3"], GraphFacts(cycle(5))) is None
    assert run_check(CHECKS["la-dom-sum-ii"], GraphFacts(path(6))) is None
    assert run_check(CHECKS["tree-k0"], GraphFacts(cycle(4))) is None
    outcome = run_check(CHECKS["thm-n3"], GraphFacts(cycle(6)))
    assert outcome is not None and outcome.holds and outcome.tight


def test_sandwich_lists_tight_bounds():
    outcome = run_check(CHECKS["sandwich-k0"], GraphFacts(cycle(5)))
    assert outcome is not None and outcome.holds
    assert {"U3", "U4", "U8"} <= set(outcome.tight_entries)


@pytest.mark.parametrize(
    "family,trials,max_n",
    [("trees", 25, 20), ("polygons", 10, 10), ("grids", 4, 4), ("line", 8, 5), ("random", 15, 7)],
)
def test_samplers_find_no_violations(family, trials, max_n):
    result = sample_verify(family, trials, seed=11, max_n=max_n)
    assert result.violation_count == 0, result.violations
    assert result.source == family
    again = sample_verify(family, trials, seed=11, max_n=max_n)
    assert again.to_tsv() == result.to_tsv()


def test_sampler_errors():
    with pytest.raises(ParameterError):
        sample_verify("nope", 1, seed=0)
    with pytest.raises(ParameterError):
        sample_verify("trees", -1, seed=0)
    with pytest.raises(ParameterError):
        sample_verify("grids", 1, seed=0, max_n=2)


def test_probe_at_minimum_degree_three():
    table = open_problem_probe(3, 5)
    rows = {r.label: r for r in table.rows}
    assert rows["n=4"].graphs == 1 and rows["n=4"].max_ratio == Fraction(1, 4)
    assert rows["n=5"].graphs == 2 and rows["n=5"].max_ratio == Fraction(1, 5)
    assert rows["K_3,3"].max_ratio == Fraction(1, 6)
    assert rows["Q_3"].max_ratio == Fraction(1, 4)
    assert rows["petersen"].max_ratio == Fraction(3, 10)
    lines = table.to_tsv().splitlines()
    assert lines[0] == "label\tn\tgraphs\tmax_ratio\texample_g6"
    assert lines[1].startswith("n=4\t4\t1\t1/4\t")


def test_probe_at_minimum_degree_four():
    table = open_problem_probe(4, 4)
    assert [r.label for r in table.rows] == ["K_5", "K_4,4", "K_7-C_7"]
    assert table.rows[-1].max_ratio == Fraction(2, 7)


def test_probe_errors():
    with pytest.raises(ParameterError):
        open_problem_probe(5, 6)
    with pytest.raises(GraphSizeError):
        open_problem_probe(3, 8)


def test_unlabelled_masks_are_sorted_and_distinct():
    for n in range(6):
        masks = canonical_masks(n)
        assert list(masks) == sorted(set(masks))


def test_third_construction_on_every_connected_graph_to_five():
    result = sweep_theorems(5, ["thm-n3-constructive"], connected_only=True)
    tally = result.checks["thm-n3-constructive"]
    assert tally.violations == 0, result.violations
    assert tally.graphs_tested == 4 + 38 + (728 - 12)


def _circulant_one_two(n: int) -> Graph:
    return Graph.from_edges(n, ((i, (i + d) % n) for i in range(n) for d in (1, 2)))


def test_nordhaus_gaddum_ratio_checks():
    four_regular = GraphFacts(_circulant_one_two(8))
    assert four_regular.ng_sum == 4
    for name in ("ng-ratio", "ng-log"):
        outcome = run_check(CHECKS[name], four_regular)
        assert outcome is not None and outcome.holds and not outcome.tight
    # below the order threshold for its minimum degree
    assert run_check(CHECKS["ng-ratio"], GraphFacts(complete(5))) is None
    assert run_check(CHECKS["ng-log"], GraphFacts(complete(5))) is None
    assert run_check(CHECKS["ng-ratio"], GraphFacts(path(4))) is None
    low = run_check(CHECKS["ng-log"], GraphFacts(path(4)))
    assert low is not None and low.holds
    assert min_degree_ratio(2) == Fraction(2, 5) and min_degree_ratio(3) == Fraction(1, 3)

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.isolation.bounds import (
    BoundEntry,
    bound_report,
    family_bound,
    format_value,
    grid_bounds,
    regular_gap_note,
    render_rows,
)
from src.isolation.errors import PreconditionError
from src.isolation.families import cycle, equal_degree_caterpillar, path, petersen
from src.isolation.patterns import ISOLATION, StarFamily
from src.isolation.solvers import exact_isolation

from .strategies import graphs


def test_c5_report():
    report = bound_report(cycle(5))
    assert report.graph_id == "Dhc"
    assert report.entry("U1").value == Fraction(5, 2)
    assert not report.entry("U2").applicable
    assert report.entry("U3").value == 2
    assert report.entry("U4").value == 2
    assert not report.entry("U5").applicable
    assert report.entry("U8").value == 2
    assert report.entry("L3").value == Fraction(5, 4)
    assert report.entry("L4").value == Fraction(7, 6)
    assert report.entry("L5").value == Fraction(5, 4)
    assert report.violations(2) == []
    assert [e.name for e in report.violations(1)] == ["L3", "L4", "L5"]


def test_k1_report_switches_entries():
    report = bound_report(cycle(6), k=1)
    assert report.entry("U1").value == 2
    assert not report.entry("U2").applicable
    assert report.entry("U6").value == Fraction(6 - 2 + 2, 3)
    assert not report.entry("L3").applicable


def test_petersen_meets_the_third():
    report = bound_report(petersen())
    assert report.entry("U2").value == 3
    assert report.entry("U2").is_tight(3)


def test_tree_entries():
    report = bound_report(path(7))
    assert report.entry("U14").value == Fraction(7, 3)
    assert not report.entry("U15").applicable
    cat = bound_report(equal_degree_caterpillar(4, 4))
    assert cat.entry("U15").value == 2


def test_seed_set_entries():
    c6 = cycle(6)
    report = bound_report(c6, seed_set=c6.vertex_set([0]))
    assert report.entry("U11a").value == Fraction(5, 2)
    assert not report.entry("U11b").applicable
    assert report.entry("U11c").value == 2
    assert not bound_report(c6).entry("U11a").applicable


def test_exact_aux_entries():
    plain = bound_report(cycle(5))
    assert not plain.entry("L1").applicable
    report = bound_report(cycle(5), with_exact_aux=True)
    assert report.entry("L1").value == 1
    assert report.entry("L2").value == Fraction(4, 3)
    assert report.entry("U17").target == "iota(B(G))" and report.entry("U17").value == 4
    assert report.entry("U12").target == "iota_k(G x K_2)"
    assert all(e.target == "iota_k" for e in report.applicable())


def test_negative_k_is_rejected():
    with pytest.raises(PreconditionError):
        bound_report(cycle(5), k=-1)


def test_float_entries_use_slack():
    e = BoundEntry(name="U9", side="upper", value=2.0 - 1e-12, applicable=True)
    assert e.holds_for(2) and e.is_tight(2)
    assert not BoundEntry(name="L3", side="lower", value=Fraction(5, 2), applicable=True).holds_for(2)
    assert BoundEntry(name="U2", side="upper", applicable=False).holds_for(100)


def test_rendering():
    rows = render_rows(bound_report(cycle(5)))
    assert rows[0] == "name\tside\tvalue\tapplicable\treason"
    assert rows[1] == "U1\tupper\t5/2\ttrue\tn/(k+2)"
    assert format_value(None) == "-"
    assert format_value(0.5) == "0.500000000"


def test_family_bound_and_regular_gap():
    entry = family_bound(cycle(5), ISOLATION)
    assert entry.name == "U16" and entry.value == Fraction(5, 2)
    assert entry.target == "iota(star:0)"
    assert regular_gap_note(cycle(5)) == (Fraction(2, 5), Fraction(2, 5))
    with pytest.raises(PreconditionError):
        regular_gap_note(path(3))


def test_grid_bounds():
    assert grid_bounds("torus", 4, 4) == (Fraction(2), Fraction(2) + Fraction(33, 8))
    assert grid_bounds("grid", 3, 3) == (Fraction(3, 4), Fraction(2))
    with pytest.raises(PreconditionError):
        grid_bounds("sphere", 3, 3)


@settings(max_examples=40, deadline=None)
@given(graphs(max_n=6), st.integers(min_value=0, max_value=1))
def test_no_applicable_bound_is_violated(g, k):
    exact = exact_isolation(g, StarFamily(k=k))[0]
    report = bound_report(g, k, with_exact_aux=k == 0)
    assert report.violations(exact) == []

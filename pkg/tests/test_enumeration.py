import pytest

from bruteforce import naive_is_isomorphic
from convexgeom.canon import canonical_form
from convexgeom.enumeration import (
    CONNECTED_COUNTS,
    ENUMERATION_LIMIT,
    connected_graphs,
    connected_graphs_upto,
)
from convexgeom.errors import CapacityError
from convexgeom.graphs import is_connected
from convexgeom.patterns import complete_graph, cycle_graph, path_graph
from test_graphs import labeled_graphs


def test_counts_match_known_sequence():
    for n in range(1, 8):
        assert len(connected_graphs(n)) == CONNECTED_COUNTS[n]


def test_count_n8():
    assert len(connected_graphs(8)) == CONNECTED_COUNTS[8]


def test_members_are_connected_and_distinct():
    for n in range(1, 7):
        graphs = connected_graphs(n)
        forms = {canonical_form(g) for g in graphs}
        assert len(forms) == len(graphs)
        for g in graphs:
            assert g.n == n and is_connected(g)
        # deterministic order: sorted by canonical encoding
        assert [canonical_form(g) for g in graphs] == sorted(forms)


def test_exhaustive_against_labeled_enumeration():
    # independently: dedup all labeled 4-vertex graphs by permutation isomorphism
    reps = []
    for g in labeled_graphs(4):
        if not is_connected(g):
            continue
        if not any(naive_is_isomorphic(g, r) for r in reps):
            reps.append(g)
    assert len(reps) == 6
    ours = connected_graphs(4)
    assert len(ours) == 6
    for r in reps:
        assert sum(1 for g in ours if naive_is_isomorphic(g, r)) == 1


def test_known_families_present():
    for n in (3, 4, 5, 6):
        forms = {canonical_form(g) for g in connected_graphs(n)}
        assert canonical_form(path_graph(n)) in forms
        assert canonical_form(cycle_graph(n)) in forms
        assert canonical_form(complete_graph(n)) in forms


def test_upto_concatenates():
    upto = connected_graphs_upto(5)
    assert len(upto) == 1 + 1 + 2 + 6 + 21
    assert [g.n for g in upto] == sorted(g.n for g in upto)


def test_enumeration_guard():
    assert ENUMERATION_LIMIT == 9
    with pytest.raises(CapacityError):
        connected_graphs(0)
    with pytest.raises(CapacityError):
        connected_graphs(10)

import pytest

import oracles
from eil.enumeration import all_graphs
from eil.errors import InputValidationError, ResourceError
from eil.graph import build_graph, disjoint_union
from eil.matchings import (
    HSubgraph,
    five_cycles,
    has_gap,
    ind_match_k2c5,
    induced_matching_number,
    is_maximal_h_subgraph,
    matching_number,
    min_match_k2c5,
    min_maximal_matching_number,
)
from eil.structure import build_hn, complete, cycle, path

C5 = cycle(5)
K2 = complete(2)
P4 = path(4)
TWO_K2 = disjoint_union(K2, K2)


def small_graphs(max_n=7):
    for n in range(1, max_n + 1):
        yield from all_graphs(n)


def test_matching_examples():
    assert matching_number(C5) == 2
    assert matching_number(K2) == 1
    h2 = build_hn(2)
    assert matching_number(h2) == 5 == oracles.match(h2)


def test_min_maximal_matching_examples():
    assert min_maximal_matching_number(P4) == 1
    assert min_maximal_matching_number(K2) == 1
    assert min_maximal_matching_number(C5) == 2
    assert min_maximal_matching_number(build_graph(4, [])) == 0


def test_induced_matching_examples():
    assert induced_matching_number(C5) == 1
    assert induced_matching_number(TWO_K2) == 2
    assert induced_matching_number(P4) == 1


def test_gap():
    assert has_gap(TWO_K2)
    assert not has_gap(C5)
    assert not has_gap(complete(4))


def test_maximal_h_subgraph():
    assert is_maximal_h_subgraph(HSubgraph(P4, k2=((1, 2),)))
    assert not is_maximal_h_subgraph(HSubgraph(C5, k2=((0, 1),)))
    assert is_maximal_h_subgraph(HSubgraph(C5, c5=((0, 1, 2, 3, 4),)))


def test_h_subgraph_validation():
    HSubgraph(C5, c5=((0, 1, 2, 3, 4),)).validate(induced=True)
    with pytest.raises(InputValidationError):
        HSubgraph(C5, k2=((0, 2),)).validate()
    with pytest.raises(InputValidationError):
        HSubgraph(C5, k2=((0, 1), (1, 2))).validate()
    # P4's two end edges span the middle edge, so they are not induced
    with pytest.raises(InputValidationError):
        HSubgraph(P4, k2=((0, 1), (2, 3))).validate(induced=True)


def test_k2c5_examples():
    val, wit = ind_match_k2c5(C5)
    assert val == 2 and wit.c5 and not wit.k2
    assert ind_match_k2c5(K2)[0] == 1
    assert ind_match_k2c5(disjoint_union(C5, K2))[0] == 3
    assert min_match_k2c5(P4)[0] == 1
    assert min_match_k2c5(C5)[0] == 2
    assert min_match_k2c5(K2)[0] == 1
    empty = build_graph(3, [])
    assert ind_match_k2c5(empty)[0] == 0 == min_match_k2c5(empty)[0]


def test_witness_json():
    data = min_match_k2c5(P4)[1].to_json()
    assert data == {"k2": [[1, 2]], "c5": [], "match_number": 1}


def test_all_invariants_against_brute_force():
    for g in small_graphs(7):
        if g.is_edgeless():
            continue
        assert matching_number(g) == oracles.match(g), g
        assert min_maximal_matching_number(g) == oracles.min_match(g), g
        assert induced_matching_number(g) == oracles.ind_match(g), g
        assert has_gap(g) == (oracles.ind_match(g) >= 2)


def test_k2c5_against_brute_force():
    for g in small_graphs(7):
        if g.is_edgeless():
            continue
        ik, iw = ind_match_k2c5(g)
        mk, mw = min_match_k2c5(g)
        assert ik == oracles.ind_match_k2c5(g), g.to_graph6()
        assert mk == oracles.min_match_k2c5(g), g.to_graph6()
        assert min_match_k2c5(g, induced_c5=True)[0] == oracles.min_match_k2c5(g, induced_c5=True)
        iw.validate(induced=True)
        mw.validate()
        assert iw.match_number == ik and mw.match_number == mk
        assert is_maximal_h_subgraph(mw)


def test_order_relations():
    for g in small_graphs(7):
        im, mm, m = induced_matching_number(g), min_maximal_matching_number(g), matching_number(g)
        ik, mk = ind_match_k2c5(g)[0], min_match_k2c5(g)[0]
        assert im <= ik
        assert mk <= mm
        assert im <= m and mm <= m
        if not five_cycles(g):
            # no C5 component can exist
            assert ik == im and mk == mm


def test_vertex_deletion_never_raises_min_match_k2c5():
    for g in small_graphs(7):
        base = min_match_k2c5(g)[0]
        for w in range(g.n):
            assert min_match_k2c5(g.delete_vertex(w))[0] <= base


def test_deterministic_witnesses():
    g = disjoint_union(C5, C5, K2)
    assert ind_match_k2c5(g)[1].to_json() == ind_match_k2c5(g)[1].to_json()
    assert min_match_k2c5(g)[1] == min_match_k2c5(g)[1]


def test_five_cycles_listing():
    assert len(five_cycles(C5)) == 1
    assert len(five_cycles(complete(5))) == 1
    assert five_cycles(complete(5), induced=True) == []
    assert len(five_cycles(complete(6))) == 6


def test_budget(monkeypatch):
    monkeypatch.setenv("EIL_BUDGET_VERTICES", "6")
    with pytest.raises(ResourceError):
        matching_number(path(7))
    with pytest.raises(ResourceError):
        ind_match_k2c5(path(7))

from __future__ import annotations

import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from sga.core import (
    NEG,
    POS,
    DirectedEdge,
    InputError,
    SignedGraph,
    apply_switching,
    balanced_components,
    canonical_key,
    complete_signed,
    contract,
    cycle_balance,
    induced_subgraph,
    rank,
    switchings,
)
from sga.poly import chromatic_polynomial, count_proper_colorings

from .conftest import signed_graphs


def test_induced_subgraph_examples():
    g = SignedGraph([1, 2, 3], [(1, 2), (2, 3), (1, 3)], [], [1])
    assert induced_subgraph(g, g.vertices) == g
    assert induced_subgraph(g, []) == SignedGraph([], [], [], [])
    h = induced_subgraph(g, [1, 2])
    assert h == SignedGraph([1, 2], [(1, 2)], [], [1])


def test_switching_examples():
    g = SignedGraph([1, 2], [(1, 2)], [], [])
    assert apply_switching(g, {1: 1, 2: 1}) == g
    assert apply_switching(g, {1: 1, 2: -1}) == SignedGraph([1, 2], [], [(1, 2)], [])


def test_contract_examples():
    path = SignedGraph([1, 2, 3], [(1, 2), (2, 3)], [], [])
    assert contract(path, DirectedEdge(2, 3, POS)) == SignedGraph([1, 3], [(1, 3)], [], [])
    g = SignedGraph([1, 2, 3], [(1, 2)], [(2, 3)], [])
    assert contract(g, DirectedEdge(2, 3, NEG)) == SignedGraph([1, 3], [], [(1, 3)], [])
    pm = SignedGraph([1, 2], [(1, 2)], [(1, 2)], [])
    assert contract(pm, DirectedEdge(1, 2, POS)) == SignedGraph([2], [], [], [2])


def test_contract_rejects_missing_edge():
    with pytest.raises(InputError):
        contract(SignedGraph([1, 2], [(1, 2)], [], []), DirectedEdge(1, 2, NEG))


def test_balance_and_rank_examples():
    assert [flag for _, flag in balanced_components(SignedGraph([1, 2, 3], [], [], []))] == [True] * 3
    assert balanced_components(SignedGraph([1], [], [], [1])) == [(frozenset({1}), False)]
    assert balanced_components(SignedGraph([1, 2], [(1, 2)], [(1, 2)], [])) == [(frozenset({1, 2}), False)]
    assert rank(SignedGraph([1, 2, 3], [], [], [])) == 0
    assert rank(SignedGraph([1], [], [], [1])) == 1
    assert rank(complete_signed(3)) == 3


def test_cycle_balance_examples():
    tri = SignedGraph([1, 2, 3], [(1, 2), (2, 3), (1, 3)], [], [])
    assert cycle_balance(tri, [1, 2, 3])
    sq = SignedGraph([1, 2, 3, 4], [(1, 2), (3, 4)], [(2, 3), (1, 4)], [])
    assert cycle_balance(sq, [1, 2, 3, 4], [POS, NEG, POS, NEG])
    pm = SignedGraph([1, 2], [(1, 2)], [(1, 2)], [])
    assert not cycle_balance(pm, [1, 2], [POS, NEG])


def test_json_round_trip_and_validation():
    text = '{"vertices":[1,2,3], "positive":[[1,2],[2,3]], "negative":[[1,2]], "loops":[1]}'
    g = SignedGraph.from_json(text)
    assert SignedGraph.from_json(g.to_json()) == g
    assert json.loads(g.to_json())["positive"] == [[1, 2], [2, 3]]
    with pytest.raises(InputError):
        SignedGraph.from_json('{"vertices":[1], "positive":[[1,2]]}')
    with pytest.raises(InputError):
        SignedGraph.from_json('{"vertices":[1], "colour":[]}')


@given(signed_graphs(max_n=4), st.data())
def test_switching_is_an_involution_preserving_invariants(g, data):
    nu = {v: data.draw(st.sampled_from([1, -1])) for v in g.vertices}
    h = apply_switching(g, nu)
    assert apply_switching(h, nu) == g
    assert rank(h) == rank(g)
    assert [f for _, f in balanced_components(h)] == [f for _, f in balanced_components(g)]
    for k in (1, 2):
        assert count_proper_colorings(h, k) == count_proper_colorings(g, k)


@given(signed_graphs(min_n=2, max_n=4), st.data())
def test_contracting_either_direction_gives_the_same_chromatic_polynomial(g, data):
    edges = [(u, v, POS) for u, v in g.pos] + [(u, v, NEG) for u, v in g.neg]
    if not edges:
        return
    u, v, s = data.draw(st.sampled_from(sorted(edges)))
    a = contract(g, DirectedEdge(u, v, s))
    b = contract(g, DirectedEdge(v, u, s))
    assert chromatic_polynomial(a) == chromatic_polynomial(b)


@given(signed_graphs(max_n=4))
def test_canonical_key_is_switching_invariant(g):
    for nu in list(switchings(g))[:4]:
        assert canonical_key(apply_switching(g, nu)) == canonical_key(g)

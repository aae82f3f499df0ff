from __future__ import annotations

import json
import random
import sys
from itertools import combinations

import pytest
from hypothesis import given

from sga.catalog import B, D3, F1, F2, G1, G2, G3, K4_2K2, left_example, right_example
from sga.chordal import SimpleGraph, is_threshold
from sga.core import InputError, SignedGraph
from sga.decide import (
    EDELMAN_REINER,
    FRAME_CIRCUIT,
    MAIN_THEOREM,
    NO,
    ORACLE,
    SIMPLICIAL_PEEL,
    UNDECIDED,
    UNKNOWN,
    YES,
    VerificationError,
    Verdict,
    decide,
    division_chain,
    er_decide,
    frame_circuit_refute,
    main_theorem_decide,
    zaslavsky_ss_decide,
)
from sga.generate import all_graphs, random_graph
from sga.oracle.arrangement import realize
from sga.oracle.freeness import freeness_decide
from sga.oracle.lattice import is_supersolvable_lattice
from sga.poly import chromatic_polynomial, nonneg_integer_roots
from sga.signedstruct import is_balanced_chordal, signed_elimination_ordering

from .conftest import signed_graphs

# balanced chordal, E- within E+, no loops, outside every theorem
OPEN_CASE = SignedGraph([1, 2, 3, 4], [(1, 4), (2, 3), (2, 4), (3, 4)], [(1, 4), (2, 3)], [])


def test_er_examples():
    assert er_decide(B(3)).free == YES
    v = er_decide(G3())
    assert v.free == NO and v.certificate["initial_segment"] is False
    assert er_decide(SignedGraph([1, 2], [(1, 2)], [(1, 2)], [1])).free == YES
    with pytest.raises(InputError):
        er_decide(F1())


def test_main_theorem_examples():
    v = main_theorem_decide(K4_2K2())
    assert v.free == NO and v.witness.length == 4
    path = SignedGraph([1, 2, 3], [(1, 2), (2, 3)], [], [1, 2, 3])
    assert main_theorem_decide(path).free == YES
    res = freeness_decide(realize(path))
    assert res.free and sorted(res.exponents) == nonneg_integer_roots(chromatic_polynomial(path)) == [1, 2, 2]
    assert main_theorem_decide(left_example()).free == YES
    assert main_theorem_decide(OPEN_CASE).free == UNKNOWN
    with pytest.raises(InputError):
        main_theorem_decide(F1())


def test_zaslavsky_examples():
    assert zaslavsky_ss_decide(B(4)).supersolvable == YES
    v = zaslavsky_ss_decide(D3())
    assert v.supersolvable == YES
    # D3 plus a vertex joined positively to vertex 1 with a loop-free extension
    ext = SignedGraph([1, 2, 3, 4], [(1, 2), (1, 3), (2, 3), (1, 4)], [(1, 2), (1, 3), (2, 3)], [])
    assert signed_elimination_ordering(ext) is None
    assert zaslavsky_ss_decide(ext).supersolvable == YES
    assert is_supersolvable_lattice(realize(ext))
    assert zaslavsky_ss_decide(G1()).supersolvable == NO


def test_frame_circuit_examples():
    v = frame_circuit_refute(G1())
    assert v.free == NO and v.certificate["kind"] == "balanced_cycle"
    v = frame_circuit_refute(G2())
    assert v.certificate["kind"] == "tight_handcuff"
    assert frame_circuit_refute(SignedGraph([1, 2, 3], [(1, 2), (2, 3)], [], [])) is None
    for g in (F1(), F2()):
        assert decide(g).provenance == FRAME_CIRCUIT


def test_decide_examples():
    v = decide(B(4))
    assert (v.free, v.provenance, v.supersolvable, v.balanced_chordal) == (YES, EDELMAN_REINER, YES, True)
    v = decide(K4_2K2())
    assert v.free == NO and v.provenance == MAIN_THEOREM and v.witness is not None
    v = decide(OPEN_CASE, oracle_limit=0)
    assert v.free == UNKNOWN and v.provenance == UNDECIDED and not v.decided
    assert v.balanced_chordal is True
    v = decide(SignedGraph([], [], [], []))
    assert v.free == YES and v.provenance == SIMPLICIAL_PEEL
    assert decide(left_example()).provenance == SIMPLICIAL_PEEL
    v = decide(right_example())
    assert v.free == YES and v.supersolvable == NO


def test_open_case_falls_back_to_the_oracle():
    v = decide(OPEN_CASE)
    assert v.provenance == ORACLE and v.free == NO
    assert "degree bound" in v.certificate["reason"]


def test_non_free_verdicts_carry_a_circuit_when_one_exists():
    for g in (G1(), G2()):
        v = decide(g)
        assert v.provenance == MAIN_THEOREM and v.certificate["frame_circuit"]["kind"]


def test_verdict_json_schema():
    data = json.loads(json.dumps(decide(G3(), verify=True).to_json()))
    assert set(data) == {
        "balanced_chordal", "witness", "supersolvable", "ss_certificate",
        "free", "provenance", "certificate", "cross_checked",
    }
    assert data["cross_checked"] is True and data["provenance"] == EDELMAN_REINER


def test_verification_error_is_raised_on_disagreement(monkeypatch):
    d = sys.modules["sga.decide"]
    monkeypatch.setattr(d, "_dispatch", lambda *a: Verdict(free=YES, provenance=MAIN_THEOREM))
    monkeypatch.setattr(d, "_check_chain", lambda v: None)
    with pytest.raises(VerificationError):
        decide(F1(), verify=True)


@given(signed_graphs(max_n=4))
def test_decide_agrees_with_the_oracle(g):
    v = decide(g, verify=True)
    ss = is_supersolvable_lattice(realize(g)).supersolvable
    assert v.supersolvable == (YES if ss else NO)
    # the chain SEO => SS => free => BC
    if signed_elimination_ordering(g) is not None:
        assert v.supersolvable == YES
    if v.supersolvable == YES:
        assert v.free == YES
    if v.free == YES:
        assert v.balanced_chordal is True


def test_complete_positive_full_loops_five_conditions():
    for n in range(1, 5):
        for g in all_graphs(n, "complete-pos", "full"):
            values = {
                bool(is_balanced_chordal(g)),
                bool(is_threshold(SimpleGraph.negative_part(g))),
                signed_elimination_ordering(g) is not None,
                is_supersolvable_lattice(realize(g)).supersolvable,
                freeness_decide(realize(g)).free,
            }
            assert len(values) == 1, g


def test_division_chain_certifies_the_main_theorem_class():
    chain = division_chain(left_example())
    assert chain and "edelman_reiner" in chain[-1]
    assert division_chain(K4_2K2()) is None
    assert division_chain(OPEN_CASE) is None
    rng = random.Random(4)
    for _ in range(60):
        g = random_graph(rng, rng.randint(1, 5), "neg-in-pos", "full")
        assert (division_chain(g) is not None) == (is_balanced_chordal(g) is True)


def test_free_with_some_loop_set_implies_balanced_chordal():
    for g in all_graphs(3, "neg-in-pos", "all-subsets"):
        if freeness_decide(realize(g)).free:
            assert is_balanced_chordal(g) is True
    rng = random.Random(6)
    for _ in range(40):
        g = random_graph(rng, 4, "neg-in-pos", "random")
        if freeness_decide(realize(g)).free:
            assert is_balanced_chordal(g) is True


def test_witnesses_are_machine_checkable():
    for g in (K4_2K2(), K4_2K2(loops=())):
        v = decide(g)
        pairs = [tuple(sorted(e)) for e in combinations(v.witness.cycle, 2)]
        assert len(pairs) == 6

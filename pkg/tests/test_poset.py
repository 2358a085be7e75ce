import networkx as nx
import pytest
from hypothesis import given

from framekit.errors import CycleError, UnknownLabel
from framekit.poset import (
    Poset,
    antichain,
    canonical_code,
    chain,
    covers,
    down_set,
    find_order_isomorphism,
    is_order_isomorphism,
    opposite,
    poset_from_pairs,
    subset_label,
    to_dot,
    up_set,
)

from conftest import posets


def diamond_poset():
    return poset_from_pairs(["0", "a", "b", "1"], [("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")])


def test_two_chain():
    P = poset_from_pairs(["p0", "p1"], [("p0", "p1")])
    assert P.le("p0", "p1") and not P.le("p1", "p0")


def test_singleton():
    P = poset_from_pairs(["a"], [])
    assert P.elements == ("a",) and P.le("a", "a")


def test_cycle_rejected():
    with pytest.raises(CycleError) as exc:
        poset_from_pairs(["a", "b"], [("a", "b"), ("b", "a")])
    assert set(exc.value.witness) == {"a", "b"}


def test_long_cycle_rejected():
    with pytest.raises(CycleError):
        poset_from_pairs(["a", "b", "c"], [("a", "b"), ("b", "c"), ("c", "a")])


def test_unknown_label():
    with pytest.raises(UnknownLabel):
        poset_from_pairs(["a"], [("a", "z")])


def test_duplicate_labels_rejected():
    with pytest.raises(ValueError):
        poset_from_pairs(["a", "a"], [])


def test_opposite_examples():
    P = chain(["p0", "p1"])
    assert opposite(P) == chain(["p1", "p0"])
    A = antichain(["a", "b"])
    assert opposite(A) == A
    D = opposite(diamond_poset())
    assert D.le("1", "a") and D.le("a", "0") and not D.le("a", "b")


def test_up_down_examples():
    P = chain(["p0", "p1"])
    assert up_set(P, {"p0"}) == {"p0", "p1"}
    assert down_set(P, {"p1"}) == {"p0", "p1"}
    assert up_set(P, set()) == frozenset()


def test_covers_examples():
    assert covers(chain(["a", "b", "c"])) == [("a", "b"), ("b", "c")]
    assert sorted(covers(diamond_poset())) == [("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")]
    assert covers(antichain(["a", "b", "c"])) == []


def test_subset_label_sorted():
    assert subset_label({"b", "a"}) == "{a,b}"
    assert subset_label([]) == "{}"


def test_dot_lists_covers():
    dot = to_dot(chain(["a", "b"]))
    assert '"a" -> "b";' in dot and dot.startswith("digraph")


def _nx_graph(P: Poset):
    G = nx.DiGraph()
    G.add_nodes_from(P.elements)
    G.add_edges_from((a, b) for a, b in P.relation() if a != b)
    return G


@given(posets())
def test_order_axioms(P):
    E = P.elements
    for a in E:
        assert P.le(a, a)
        for b in E:
            if a != b:
                assert not (P.le(a, b) and P.le(b, a))
            for c in E:
                if P.le(a, b) and P.le(b, c):
                    assert P.le(a, c)


@given(posets())
def test_closure_matches_networkx(P):
    cover_graph = nx.DiGraph()
    cover_graph.add_nodes_from(P.elements)
    cover_graph.add_edges_from(covers(P))
    closed = nx.transitive_closure(cover_graph, reflexive=False)
    assert {(a, b) for a, b in closed.edges} == {(a, b) for a, b in P.relation() if a != b}


@given(posets())
def test_covers_match_transitive_reduction(P):
    red = nx.transitive_reduction(_nx_graph(P))
    assert sorted(red.edges) == sorted(covers(P))


@given(posets())
def test_covers_rebuild_order(P):
    assert poset_from_pairs(list(P.elements), covers(P)) == P


@given(posets())
def test_opposite_involution(P):
    assert opposite(opposite(P)) == P
    assert opposite(opposite(P)).elements == P.elements


@given(posets(), posets())
def test_up_down_closure_laws(P, _):
    E = list(P.elements)
    for m in range(min(1 << len(E), 64)):
        A = P.subset(m)
        for close in (up_set, down_set):
            C = close(P, A)
            assert A <= C and close(P, C) == C
            for x in E:
                assert close(P, A) <= close(P, A | {x})


@given(posets(max_size=5), posets(max_size=5))
def test_isomorphism_agrees_with_networkx(P, Q):
    ours = find_order_isomorphism(P, Q)
    theirs = nx.is_isomorphic(_nx_graph(P), _nx_graph(Q))
    assert (ours is not None) == theirs
    if ours is not None:
        assert is_order_isomorphism(P, Q, ours)
    assert (canonical_code(P) == canonical_code(Q)) == theirs

import pytest
from hypothesis import given

from framekit.corpus import lattice_corpus
from framekit.errors import NotALattice
from framekit.lattice import (
    FiniteLattice,
    chain_lattice,
    compact_elements,
    diamond,
    distributivity_violation,
    find_lattice_isomorphism,
    ideal_completion,
    ideals,
    is_compact_element,
    is_compactly_generated,
    is_distributive,
    lattice_from_pairs,
    lattice_from_poset,
    le_compact_iso_check,
    m3,
    meet_via_lower_bounds,
    n5,
    powerset_lattice,
    principal_ideal,
    principal_ideal_map,
    product_lattice,
    subset_frame_law_violation,
)
from framekit.poset import antichain, poset_from_pairs

from conftest import lattices


def brute_join(L, A):
    ups = [u for u in L.elements if all(L.le(a, u) for a in A)]
    least = [u for u in ups if all(L.le(u, v) for v in ups)]
    assert len(least) == 1
    return least[0]


def test_diamond_is_boolean_square():
    D = lattice_from_poset(
        poset_from_pairs(["0", "a", "b", "1"], [("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")])
    )
    two = chain_lattice(["0", "1"])
    assert find_lattice_isomorphism(D, product_lattice([two, two])) is not None


def test_antichain_is_not_a_lattice():
    with pytest.raises(NotALattice) as exc:
        lattice_from_poset(antichain(["a", "b"]))
    assert set(exc.value.witness) == {"a", "b"}


def test_empty_is_not_a_lattice():
    with pytest.raises(NotALattice):
        lattice_from_poset(antichain([]))


def test_powerset_joins():
    B = powerset_lattice(["a", "b"])
    assert B.join(["{a}", "{b}"]) == "{a,b}"
    assert B.join([]) == B.bottom == "{}"
    assert B.meet([]) == B.top == "{a,b}"


def test_distributivity_examples():
    assert is_distributive(diamond())
    assert distributivity_violation(diamond()) is None
    for L in (m3(), n5()):
        a, b, c = distributivity_violation(L)
        assert L.wedge(a, L.vee(b, c)) != L.vee(L.wedge(a, b), L.wedge(a, c))
    # frozen witnesses from the exhaustive triple scan
    assert distributivity_violation(m3()) == ("a", "b", "c")
    assert distributivity_violation(n5()) == ("b", "a", "c")


def test_every_element_compact():
    B3 = powerset_lattice(["a", "b", "c"])
    assert compact_elements(B3) == frozenset(B3.elements)
    assert is_compact_element(B3, B3.top) and is_compact_element(B3, B3.bottom)
    assert is_compactly_generated(powerset_lattice(["a", "b"]))
    single = chain_lattice(["0"])
    assert compact_elements(single) == {"0"}


def test_ideal_examples():
    two = chain_lattice(["0", "1"])
    assert sorted(sorted(I.members) for I in ideals(two)) == [["0"], ["0", "1"]]
    B = powerset_lattice(["a", "b"])
    found = ideals(B)
    assert len(found) == 4
    principal = {principal_ideal(B, a).members for a in B.elements}
    assert len(set(principal_ideal_map(B).values())) == 4
    assert {I.members for I in found} == principal
    assert len(ideals(chain_lattice(["0"]))) == 1


def test_ideal_completion_examples():
    for L in (chain_lattice(["0", "m", "1"]), diamond(), m3()):
        assert find_lattice_isomorphism(ideal_completion(L), L) is not None


def test_le_compact_examples():
    assert le_compact_iso_check(powerset_lattice(["a", "b", "c"]))
    assert le_compact_iso_check(chain_lattice(["0", "1", "2", "3"]))
    assert le_compact_iso_check(chain_lattice(["0"]))


def test_product_examples():
    two = chain_lattice(["0", "1"])
    assert find_lattice_isomorphism(product_lattice([two, two]), diamond()) is not None
    L = n5()
    one = chain_lattice(["*"])
    assert find_lattice_isomorphism(product_lattice([L, one]), L) is not None
    pa, pb = powerset_lattice(["a"]), powerset_lattice(["b"])
    assert find_lattice_isomorphism(product_lattice([pa, pb]), powerset_lattice(["a", "b"])) is not None
    assert len(product_lattice([])) == 1


@given(lattices())
def test_join_meet_match_brute_force(L):
    E = L.elements
    for a in E:
        for b in E:
            assert L.vee(a, b) == brute_join(L, [a, b])
            assert L.wedge(a, b) == meet_via_lower_bounds(L, [a, b])


@given(lattices())
def test_meet_is_join_of_lower_bounds(L):
    for m in range(min(1 << len(L), 256)):
        A = L.poset.subset(m)
        assert L.meet(A) == meet_via_lower_bounds(L, A)
        assert L.join(A) == brute_join(L, A)


@given(lattices(max_size=7))
def test_lattice_laws(L):
    E = L.elements
    for a in E:
        assert L.vee(a, a) == a and L.wedge(a, a) == a
        for b in E:
            assert L.vee(a, b) == L.vee(b, a)
            assert L.vee(a, L.wedge(a, b)) == a and L.wedge(a, L.vee(a, b)) == a
            for c in E:
                assert L.vee(a, L.vee(b, c)) == L.vee(L.vee(a, b), c)
                assert L.wedge(a, L.wedge(b, c)) == L.wedge(L.wedge(a, b), c)


@given(lattices())
def test_ideal_completion_isomorphic(L):
    I = ideal_completion(L)
    assert find_lattice_isomorphism(I, L) is not None
    assert le_compact_iso_check(L)


@given(lattices(max_size=5), lattices(max_size=5))
def test_product_of_distributive_is_distributive(L, M):
    if is_distributive(L) and is_distributive(M):
        assert is_distributive(product_lattice([L, M]))


def test_distributive_iff_subset_frame_law_exhaustive():
    for L in lattice_corpus(6):
        law = subset_frame_law_violation(L, range(1 << len(L))) is None
        assert law == is_distributive(L)


def test_lattice_from_pairs_roundtrip():
    L = lattice_from_pairs(["0", "1"], [("0", "1")])
    assert isinstance(L, FiniteLattice) and L.bottom == "0" and L.top == "1"


@given(lattices(max_size=10))
def test_ideal_enumerations_agree(L):
    by_filter = [I.members for I in ideals(L, "filter")]
    assert [I.members for I in ideals(L, "closure")] == by_filter
    # cross-check: every ideal of a finite lattice is principal
    assert sorted(map(sorted, by_filter)) == sorted(
        sorted(principal_ideal(L, a).members) for a in L.elements
    )

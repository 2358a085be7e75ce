import pytest
from hypothesis import given

from framekit.corpus import lattice_corpus, posets as posets_of_size
from framekit.duality import (
    hochster_vs_opposite,
    lattice_to_space,
    space_to_lattice,
    stone_roundtrip_check,
)
from framekit.errors import NotDistributive, NotSpectral
from framekit.frame import FrameMorphism, frame_morphisms, sp_morphism
from framekit.lattice import (
    chain_lattice,
    diamond,
    find_lattice_isomorphism,
    is_distributive,
    m3,
    powerset_lattice,
)
from framekit.poset import is_order_isomorphism, poset_from_pairs
from framekit.topology import (
    FiniteSpace,
    alexandrov,
    discrete,
    find_homeomorphism,
    hochster_dual,
    indiscrete,
    is_homeomorphism,
    is_spectral,
    sierpinski,
)

from conftest import lattices

CHAIN3 = chain_lattice(["0", "m", "1"])


def join_irreducibles(L):
    E = L.elements
    J = [
        j
        for j in E
        if j != L.bottom and not any(L.vee(a, b) == j and j not in (a, b) for a in E for b in E)
    ]
    return poset_from_pairs(J, [(a, b) for a in J for b in J if a != b and L.le(a, b)])


def test_lattice_to_space_examples():
    assert find_homeomorphism(lattice_to_space(diamond()), discrete(["p", "q"]))
    assert find_homeomorphism(lattice_to_space(CHAIN3), sierpinski())
    assert len(lattice_to_space(chain_lattice(["0", "1"]))) == 1
    with pytest.raises(NotDistributive):
        lattice_to_space(m3())


def test_space_to_lattice_examples():
    assert find_lattice_isomorphism(space_to_lattice(discrete(["a", "b"])), diamond())
    assert find_lattice_isomorphism(space_to_lattice(sierpinski()), CHAIN3)
    assert len(space_to_lattice(FiniteSpace([], [0]))) == 1
    with pytest.raises(NotSpectral):
        space_to_lattice(indiscrete(["a", "b"]))


def test_roundtrip_examples():
    r = stone_roundtrip_check(diamond())
    assert r.ok and r.revalidated and r.witness
    assert stone_roundtrip_check(chain_lattice(["0"])).ok
    assert stone_roundtrip_check(FiniteSpace([], [0])).ok
    with pytest.raises(TypeError):
        stone_roundtrip_check("diamond")


def test_roundtrip_corpus():
    for L in lattice_corpus(6):
        if is_distributive(L):
            r = stone_roundtrip_check(L)
            assert r.ok and is_order_isomorphism(
                L.poset, space_to_lattice(lattice_to_space(L)).poset, r.witness
            )
    for n in range(6):
        for P in posets_of_size(n):
            X = alexandrov(P)
            r = stone_roundtrip_check(X)
            assert r.ok and is_homeomorphism(X, lattice_to_space(space_to_lattice(X)), r.witness)


def test_hochster_vs_opposite_examples():
    assert hochster_vs_opposite(CHAIN3)
    assert hochster_vs_opposite(powerset_lattice(["a", "b", "c"]))
    for n in range(6):
        for P in posets_of_size(n):
            assert hochster_vs_opposite(space_to_lattice(alexandrov(P)))


@given(lattices())
def test_spectrum_matches_birkhoff(L):
    """Oracle: the space of a distributive lattice is the down-set topology on join-irreducibles."""
    if not is_distributive(L):
        return
    X = lattice_to_space(L)
    assert is_spectral(X)
    assert find_homeomorphism(X, alexandrov(join_irreducibles(L), "zariski")) is not None


def test_lattice_to_space_is_contravariant():
    frames = [chain_lattice(["0", "1"]), CHAIN3, diamond()]
    for A in frames:
        for B in frames:
            for f in frame_morphisms(A, B):
                g = sp_morphism(f)
                assert set(g.source.points) <= set(lattice_to_space(B).points) | set(B.elements)
                assert g.target == lattice_to_space(A) or find_homeomorphism(
                    g.target, lattice_to_space(A)
                )

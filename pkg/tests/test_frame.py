import pytest
from hypothesis import given

from framekit.corpus import lattice_corpus, lattices as lattices_of_size
from framekit.errors import NotAFrame, NotAFrameMorphism
from framekit.frame import (
    Frame,
    FrameMorphism,
    adjunction_unit,
    coherence_report,
    compose,
    duality_bijection,
    frame_morphisms,
    has_enough_points,
    identity_morphism,
    is_coherent,
    is_frame,
    is_prime,
    primes,
    sp_morphism,
    spectrum,
    stone_open,
    to_frame,
)
from framekit.lattice import (
    FiniteLattice,
    chain_lattice,
    diamond,
    is_distributive,
    m3,
    n5,
    powerset_lattice,
)
from framekit.poset import Poset, subset_label
from framekit.topology import (
    continuous_maps,
    discrete,
    find_homeomorphism,
    is_sober,
    open_lattice,
    sierpinski,
)
from framekit.corpus import spaces as spaces_of_size

from conftest import lattices

CHAIN3 = chain_lattice(["0", "m", "1"])


def join_irreducible_primes(L):
    """Birkhoff: in a distributive lattice the primes are ⋁{x : j ≰ x} for join-irreducible j."""
    E = L.elements
    irreducible = [
        j
        for j in E
        if j != L.bottom
        and not any(L.vee(a, b) == j and a != j and b != j for a in E for b in E)
    ]
    return {L.join(x for x in E if not L.le(j, x)) for j in irreducible}


def test_is_frame_examples():
    assert isinstance(to_frame(powerset_lattice(["a", "b"])), Frame)
    assert to_frame(CHAIN3).verified
    with pytest.raises(NotAFrame) as exc:
        to_frame(m3())
    assert len(exc.value.witness) == 3
    assert not is_frame(n5())


def test_primes_examples():
    assert set(primes(powerset_lattice(["a", "b"]))) == {"{a}", "{b}"}
    assert set(primes(CHAIN3)) == {"0", "m"}
    assert set(primes(m3())) == set()


def test_stone_open_examples():
    B = powerset_lattice(["a", "b"])
    assert stone_open(B, "{a}") == {"{b}"}
    for F in (B, CHAIN3, diamond()):
        assert stone_open(F, F.bottom) == frozenset()
        assert stone_open(F, F.top) == frozenset(primes(F))


def test_spectrum_examples():
    X = spectrum(powerset_lattice(["a", "b"]))
    assert len(X) == 2 and len(X.open_masks) == 4
    assert find_homeomorphism(spectrum(CHAIN3), sierpinski("0", "m")) is not None
    assert spectrum(CHAIN3).opens == {frozenset(), frozenset({"0"}), frozenset({"0", "m"})}
    assert len(spectrum(m3())) == 0


def test_enough_points_examples():
    assert has_enough_points(powerset_lattice(["a", "b"]))
    assert not has_enough_points(m3())
    assert stone_open(m3(), "a") == stone_open(m3(), "b") == frozenset()


def test_adjunction_unit_examples():
    assert adjunction_unit(powerset_lattice(["a", "b"])).is_isomorphism()
    assert not adjunction_unit(m3()).is_injective()
    assert adjunction_unit(chain_lattice(["0"])).is_isomorphism()


def test_corpus_enough_points_iff_distributive():
    for L in lattice_corpus(6):
        d = is_distributive(L)
        assert has_enough_points(L) == d
        assert adjunction_unit(L).is_isomorphism() == d


def test_sp_of_identity_is_identity():
    for F in (CHAIN3, diamond(), powerset_lattice(["a", "b", "c"])):
        g = sp_morphism(identity_morphism(F))
        assert all(g(p) == p for p in g.source.points)


def test_sp_of_chain_inclusion():
    T = chain_lattice(["{}", "{p1}", "{p0,p1}"])
    B = powerset_lattice(["p0", "p1"])
    f = FrameMorphism(T, B, {a: a for a in T.elements})
    g = sp_morphism(f)
    # frozen from the direct computation of ⋁{a : f(a) ≤ p}
    assert g.mapping == {"{p0}": "{}", "{p1}": "{p1}"}
    assert g.is_bijective()


def test_sp_of_two_chain_morphism_is_constant():
    two = chain_lattice(["0", "1"])
    F = powerset_lattice(["a", "b"])
    f = FrameMorphism(two, F, {"0": F.bottom, "1": F.top})
    g = sp_morphism(f)
    assert set(g.mapping) == set(primes(F)) and set(g.mapping.values()) == {"0"}


def test_invalid_morphism_rejected():
    two = chain_lattice(["0", "1"])
    with pytest.raises(NotAFrameMorphism):
        FrameMorphism(two, two, {"0": "1", "1": "1"})


def test_sp_is_contravariantly_functorial():
    frames = [chain_lattice(["0", "1"]), CHAIN3, powerset_lattice(["a", "b"])]
    for A in frames:
        for B in frames:
            for C in frames:
                for f in frame_morphisms(A, B):
                    for g in frame_morphisms(B, C):
                        gf = sp_morphism(compose(g, f))
                        sf, sg = sp_morphism(f), sp_morphism(g)
                        assert all(gf(p) == sf(sg(p)) for p in gf.source.points)


def test_duality_identity_gives_unit():
    F = CHAIN3
    X = spectrum(F)
    db = duality_bijection(X, F)
    h = db.to_frame_morphism({p: p for p in X.points})
    assert h.mapping == adjunction_unit(F).mapping


def test_duality_roundtrip_sierpinski_to_chain():
    S = sierpinski()
    db = duality_bijection(S, CHAIN3)
    maps = continuous_maps(S, spectrum(CHAIN3))
    assert len(maps) == 3
    for g in maps:
        assert db.to_continuous_map(db.to_frame_morphism(g)) == g
    homs = frame_morphisms(CHAIN3, open_lattice(S))
    assert len(homs) == 3
    for h in homs:
        assert db.to_frame_morphism(db.to_continuous_map(h)) == h


def test_duality_roundtrip_to_point():
    point = discrete(["*"])
    F = powerset_lattice(["a"])
    db = duality_bijection(point, F)
    homs = frame_morphisms(F, open_lattice(point))
    assert len(homs) == 1
    for h in homs:
        assert db.to_frame_morphism(db.to_continuous_map(h)) == h


def test_coherence_examples():
    assert coherence_report(diamond()).conditions == (True,) * 4
    assert coherence_report(m3()).conditions == (False,) * 4
    assert coherence_report(n5()).conditions == (False,) * 4
    assert is_coherent(CHAIN3)


def test_coherence_agrees_on_corpus():
    for L in lattice_corpus(6):
        r = coherence_report(L)
        assert r.agree and r.coherent_frame == is_distributive(L)


@given(lattices())
def test_stone_opens_are_frame_morphism_image(L):
    if not is_distributive(L):
        return
    E = L.elements
    for a in E:
        for b in E:
            assert stone_open(L, L.wedge(a, b)) == stone_open(L, a) & stone_open(L, b)
            assert stone_open(L, L.vee(a, b)) == stone_open(L, a) | stone_open(L, b)


@given(lattices())
def test_primes_match_birkhoff(L):
    if is_distributive(L):
        assert set(primes(L)) == join_irreducible_primes(L)
    for p in primes(L):
        assert is_prime(L, p) and p != L.top


def test_unit_homeomorphism_iff_sober():
    for n in range(5):
        for X in spaces_of_size(n):
            O = open_lattice(X)
            Y = spectrum(O)
            # x ↦ the largest open missing x
            mapping = {
                x: subset_label(set().union(*(u for u in X.opens if x not in u)))
                for x in X.points
            }
            from framekit.topology import is_homeomorphism

            homeo = set(mapping.values()) <= set(Y.points) and is_homeomorphism(X, Y, mapping)
            assert homeo == is_sober(X)

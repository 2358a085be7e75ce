"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line.

Run directly with ``python3 tests/test_acceptance.py`` for just the summary.
"""
import time
from itertools import combinations

import pytest

from framekit.corpus import lattice_corpus, posets, random_lattices, spaces
from framekit.duality import (
    hochster_vs_opposite,
    lattice_to_space,
    space_to_lattice,
    stone_roundtrip_check,
)
from framekit.errors import NotAFrame
from framekit.frame import (
    adjunction_unit,
    coherence_report,
    has_enough_points,
    spectrum,
    to_frame,
)
from framekit.lattice import distributivity_violation, is_distributive, m3, n5
from framekit.poset import is_order_isomorphism, opposite
from framekit.topology import (
    alexandrov,
    continuous_maps,
    hochster_dual,
    is_homeomorphism,
    is_spectral,
    specialization_order,
)
from framekit.ttmodel import (
    SupportSpace,
    bousfield_lattice,
    build_scenario,
    class_frame_laws,
    dichotomy_check,
    gamma_orthogonality_table,
    gamma_table,
    is_acyclic,
    is_local,
    local_global_and_stratified_check,
    perp_check,
    recollement_decompose,
    scenario_preset,
    supp_T,
    universal_support,
    universal_support_candidates,
)
from framekit.ttmodel.verify import spectrum_checks

SEED = 20240601


def _corpus():
    if not hasattr(_corpus, "cache"):
        _corpus.cache = lattice_corpus(6) + random_lattices(1000, seed=SEED, max_size=10)
    return _corpus.cache


def _spectral_corpus():
    out = [lattice_to_space(L) for L in _corpus() if is_distributive(L)]
    for n in range(6):
        out += [alexandrov(P, side) for P in posets(n) for side in ("zariski", "dual")]
        out += [X for X in spaces(n) if is_spectral(X)]
    return out


def _scenarios():
    named = [scenario_preset(n) for n in ("chain(2)", "chain(3)", "diamond", "antichain", "kinj-chain(2)")]
    small = [build_scenario(P, presets=["injective-hulls"]) for n in range(5) for P in posets(n)]
    return named + small


# -- criteria ------------------------------------------------------------------------

def criterion_1():
    start = time.perf_counter()
    disagreements = [L for L in _corpus() if not coherence_report(L).agree]
    elapsed = time.perf_counter() - start
    ok = not disagreements and elapsed < 60
    return ok, f"{len(_corpus())} lattices, {len(disagreements)} disagreements, {elapsed:.1f}s"


def criterion_2():
    bad = [
        L
        for L in _corpus()
        if has_enough_points(L) != is_distributive(L)
        or adjunction_unit(L).is_isomorphism() != is_distributive(L)
    ]
    witnesses = []
    for L in (m3(), n5()):
        w = distributivity_violation(L)
        genuine = w is not None and L.wedge(w[0], L.vee(w[1], w[2])) != L.vee(
            L.wedge(w[0], w[1]), L.wedge(w[0], w[2])
        )
        try:
            to_frame(L)
            rejected = False
        except NotAFrame as e:
            rejected = len(e.witness) == 3
        witnesses.append(genuine and rejected)
    return not bad and all(witnesses), f"{len(bad)} mismatches; M3/N5 witnesses {witnesses}"


def criterion_3():
    failures = 0
    count = 0
    for L in _corpus():
        if is_distributive(L):
            r = stone_roundtrip_check(L)
            back = space_to_lattice(lattice_to_space(L))
            failures += not (r.ok and is_order_isomorphism(L.poset, back.poset, r.witness))
            count += 1
    for n in range(6):
        for P in posets(n):
            for side in ("zariski", "dual"):
                X = alexandrov(P, side)
                r = stone_roundtrip_check(X)
                back = lattice_to_space(space_to_lattice(X))
                failures += not (r.ok and is_homeomorphism(X, back, r.witness))
                count += 1
    return failures == 0, f"{count} round trips, {failures} failures"


def criterion_4():
    failures = 0
    spectral = _spectral_corpus()
    for X in spectral:
        H = hochster_dual(X)
        failures += not (
            hochster_dual(H) == X and specialization_order(H) == opposite(specialization_order(X))
        )
    distributive = [L for L in _corpus() if is_distributive(L)]
    failures += sum(not hochster_vs_opposite(L) for L in distributive)
    return failures == 0, f"{len(spectral)} spaces, {len(distributive)} lattices, {failures} failures"


def criterion_5():
    bad = []
    scenarios = _scenarios() + [scenario_preset("chain(5)")]
    for sc in scenarios:
        bad += [(sc.name, c.name) for c in class_frame_laws(sc) if not c.passed]
    return not bad, f"{len(scenarios)} scenarios, failures {bad}"


def criterion_6():
    bad = []
    for name in ("chain(2)", "chain(3)", "diamond"):
        bad += [(name, c.name) for c in spectrum_checks(scenario_preset(name)) if not c.passed]
    return not bad, f"failures {bad}"


def criterion_7():
    sc = scenario_preset("chain(2)")
    E1, E0 = sc["E_p1"], sc["E_p0"]
    example = not is_local(E1, E1) and is_local(E0, E0)
    dichotomy = True
    for X in sc.objects:
        w = dichotomy_check(sc, X)
        dichotomy &= w.local == is_local(w.koszul, X) and w.acyclic == is_acyclic(w.koszul, X)
        dichotomy &= w.local == (w.prime in X.supp)
        if not X.is_zero:
            dichotomy &= w.local != w.acyclic
    perp = all(perp_check(sc, U) for U in sc.space.subsets())
    return example and dichotomy and perp, f"E example {example}, dichotomy {dichotomy}, perp {perp}"


def criterion_8():
    bad = []
    for sc in _scenarios():
        if not all(gamma_table(sc).values()):
            bad.append((sc.name, "gamma via opens"))
        if not all(gamma_orthogonality_table(sc).values()):
            bad.append((sc.name, "orthogonality"))
        bad += [(sc.name, c.name) for c in local_global_and_stratified_check(sc) if not c.passed]
    return not bad, f"failures {bad}"


def criterion_9():
    failures, count = 0, 0
    for n in range(4):
        for P in posets(n):
            S = SupportSpace(P)
            subsets = S.subsets()
            for U1 in subsets:
                for U2 in subsets:
                    r = recollement_decompose(S, U1, U2)
                    failures += not (r.ok and r.product_size == 2**n)
                    count += 1
    return failures == 0, f"{count} (U1,U2) pairs, {failures} failures"


def criterion_10():
    failures, count = 0, 0
    targets = [X for n in range(4) for X in spaces(n)]
    for n in range(4):
        for P in posets(n):
            sc = build_scenario(P, presets=["injective-hulls"])
            Sp = spectrum(bousfield_lattice(sc))
            supports = {X.name: supp_T(sc, X) for X in sc.objects}
            for U in targets:
                for phi in continuous_maps(U, Sp):
                    sigma = {name: phi.preimage(s) for name, s in supports.items()}
                    f = universal_support(sc, U, sigma)
                    found = universal_support_candidates(sc, U, sigma)
                    failures += not (f == phi and found == [phi])
                    count += 1
    return failures == 0, f"{count} (scenario, space, sigma) cases, {failures} failures"


CRITERIA = [
    (1, "coherence conditions agree", criterion_1),
    (2, "enough points iff distributive", criterion_2),
    (3, "Stone duality round trips", criterion_3),
    (4, "Hochster duality", criterion_4),
    (5, "frame laws of Bousfield classes", criterion_5),
    (6, "stratified model spectra", criterion_6),
    (7, "locality layer", criterion_7),
    (8, "local cohomology functors", criterion_8),
    (9, "recollement decompositions", criterion_9),
    (10, "universal support", criterion_10),
]


def _line(number, title, ok, detail):
    return f"criterion {number:>2} [{'PASS' if ok else 'FAIL'}] {title}: {detail}"


@pytest.mark.parametrize("number,title,fn", CRITERIA, ids=[f"criterion_{n}" for n, _, _ in CRITERIA])
def test_criterion(number, title, fn, capsys):
    ok, detail = fn()
    with capsys.disabled():
        print("\n" + _line(number, title, ok, detail))
    assert ok, detail


if __name__ == "__main__":
    for number, title, fn in CRITERIA:
        print(_line(number, title, *fn()))

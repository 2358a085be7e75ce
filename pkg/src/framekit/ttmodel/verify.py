"""The full scenario suite behind ``framekit model verify``."""
from __future__ import annotations

import random

from ..frame import coherence_report, spectrum
from ..lattice import find_lattice_isomorphism, powerset_lattice
from ..report import Check, Report, timed
from ..topology import hochster_dual, open_lattice
from .model import (
    BousfieldClassRepr,
    Scenario,
    bousfield_class,
    coproduct_class,
    dichotomy_check,
    is_local,
    perp_check,
    tensor_class,
)
from .spectra import balmer_primes, bousfield_lattice, f_map, sp_f, support_axioms_check, thick_lattice
from .strata import (
    gamma_orthogonality_table,
    gamma_table,
    local_global_and_stratified_check,
    thomason_roundtrip,
)


def class_frame_laws(S, exhaustive_up_to: int = 4, samples: int = 4096, seed: int = 0) -> list:
    """Meet/join laws and infinite distributivity of tensor_class/coproduct_class."""
    space = S.space if isinstance(S, Scenario) else S
    classes = [BousfieldClassRepr(V) for V in space.subsets()]
    top, bottom = BousfieldClassRepr(space.all), BousfieldClassRepr(frozenset())
    bad = None
    for A in classes:
        if tensor_class(A, A) != A or coproduct_class([A, A]) != A:
            bad = ("idempotent", A.label)
        if tensor_class(A, top) != A or coproduct_class([A, bottom]) != A:
            bad = ("units", A.label)
        for B in classes:
            if tensor_class(A, B) != tensor_class(B, A):
                bad = ("commutative", A.label, B.label)
            if tensor_class(A, coproduct_class([A, B])) != A:
                bad = ("absorption", A.label, B.label)
            for C in classes:
                if tensor_class(A, tensor_class(B, C)) != tensor_class(tensor_class(A, B), C):
                    bad = ("associative", A.label, B.label, C.label)
    checks = [Check("classes: lattice laws", bad is None, bad)]
    bad = None
    if len(space.labels) <= exhaustive_up_to:
        bad = _exhaustive_distributivity(classes)
    if bad is None:
        # fully direct evaluation on a seeded sample of families
        rng = random.Random(seed)
        for _ in range(samples if len(classes) > 1 else 1):
            fam = [A for A in classes if rng.random() < 0.5]
            joined = coproduct_class(fam)
            for A in classes:
                if tensor_class(A, joined) != coproduct_class(tensor_class(A, F) for F in fam):
                    bad = (A.label, [F.label for F in fam])
                    break
            if bad:
                break
    checks.append(Check("classes: infinite distributivity", bad is None, bad))
    return checks


def _exhaustive_distributivity(classes: list):
    """a ∧ ⋁F = ⋁(a ∧ f) for every family F, by depth-first search over families.

    Binary results of tensor_class/coproduct_class are tabulated once; the
    join of each whole family is still taken with coproduct_class directly.
    """
    n = len(classes)
    index = {A: i for i, A in enumerate(classes)}
    meet = [[index[tensor_class(A, B)] for B in classes] for A in classes]
    join = [[index[coproduct_class([A, B])] for B in classes] for A in classes]
    bottom = index[coproduct_class([])]
    stack = [(0, (), (bottom,) * n)]
    while stack:
        k, fam, rhs = stack.pop()
        if k == n:
            joined = index[coproduct_class([classes[i] for i in fam])]
            for a in range(n):
                if meet[a][joined] != rhs[a]:
                    return (classes[a].label, [classes[i].label for i in fam])
            continue
        stack.append((k + 1, fam, rhs))
        stack.append((k + 1, fam + (k,), tuple(join[r][meet[a][k]] for a, r in enumerate(rhs))))
    return None


def locality_checks(scenario: Scenario) -> list:
    S = scenario.space
    objs = scenario.objects
    checks = []
    for p in S.labels:
        name = f"E_{p}"
        if name in scenario.names:
            E = scenario[name]
            expected = p in S.primes.minimal()
            label = f"{name} is E-local" if expected else f"{name} not E-local"
            checks.append(Check(label, is_local(E, E) == expected, sorted(E.cosupp)))
    bad = [X.name for X in objs if X.compact and X.cosupp is not None and not is_local(X, X)]
    checks.append(Check("compact objects are self-local", not bad, bad))
    if S.maximal() and any(X.compact and X.supp == X.cosupp == {p} for X in objs for p in S.maximal()):
        bad = []
        for X in objs:
            w = dichotomy_check(scenario, X)
            if w.local != (w.prime in X.supp) or (not X.is_zero and w.local == w.acyclic):
                bad.append(X.name)
        checks.append(Check("Koszul dichotomy", not bad, bad))
    if all(X.cosupp is not None for X in objs):
        bad = [sorted(U) for U in S.subsets() if not perp_check(scenario, U)]
        checks.append(Check("perp: orthogonal of U-supported = cosupported off U", not bad, bad))
    bad = [X.name for X in objs if tensor_class(bousfield_class(X), bousfield_class(X)) != bousfield_class(X)]
    checks.append(Check("every object is Bousfield idempotent", not bad, bad))
    bad = [
        X.name for X in objs if X.compact and X.cosupp is not None and not X.cosupp <= X.supp
    ]
    checks.append(Check("compact: cosupp within supp", not bad, bad))
    return checks


def spectrum_checks(scenario: Scenario) -> list:
    S = scenario.space
    B = bousfield_lattice(S)
    T = thick_lattice(S)
    checks = [
        Check(
            "Bousfield lattice is the powerset of the primes",
            find_lattice_isomorphism(B, powerset_lattice(S.labels)) is not None,
        ),
    ]
    XB = spectrum(B)
    checks.append(Check("Bousfield spectrum is discrete", len(XB.open_masks) == 1 << len(XB)))
    checks.append(Check("thick lattice is coherent", all(coherence_report(T).conditions)))
    checks.append(
        Check(
            "thick lattice is the opens of the dual",
            find_lattice_isomorphism(T, open_lattice(S.dual)) is not None,
        )
    )
    f = f_map(S)
    checks.append(Check("f is injective", f.is_injective()))
    bal = balmer_primes(S)
    checks.append(Check("Balmer primes are the frame primes", bal.matches_frame_primes, bal.as_dict()["primes"]))
    checks.append(Check("Balmer primes are tensor primes", bal.tensor_prime))
    checks.append(Check("p ↦ P_p is a homeomorphism from the dual", bal.homeomorphism))
    g = sp_f(scenario)
    checks.append(Check("Sp(f) is bijective", g.bijective, g.map.mapping))
    checks.append(Check("Sp(f) pulls back compact supports", g.pullback_exact))
    checks.append(Check("Sp(f) target homeomorphic to dual", g.target_homeomorphic_to_dual))
    checks.append(Check("Sp(f) is the identity on primes", g.intertwines_identity))
    checks.append(
        Check(
            "Zariski and dual are Hochster dual",
            hochster_dual(S.zariski) == S.dual and hochster_dual(S.dual) == S.zariski,
        )
    )
    return checks


def gamma_checks(scenario: Scenario) -> list:
    table = gamma_table(scenario)
    bad = sorted(k for k, v in table.items() if not v)
    checks = [Check("Γ_P via opens equals gamma", not bad, bad)]
    orth = gamma_orthogonality_table(scenario)
    bad = sorted(k for k, v in orth.items() if not v)
    checks.append(Check("Γ orthogonality table", not bad, bad))
    return checks


def verify_scenario(scenario: Scenario) -> Report:
    report = Report("model verify")
    with timed(report):
        report.extend(spectrum_checks(scenario))
        report.extend(class_frame_laws(scenario))
        report.extend(support_axioms_check(scenario))
        report.extend(locality_checks(scenario))
        report.extend(gamma_checks(scenario))
        report.extend(local_global_and_stratified_check(scenario))
        report.add("Thomason classification round trip", thomason_roundtrip(scenario))
    return report

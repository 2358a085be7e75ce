"""Bousfield and thick-class frames, their spectra, and support theories."""
from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from ..errors import AxiomViolated, FramekitError, NotCompact
from ..frame import (
    DualityBijection,
    Frame,
    FrameMorphism,
    coherence_report,
    morphism_problem,
    primes as frame_primes,
    sp_morphism,
    spectrum,
    to_frame,
)
from ..lattice import FiniteLattice, find_lattice_isomorphism, powerset_lattice
from ..poset import Poset, subset_label
from ..report import Check
from ..topology import (
    ContinuousMap,
    FiniteSpace,
    continuous_maps,
    find_homeomorphism,
    is_homeomorphism,
    open_lattice,
)
from .model import ModelObject, Scenario, SupportSpace, ThickClassRepr, coproduct, tensor


def _space(S) -> SupportSpace:
    return S.space if isinstance(S, Scenario) else S


# -- the two frames --------------------------------------------------------------

@lru_cache(maxsize=64)
def _bousfield(S: SupportSpace) -> Frame:
    return to_frame(powerset_lattice(sorted(S.labels)))


def bousfield_lattice(S) -> Frame:
    """All subsets of the primes; every class is idempotent so this is the whole story."""
    return _bousfield(_space(S))


@lru_cache(maxsize=64)
def _thick(S: SupportSpace) -> Frame:
    ups = S.up_sets()
    labels = [subset_label(V) for V in ups]
    up = [sum(1 << j for j, W in enumerate(ups) if V <= W) for V in ups]
    F = to_frame(FiniteLattice(Poset(labels, up, check=False)))
    report = coherence_report(F)
    if not all(report.conditions):
        raise FramekitError(f"thick-class frame is not coherent: {report.as_dict()}")
    if find_lattice_isomorphism(F, open_lattice(S.dual)) is None:
        raise FramekitError("thick-class frame differs from the opens of the dual space")
    return F


def thick_lattice(S) -> Frame:
    """Specialization-closed subsets under inclusion; checked coherent on construction."""
    return _thick(_space(S))


def f_map(S) -> FrameMorphism:
    """Inclusion of thick classes into Bousfield classes."""
    S = _space(S)
    T, B = thick_lattice(S), bousfield_lattice(S)
    return FrameMorphism(T, B, {a: a for a in T.elements})


# -- points -------------------------------------------------------------------------

def balmer_point(S, p: str) -> str:
    """Label of the largest thick class avoiding ``p``."""
    S = _space(S)
    return subset_label(S.all - S.down([p]))


def bousfield_point(S, p: str) -> str:
    S = _space(S)
    return subset_label(S.all - {p})


def _members(label: str) -> frozenset:
    inner = label[1:-1]
    return frozenset(inner.split(",")) if inner else frozenset()


def _point_prime(S: SupportSpace, label: str, kind: str) -> str:
    point = balmer_point if kind == "thick" else bousfield_point
    for p in S.labels:
        if point(S, p) == label:
            return p
    raise FramekitError(f"{label!r} is not a {kind} point")


def thick_point_to_prime(S, label: str) -> str:
    return _point_prime(_space(S), label, "thick")


def bousfield_point_to_prime(S, label: str) -> str:
    return _point_prime(_space(S), label, "bousfield")


@dataclass(frozen=True)
class SpF:
    map: ContinuousMap
    bijective: bool
    pullback_exact: bool
    source_discrete: bool
    target_homeomorphic_to_dual: bool
    intertwines_identity: bool

    @property
    def ok(self) -> bool:
        return (
            self.bijective
            and self.pullback_exact
            and self.source_discrete
            and self.target_homeomorphic_to_dual
            and self.intertwines_identity
        )


def sp_f(S) -> SpF:
    """Sp(f) from the Bousfield spectrum to the thick spectrum, with its checks."""
    space = _space(S)
    g = sp_morphism(f_map(space))
    src, tgt = g.source, g.target
    pullback = True
    if isinstance(S, Scenario):
        for X in S.objects:
            if X.compact and g.preimage(supp_Tc(S, X)) != supp_T(S, X):
                pullback = False
    discrete = len(src.open_masks) == 1 << len(src)
    # both spectra are indexed by primes; Sp(f) must be the identity on them
    intertwines = all(
        g(bousfield_point(space, p)) == balmer_point(space, p) for p in space.labels
    )
    return SpF(
        map=g,
        bijective=g.is_bijective(),
        pullback_exact=pullback,
        source_discrete=discrete,
        target_homeomorphic_to_dual=find_homeomorphism(space.dual, tgt) is not None,
        intertwines_identity=intertwines,
    )


@dataclass(frozen=True)
class BalmerReport:
    classes: dict  # prime -> ThickClassRepr
    matches_frame_primes: bool
    tensor_prime: bool
    homeomorphism: bool

    @property
    def ok(self) -> bool:
        return self.matches_frame_primes and self.tensor_prime and self.homeomorphism

    def as_dict(self) -> dict:
        return {
            "primes": {p: sorted(P.members) for p, P in sorted(self.classes.items())},
            "matches_frame_primes": self.matches_frame_primes,
            "tensor_prime": self.tensor_prime,
            "homeomorphism": self.homeomorphism,
        }


def balmer_primes(S) -> BalmerReport:
    """P_p = primes minus the down-closure of p, compared with the computed frame primes."""
    S = _space(S)
    T = thick_lattice(S)
    classes = {p: ThickClassRepr(S.all - S.down([p])) for p in S.labels}
    labels = {P.label for P in classes.values()}
    matches = labels == set(frame_primes(T)) and len(labels) == len(classes)
    ups = S.up_sets()
    tensor_prime = all(
        not (C & D <= P.members) or C <= P.members or D <= P.members
        for P in classes.values()
        for C in ups
        for D in ups
    ) and all(P.members != S.all for P in classes.values())
    X = spectrum(T)
    mapping = {p: P.label for p, P in classes.items()}
    homeo = matches and is_homeomorphism(S.dual, X, mapping)
    return BalmerReport(classes, matches, tensor_prime, homeo)


# -- supports -----------------------------------------------------------------------

def supp_T(S, X: ModelObject) -> frozenset:
    """Bousfield-spectrum points P with A(X) ≰ P."""
    B = bousfield_lattice(S)
    a = subset_label(X.supp)
    return frozenset(P for P in spectrum(B).points if not B.le(a, P))


def supp_Tc(S, X: ModelObject) -> frozenset:
    """Thick-spectrum points P not containing the thick class generated by X."""
    if not X.compact:
        raise NotCompact(f"{X.name!r} is not compact")
    T = thick_lattice(S)
    a = subset_label(X.supp)
    return frozenset(P for P in spectrum(T).points if not T.le(a, P))


def as_primes(S, points) -> frozenset:
    """Translate Bousfield-spectrum points back to primes."""
    return frozenset(bousfield_point_to_prime(S, P) for P in points)


def _families(objects, limit: int = 10, samples: int = 256, seed: int = 0):
    n = len(objects)
    if n <= limit:
        for r in range(n + 1):
            yield from combinations(objects, r)
        return
    rng = random.Random(seed)
    yield ()
    for _ in range(samples):
        yield tuple(X for X in objects if rng.random() < 0.5)


def support_axioms_check(scenario: Scenario) -> list:
    S = scenario.space
    every = frozenset(spectrum(bousfield_lattice(S)).points)
    objs = scenario.objects
    checks = [
        Check("support: supp_T(0) empty", not supp_T(S, scenario.zero), None),
        Check("support: supp_T(1) everything", supp_T(S, scenario.unit) == every, None),
    ]
    bad = None
    for fam in _families(objs):
        union = frozenset().union(*(supp_T(S, X) for X in fam))
        if supp_T(S, coproduct(fam)) != union:
            bad = [X.name for X in fam]
            break
    checks.append(Check("support: coproducts give unions", bad is None, bad))
    # no shift functor in the model; suspension acts as the identity
    checks.append(Check("support: suspension invariance", True, "identity"))
    bad = None
    for a, b, c in scenario.triangles:
        if not supp_T(S, scenario[a]) <= supp_T(S, scenario[b]) | supp_T(S, scenario[c]):
            bad = [a, b, c]
            break
    checks.append(Check("support: declared triangles subadditive", bad is None, bad))
    bad = None
    for X in objs:
        for Y in objs:
            if supp_T(S, tensor(X, Y)) != supp_T(S, X) & supp_T(S, Y):
                bad = [X.name, Y.name]
                break
        if bad:
            break
    checks.append(Check("support: tensor gives intersection", bad is None, bad))
    return checks


# -- universality -------------------------------------------------------------------

def _sigma_masks(U: FiniteSpace, scenario: Scenario, sigma: dict) -> dict:
    out = {}
    for X in scenario.objects:
        if X.name not in sigma:
            raise AxiomViolated("domain", f"sigma is undefined on {X.name!r}")
        m = U.mask(sigma[X.name])
        if m not in U.open_masks:
            raise AxiomViolated("domain", f"sigma({X.name}) is not open")
        out[X.name] = m
    return out


def _check_sigma_axioms(U: FiniteSpace, scenario: Scenario, sm: dict) -> None:
    objs = scenario.objects
    by_supp = {}
    for X in objs:
        prev = by_supp.setdefault(X.supp, X)
        if sm[prev.name] != sm[X.name]:
            raise AxiomViolated(3, f"{prev.name} and {X.name} share a class but not sigma")
    if sm["1"] != U.full_mask:
        raise AxiomViolated(1, "sigma(1) must be the whole space")
    for X in objs:
        for Y in objs:
            Z = by_supp.get(X.supp & Y.supp)
            if Z is not None and sm[Z.name] != sm[X.name] & sm[Y.name]:
                raise AxiomViolated(1, f"sigma({X.name}⊗{Y.name}) is not the intersection")
    for fam in _families(objs):
        supp = frozenset().union(*(X.supp for X in fam))
        Z = by_supp.get(supp)
        if Z is None:
            continue
        m = 0
        for X in fam:
            m |= sm[X.name]
        if sm[Z.name] != m:
            raise AxiomViolated(2, f"sigma of the coproduct of {[X.name for X in fam]}")


def universal_support_candidates(scenario: Scenario, U: FiniteSpace, sigma: dict) -> list:
    """Every continuous U -> Sp(T) pulling supp_T back to sigma on declared objects."""
    target = spectrum(bousfield_lattice(scenario))
    sm = _sigma_masks(U, scenario, sigma)
    supports = {X.name: supp_T(scenario, X) for X in scenario.objects}
    return [
        g
        for g in continuous_maps(U, target)
        if all(U.mask(g.preimage(supports[n])) == m for n, m in sm.items())
    ]


def universal_support(scenario: Scenario, U: FiniteSpace, sigma: dict) -> ContinuousMap:
    """The unique map U -> Sp(T) with sigma(X) = f^-1(supp_T X), after checking the axioms."""
    S = scenario.space
    sm = _sigma_masks(U, scenario, sigma)
    _check_sigma_axioms(U, scenario, sm)
    B = bousfield_lattice(S)
    gens = {p: next(X for X in scenario.objects if X.supp == {p}) for p in S.labels}
    O = open_lattice(U)
    h = {}
    for a in B.elements:
        m = 0
        for p in _members(a):
            m |= sm[gens[p].name]
        h[a] = subset_label(U.subset(m))
    for X in scenario.objects:
        if h[subset_label(X.supp)] != subset_label(U.subset(sm[X.name])):
            raise AxiomViolated(2, f"sigma({X.name}) is not the union over its generators")
    problem = morphism_problem(B, O, h)
    if problem:
        which = 2 if "join" in problem else 1
        raise AxiomViolated(which, problem)
    f = DualityBijection(U, B).to_continuous_map(h)
    found = universal_support_candidates(scenario, U, sigma)
    if found != [f]:
        raise FramekitError(f"expected a unique realising map, found {len(found)}")
    return f

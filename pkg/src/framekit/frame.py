"""Frames, prime elements, the Stone spectrum and frame morphisms."""
from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import product
from typing import Iterable

from ._bits import bits
from .errors import FramekitError, NotAFrame, NotAFrameMorphism, NotContinuous, NotPrime
from .lattice import (
    FiniteLattice,
    compacts_form_sublattice_with_top,
    compact_elements,
    distributivity_violation,
    find_lattice_isomorphism,
    ideal_completion,
    is_compactly_generated,
    is_distributive,
    subset_frame_law_violation,
)
from .poset import subposet, subset_label
from .topology import ContinuousMap, FiniteSpace, is_spectral, open_label

SUBSET_SAMPLE_LIMIT = 1 << 12


class Frame(FiniteLattice):
    """A finite lattice whose frame law has been checked."""

    verified = True


def _subset_sample(n: int, seed: int = 0):
    if (1 << n) <= SUBSET_SAMPLE_LIMIT:
        return range(1 << n)
    rng = random.Random(seed)
    return [rng.getrandbits(n) for _ in range(SUBSET_SAMPLE_LIMIT)]


def frame_violation(L: FiniteLattice):
    """Witness against the frame law, or None.

    Binary distributivity is scanned exhaustively; the subset form is checked
    on every subset up to 2**12 of them and on a seeded sample beyond.
    """
    bad = distributivity_violation(L)
    if bad is not None:
        return bad
    return subset_frame_law_violation(L, _subset_sample(len(L)))


def to_frame(L: FiniteLattice) -> Frame:
    if isinstance(L, Frame):
        return L
    bad = frame_violation(L)
    if bad is not None:
        raise NotAFrame(bad)
    return Frame._adopt(L)


def is_frame(L: FiniteLattice) -> bool:
    return frame_violation(L) is None


# -- primes and the Stone topology ---------------------------------------------------

@dataclass(frozen=True)
class PrimeSet:
    of: FiniteLattice
    primes: frozenset

    def __iter__(self):
        return iter(sorted(self.primes))

    def __len__(self):
        return len(self.primes)

    def __contains__(self, p):
        return p in self.primes


def _prime_mask(L: FiniteLattice) -> int:
    cached = L.__dict__.get("_prime_cache")
    if cached is not None:
        return cached
    P = L.poset
    n = len(L)
    mask = 0
    for p in range(n):
        if p == L._top:
            continue
        below = P.down[p]
        ok = True
        for a in range(n):
            if below >> a & 1:
                continue
            for b in range(n):
                if below >> L._mt[a][b] & 1 and not below >> b & 1:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            mask |= 1 << p
    L.__dict__["_prime_cache"] = mask
    return mask


def primes(F: FiniteLattice) -> PrimeSet:
    """Elements p ≠ 1 with a∧b ≤ p implying a ≤ p or b ≤ p."""
    return PrimeSet(F, F.poset.subset(_prime_mask(F)))


def is_prime(F: FiniteLattice, p: str) -> bool:
    return bool(_prime_mask(F) >> F.poset.index(p) & 1)


def _stone_open_mask(F: FiniteLattice, a: int) -> int:
    """U(a) as a mask over lattice indices."""
    return _prime_mask(F) & ~F.poset.up[a]


def stone_open(F: FiniteLattice, a: str) -> frozenset:
    """U(a): primes p with a ≰ p."""
    return F.poset.subset(_stone_open_mask(F, F.poset.index(a)))


def spectrum(F: FiniteLattice) -> FiniteSpace:
    """Primes of ``F`` with the Stone topology; points keep their lattice labels."""
    pm = _prime_mask(F)
    idx = list(bits(pm))
    pos = {i: k for k, i in enumerate(idx)}
    opens = set()
    for a in range(len(F)):
        u = 0
        for i in bits(_stone_open_mask(F, a)):
            u |= 1 << pos[i]
        opens.add(u)
    # validation asserts the U(a) family is closed under ∪ and ∩
    return FiniteSpace([F.elements[i] for i in idx], opens, check=True)


def has_enough_points(F: FiniteLattice) -> bool:
    seen = set()
    for a in range(len(F)):
        u = _stone_open_mask(F, a)
        if u in seen:
            return False
        seen.add(u)
    return True


# -- morphisms --------------------------------------------------------------------

@dataclass(frozen=True)
class FrameMorphism:
    source: FiniteLattice
    target: FiniteLattice
    mapping: dict

    def __post_init__(self):
        problem = morphism_problem(self.source, self.target, self.mapping)
        if problem:
            raise NotAFrameMorphism(problem)

    def __call__(self, a):
        return self.mapping[a]

    def is_injective(self) -> bool:
        return len(set(self.mapping.values())) == len(self.mapping)

    def is_isomorphism(self) -> bool:
        return self.is_injective() and set(self.mapping.values()) == set(self.target.elements)

    def __hash__(self):
        return hash(tuple(sorted(self.mapping.items())))

    def __eq__(self, other):
        if not isinstance(other, FrameMorphism):
            return NotImplemented
        return (
            self.source == other.source
            and self.target == other.target
            and self.mapping == other.mapping
        )


def morphism_problem(S: FiniteLattice, T: FiniteLattice, f: dict) -> str:
    """Empty string when ``f`` preserves finite meets and all joins."""
    if set(f) != set(S.elements):
        return "map must be defined on every source element"
    if not set(f.values()) <= set(T.elements):
        return "map leaves the target"
    if f[S.top] != T.top:
        return "top not preserved"
    if f[S.bottom] != T.bottom:
        return "bottom (empty join) not preserved"
    E = S.elements
    for a in E:
        for b in E:
            if f[S.wedge(a, b)] != T.wedge(f[a], f[b]):
                return f"meet of {a!r},{b!r} not preserved"
            if f[S.vee(a, b)] != T.vee(f[a], f[b]):
                return f"join of {a!r},{b!r} not preserved"
    if len(S) <= 12:
        for m in range(1 << len(S)):
            A = S.poset.subset(m)
            if f[S.join(A)] != T.join(f[a] for a in A):
                return f"join of {sorted(A)!r} not preserved"
    return ""


def identity_morphism(F: FiniteLattice) -> FrameMorphism:
    return FrameMorphism(F, F, {a: a for a in F.elements})


def compose(g: FrameMorphism, f: FrameMorphism) -> FrameMorphism:
    """g ∘ f."""
    return FrameMorphism(f.source, g.target, {a: g.mapping[f.mapping[a]] for a in f.source.elements})


def frame_morphisms(S: FiniteLattice, T: FiniteLattice) -> list:
    """Every frame morphism S -> T, by exhaustive enumeration of monotone maps."""
    E = S.elements
    fixed = {S.bottom: T.bottom, S.top: T.top}
    free = [a for a in E if a not in fixed]
    out = []
    for values in product(T.elements, repeat=len(free)):
        f = dict(fixed)
        f.update(zip(free, values))
        if any(S.le(a, b) and not T.le(f[a], f[b]) for a in E for b in E):
            continue
        if not morphism_problem(S, T, f):
            out.append(FrameMorphism(S, T, f))
    return out


def adjunction_unit(F: FiniteLattice) -> FrameMorphism:
    """a ↦ U(a), into the open-set frame of the spectrum."""
    from .topology import open_lattice

    X = spectrum(F)
    O = open_lattice(X)
    mapping = {a: subset_label(stone_open(F, a)) for a in F.elements}
    return FrameMorphism(F, O, mapping)


def sp_morphism(f: FrameMorphism) -> ContinuousMap:
    """Sp(f): Sp(target) -> Sp(source), p ↦ ⋁{a : f(a) ≤ p}."""
    S, T = f.source, f.target
    XS, XT = spectrum(S), spectrum(T)
    mapping = {}
    for p in XT.points:
        q = S.join(a for a in S.elements if T.le(f.mapping[a], p))
        if not is_prime(S, q):
            raise NotPrime(f"{p!r} maps to non-prime {q!r}")
        mapping[p] = q
    g = ContinuousMap(XT, XS, mapping)
    for a in S.elements:
        if stone_open(T, f.mapping[a]) != g.preimage(stone_open(S, a)):
            raise FramekitError(f"U(f(a)) differs from Sp(f)^-1 U(a) at a={a!r}")
    return g


# -- the adjunction bijection --------------------------------------------------------

@dataclass(frozen=True)
class DualityBijection:
    """Converters between continuous maps X -> Sp(F) and frame morphisms F -> O(X)."""

    space: FiniteSpace
    frame: FiniteLattice

    @property
    def spectrum(self) -> FiniteSpace:
        return spectrum(self.frame)

    @property
    def opens(self):
        from .topology import open_lattice

        return open_lattice(self.space)

    def to_frame_morphism(self, g) -> FrameMorphism:
        mapping = g.mapping if isinstance(g, ContinuousMap) else dict(g)
        X, F = self.space, self.frame
        ContinuousMap(X, self.spectrum, mapping)  # raises NotContinuous
        out = {}
        for a in F.elements:
            U = stone_open(F, a)
            out[a] = subset_label(x for x in X.points if mapping[x] in U)
        return FrameMorphism(F, self.opens, out)

    def to_continuous_map(self, h) -> ContinuousMap:
        mapping = h.mapping if isinstance(h, FrameMorphism) else dict(h)
        X, F = self.space, self.frame
        O = self.opens
        problem = morphism_problem(F, O, mapping)
        if problem:
            raise NotAFrameMorphism(problem)
        members = {open_label(X, u): X.subset(u) for u in X.open_masks}
        out = {}
        for x in X.points:
            p = F.join(a for a in F.elements if x not in members[mapping[a]])
            if not is_prime(F, p):
                raise NotPrime(f"point {x!r} lands on non-prime {p!r}")
            out[x] = p
        return ContinuousMap(X, self.spectrum, out)


def duality_bijection(X: FiniteSpace, F: FiniteLattice) -> DualityBijection:
    return DualityBijection(X, F)


# -- coherence --------------------------------------------------------------------

@dataclass(frozen=True)
class CoherenceReport:
    coherent_frame: bool
    spatial_spectral: bool
    ideal_completion_of_distributive: bool
    compact_distributive: bool

    @property
    def conditions(self) -> tuple:
        return (
            self.coherent_frame,
            self.spatial_spectral,
            self.ideal_completion_of_distributive,
            self.compact_distributive,
        )

    @property
    def agree(self) -> bool:
        return len(set(self.conditions)) == 1

    def as_dict(self) -> dict:
        return {
            "coherent_frame": self.coherent_frame,
            "frame_enough_points_spectral": self.spatial_spectral,
            "ideal_completion_of_distributive_lattice": self.ideal_completion_of_distributive,
            "compactly_generated_distributive_compact_sublattice": self.compact_distributive,
            "agree": self.agree,
        }


def is_coherent(F: FiniteLattice) -> bool:
    """Frame, compactly generated, compact elements a sublattice containing 1."""
    return is_frame(F) and is_compactly_generated(F) and compacts_form_sublattice_with_top(F)


def _is_ideal_completion_of_distributive(L: FiniteLattice) -> bool:
    try:
        base = FiniteLattice(subposet(L.poset, compact_elements(L)))
    except FramekitError:
        return False
    if not is_distributive(base):
        return False
    return find_lattice_isomorphism(ideal_completion(base), L) is not None


def coherence_report(L: FiniteLattice) -> CoherenceReport:
    """Evaluate the four equivalent characterisations of coherent frames separately."""
    frame = is_frame(L)
    return CoherenceReport(
        coherent_frame=is_coherent(L),
        spatial_spectral=frame and has_enough_points(L) and is_spectral(spectrum(L)),
        ideal_completion_of_distributive=_is_ideal_completion_of_distributive(L),
        compact_distributive=is_compactly_generated(L)
        and is_distributive(L)
        and compacts_form_sublattice_with_top(L),
    )

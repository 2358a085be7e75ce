"""Support-level model of a stratified tensor triangulated category.

Objects are recorded only through their support and (optional) cosupport,
subsets of a finite poset of primes ordered by inclusion. Bousfield classes
are arbitrary subsets, thick classes of compacts are up-closed subsets.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from ..errors import (
    FramekitError,
    InvalidObject,
    MissingCosupport,
    NoMaximalKoszul,
    NoTopElement,
    NotMaximal,
)
from ..poset import Poset, antichain, chain, poset_from_pairs, subset_label
from ..topology import FiniteSpace, alexandrov, hochster_dual

PRESETS = ("generators", "koszul-max", "injective-hulls", "kinj")


@dataclass(frozen=True)
class SupportSpace:
    """The support of the unit, with its Zariski and Hochster-dual topologies."""

    primes: Poset
    zariski: FiniteSpace = field(init=False, repr=False, compare=False)
    dual: FiniteSpace = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        zariski = alexandrov(self.primes, "zariski")
        dual = alexandrov(self.primes, "dual")
        if hochster_dual(zariski) != dual:
            raise FramekitError("Zariski and dual topologies are not Hochster dual")
        object.__setattr__(self, "zariski", zariski)
        object.__setattr__(self, "dual", dual)

    @property
    def labels(self) -> tuple:
        return self.primes.elements

    @property
    def all(self) -> frozenset:
        return frozenset(self.primes.elements)

    def up(self, A: Iterable[str]) -> frozenset:
        P = self.primes
        return P.subset(P.up_mask(P.mask(A)))

    def down(self, A: Iterable[str]) -> frozenset:
        P = self.primes
        return P.subset(P.down_mask(P.mask(A)))

    def is_up_closed(self, A: Iterable[str]) -> bool:
        A = frozenset(A)
        return self.up(A) == A

    def up_sets(self) -> list:
        P = self.primes
        out = [P.subset(m) for m in range(1 << len(P)) if P.up_mask(m) == m]
        return sorted(out, key=lambda s: (len(s), sorted(s)))

    def subsets(self) -> list:
        P = self.primes
        return sorted((P.subset(m) for m in range(1 << len(P))), key=lambda s: (len(s), sorted(s)))

    def maximal(self) -> frozenset:
        return self.primes.maximal()

    def top(self):
        mx = self.maximal()
        if len(mx) == 1:
            (t,) = mx
            return t
        return None


@dataclass(frozen=True)
class ModelObject:
    name: str
    supp: frozenset
    cosupp: frozenset | None = None
    compact: bool = False

    def __post_init__(self):
        object.__setattr__(self, "supp", frozenset(self.supp))
        if self.cosupp is not None:
            object.__setattr__(self, "cosupp", frozenset(self.cosupp))
        if not self.supp:
            # the zero object: cosupport vanishes with support
            if self.cosupp:
                raise InvalidObject(f"{self.name!r}: zero support but non-empty cosupport")
            object.__setattr__(self, "cosupp", frozenset())
        if self.compact:
            if self.cosupp is None:
                raise InvalidObject(f"compact object {self.name!r} needs a cosupport")
            if not self.cosupp <= self.supp:
                raise InvalidObject(f"compact object {self.name!r} has cosupp ⊄ supp")

    @property
    def is_zero(self) -> bool:
        return not self.supp


@dataclass(frozen=True)
class BousfieldClassRepr:
    members: frozenset

    def __post_init__(self):
        object.__setattr__(self, "members", frozenset(self.members))

    @property
    def label(self) -> str:
        return subset_label(self.members)


@dataclass(frozen=True)
class ThickClassRepr:
    members: frozenset

    def __post_init__(self):
        object.__setattr__(self, "members", frozenset(self.members))

    @property
    def label(self) -> str:
        return subset_label(self.members)


def thick_class(S: SupportSpace, members: Iterable[str]) -> ThickClassRepr:
    members = frozenset(members)
    if not S.is_up_closed(members):
        raise InvalidObject(f"thick class {sorted(members)} is not specialization closed")
    return ThickClassRepr(members)


def check_object(S: SupportSpace, X: ModelObject) -> None:
    for part in (X.supp, X.cosupp or frozenset()):
        unknown = part - S.all
        if unknown:
            raise InvalidObject(f"{X.name!r} mentions unknown primes {sorted(unknown)}")
    if X.compact and not S.is_up_closed(X.supp):
        raise InvalidObject(f"compact object {X.name!r} has non-closed support")


# -- named objects ----------------------------------------------------------------

def zero_object() -> ModelObject:
    return ModelObject("0", frozenset(), frozenset(), compact=True)


def unit_object(S: SupportSpace, cosupp: Iterable[str] | None = None) -> ModelObject:
    return ModelObject("1", S.all, S.all if cosupp is None else frozenset(cosupp), compact=True)


def generator_object(S: SupportSpace, p: str) -> ModelObject:
    """Stand-in for the local cohomology of the unit at ``p``."""
    S.primes.index(p)
    return ModelObject(f"g_{p}", {p}, S.down([p]))


def koszul_object(S: SupportSpace, p: str) -> ModelObject:
    if p not in S.maximal():
        raise NotMaximal(f"{p!r} is not a maximal prime")
    return ModelObject(f"k_{p}", {p}, {p}, compact=True)


def injective_hull_object(S: SupportSpace, p: str) -> ModelObject:
    S.primes.index(p)
    return ModelObject(f"E_{p}", {p}, S.down([p]))


def kinj_compact_preset(S: SupportSpace) -> list:
    """One compact per non-empty closed support, each with cosupport the top prime."""
    t = S.top()
    if t is None:
        raise NoTopElement("the prime poset has no unique top element")
    return [
        ModelObject(f"kinj{subset_label(V)}", V, {t}, compact=True)
        for V in S.up_sets()
        if V
    ]


# -- scenarios --------------------------------------------------------------------

@dataclass(frozen=True)
class Scenario:
    space: SupportSpace
    objects: tuple
    presets: tuple = ()
    triangles: tuple = ()
    name: str = "scenario"

    def __post_init__(self):
        object.__setattr__(self, "objects", tuple(self.objects))
        names = [X.name for X in self.objects]
        if len(set(names)) != len(names):
            raise InvalidObject("object names must be unique")
        for X in self.objects:
            check_object(self.space, X)
        for p in self.space.labels:
            if not any(X.supp == {p} for X in self.objects):
                raise InvalidObject(f"scenario lacks a generator supported at {p!r}")
        for tri in self.triangles:
            for n in tri:
                if n not in names:
                    raise InvalidObject(f"triangle mentions unknown object {n!r}")

    def __getitem__(self, name: str) -> ModelObject:
        for X in self.objects:
            if X.name == name:
                return X
        raise KeyError(name)

    @property
    def names(self) -> list:
        return [X.name for X in self.objects]

    @property
    def unit(self) -> ModelObject:
        return self["1"]

    @property
    def zero(self) -> ModelObject:
        return self["0"]


def build_scenario(
    primes: Poset,
    objects: Sequence[ModelObject] = (),
    presets: Sequence[str] = (),
    triangles: Sequence = (),
    name: str = "scenario",
) -> Scenario:
    """Declared objects plus unit, zero, singleton generators and requested presets."""
    S = SupportSpace(primes)
    presets = tuple(dict.fromkeys(["generators", *presets]))
    for pr in presets:
        if pr not in PRESETS:
            raise FramekitError(f"unknown preset {pr!r}; expected one of {PRESETS}")
    unit_cosupp = None
    if "kinj" in presets:
        t = S.top()
        if t is None:
            raise NoTopElement("the kinj preset needs a unique top prime")
        unit_cosupp = {t}
    base = [zero_object(), unit_object(S, unit_cosupp)]
    base += [generator_object(S, p) for p in sorted(S.labels)]
    if "koszul-max" in presets:
        base += [koszul_object(S, p) for p in sorted(S.maximal())]
    if "injective-hulls" in presets:
        base += [injective_hull_object(S, p) for p in sorted(S.labels)]
    if "kinj" in presets:
        base += kinj_compact_preset(S)
    declared = {X.name: X for X in objects}
    merged = [declared.pop(X.name, X) for X in base] + list(declared.values())
    return Scenario(S, tuple(merged), presets, tuple(tuple(t) for t in triangles), name)


def chain_scenario(n: int, presets=("koszul-max", "injective-hulls")) -> Scenario:
    """Primes p0 < p1 < ... like the spectrum of a DVR when n = 2."""
    labels = [f"p{i}" for i in range(n)]
    return build_scenario(chain(labels), presets=presets, name=f"chain({n})")


def diamond_scenario(presets=("koszul-max", "injective-hulls")) -> Scenario:
    """o < x, y < m: a local fragment of Spec k[x,y]."""
    P = poset_from_pairs(["o", "x", "y", "m"], [("o", "x"), ("o", "y"), ("x", "m"), ("y", "m")])
    return build_scenario(P, presets=presets, name="diamond")


def antichain_scenario(labels=("a", "b"), presets=("koszul-max", "injective-hulls")) -> Scenario:
    return build_scenario(antichain(list(labels)), presets=presets, name="antichain")


def scenario_preset(name: str) -> Scenario:
    """``chain(n)``, ``diamond``, ``antichain`` or ``kinj-chain(n)``."""
    if name == "diamond":
        return diamond_scenario()
    if name == "antichain":
        return antichain_scenario()
    if name.startswith("chain(") and name.endswith(")"):
        return chain_scenario(int(name[6:-1]))
    if name.startswith("kinj-chain(") and name.endswith(")"):
        return chain_scenario(int(name[11:-1]), presets=("koszul-max", "injective-hulls", "kinj"))
    raise FramekitError(f"unknown scenario preset {name!r}")


# -- class algebra ----------------------------------------------------------------

def bousfield_class(X: ModelObject) -> BousfieldClassRepr:
    return BousfieldClassRepr(X.supp)


def tensor_class(A: BousfieldClassRepr, B: BousfieldClassRepr) -> BousfieldClassRepr:
    return BousfieldClassRepr(A.members & B.members)


def coproduct_class(classes: Iterable[BousfieldClassRepr]) -> BousfieldClassRepr:
    out = frozenset()
    for A in classes:
        out |= A.members
    return BousfieldClassRepr(out)


def tensor(X: ModelObject, Y: ModelObject) -> ModelObject:
    # cosupport of a tensor product is not determined by the factors
    return ModelObject(f"({X.name}*{Y.name})", X.supp & Y.supp)


def coproduct(objects: Sequence[ModelObject]) -> ModelObject:
    supp = frozenset()
    for X in objects:
        supp |= X.supp
    return ModelObject("(" + "+".join(X.name for X in objects) + ")", supp)


# -- locality -----------------------------------------------------------------------

def is_acyclic(Y: ModelObject, X: ModelObject) -> bool:
    """Y is X-acyclic: X⊗Y vanishes."""
    return not (Y.supp & X.supp)


def _cosupp(Y: ModelObject) -> frozenset:
    if Y.cosupp is None:
        raise MissingCosupport(Y.name)
    return Y.cosupp


def is_local(Y: ModelObject, X: ModelObject) -> bool:
    """Y is X-local: cosupp(Y) ⊆ supp(X)."""
    return _cosupp(Y) <= X.supp


def hom_cosupp(X: ModelObject, Y: ModelObject) -> frozenset:
    """Cosupport of the function object from X to Y; empty exactly when it vanishes."""
    return X.supp & _cosupp(Y)


def perp_sides(scenario: Scenario, U: Iterable[str]) -> tuple:
    """(objects orthogonal to everything supported in U, objects cosupported off U)."""
    U = frozenset(U)
    rest = scenario.space.all - U
    objs = scenario.objects
    left = frozenset(
        Y.name for Y in objs if all(not hom_cosupp(X, Y) for X in objs if X.supp <= U)
    )
    right = frozenset(Y.name for Y in objs if _cosupp(Y) <= rest)
    return left, right


def perp_check(scenario: Scenario, U: Iterable[str]) -> bool:
    left, right = perp_sides(scenario, U)
    return left == right


def gamma(p: str, X: ModelObject) -> ModelObject:
    """Local cohomology at ``p``: support cut down to {p}."""
    return ModelObject(f"gamma_{p}({X.name})", X.supp & {p})


@dataclass(frozen=True)
class DichotomyWitness:
    koszul: ModelObject
    prime: str
    local: bool
    acyclic: bool

    @property
    def branch(self) -> str:
        return "local" if self.local else "acyclic"


def dichotomy_check(scenario: Scenario, X: ModelObject) -> DichotomyWitness:
    """A compact Koszul object at a maximal prime is X-local or X-acyclic."""
    S = scenario.space
    for p in sorted(S.maximal()):
        k = next(
            (
                Y
                for Y in scenario.objects
                if Y.compact and Y.supp == {p} and Y.cosupp == {p}
            ),
            None,
        )
        if k is not None:
            return DichotomyWitness(k, p, is_local(k, X), is_acyclic(k, X))
    raise NoMaximalKoszul("no Koszul object at a maximal prime is declared")

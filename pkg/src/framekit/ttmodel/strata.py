"""Local cohomology at spectrum points, stratification and recollement splittings."""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product as iproduct

from ..errors import FramekitError
from ..frame import spectrum, stone_open
from ..lattice import find_lattice_isomorphism, powerset_lattice, product_label, product_lattice
from ..poset import is_order_isomorphism, subset_label
from ..report import Check
from ..topology import quasi_compact_open_masks
from .model import ModelObject, Scenario, SupportSpace, ThickClassRepr, gamma
from .spectra import _space, bousfield_lattice, thick_lattice, thick_point_to_prime


def _popcount(m: int) -> int:
    return bin(m).count("1")


@dataclass(frozen=True)
class GammaP:
    point: str
    prime: str
    C: ThickClassRepr
    D: ThickClassRepr
    U: frozenset
    V: frozenset
    separates: bool

    def apply_supp(self, supp) -> frozenset:
        return (frozenset(supp) & self.C.members) - self.D.members

    def __call__(self, X: ModelObject) -> ModelObject:
        return ModelObject(f"Gamma[{self.point}]({X.name})", self.apply_supp(X.supp))


def gamma_P_via_opens(S, P: str) -> GammaP:
    """Γ_P built from opens U ⊇ V of the thick spectrum with U∖V = {P}."""
    space = _space(S)
    T = thick_lattice(space)
    X = spectrum(T)
    i = X.index(P)
    masks = sorted(X.open_masks, key=lambda u: (_popcount(u), u))
    pair = next(
        ((u, v) for u in masks for v in masks if v & u == v and u & ~v == 1 << i),
        None,
    )
    if pair is None:
        raise FramekitError(f"no open pair isolates {P!r}")
    u, v = pair
    U, V = X.subset(u), X.subset(v)
    # each open is U(c) for exactly one thick class c because the frame is spatial
    by_open = {stone_open(T, c): c for c in T.elements}
    c, d = by_open[U], by_open[V]
    separates = all(
        ((not T.le(c, Q)) and T.le(d, Q)) == (Q == P) for Q in X.points
    )
    C = ThickClassRepr(_members(c))
    D = ThickClassRepr(_members(d))
    return GammaP(P, thick_point_to_prime(space, P), C, D, U, V, separates)


def _members(label: str) -> frozenset:
    inner = label[1:-1]
    return frozenset(inner.split(",")) if inner else frozenset()


def gamma_table(scenario: Scenario) -> dict:
    """For every point and object: does Γ_P via opens agree with gamma(p, ·)?"""
    X = spectrum(thick_lattice(scenario))
    out = {}
    for P in X.points:
        G = gamma_P_via_opens(scenario, P)
        for Y in scenario.objects:
            out[(P, Y.name)] = G.apply_supp(Y.supp) == gamma(G.prime, Y).supp
    return out


def gamma_orthogonality_table(scenario: Scenario) -> dict:
    """(p, q) ↦ whether Γ_p Γ_q is Γ_p for p = q and zero otherwise, on every object."""
    S = scenario.space
    out = {}
    for p in S.labels:
        for q in S.labels:
            ok = True
            for Y in scenario.objects:
                twice = gamma(p, gamma(q, Y))
                ok &= twice.supp == (gamma(p, Y).supp if p == q else frozenset())
            out[(p, q)] = ok
    return out


def local_global_and_stratified_check(S) -> list:
    space = _space(S)
    objects = S.objects if isinstance(S, Scenario) else ()
    X = spectrum(thick_lattice(space))
    Gs = [gamma_P_via_opens(space, P) for P in X.points]
    bad = next(
        (
            Y.name
            for Y in objects
            if Y.supp != frozenset().union(*(G.apply_supp(Y.supp) for G in Gs))
        ),
        None,
    )
    checks = [Check("local-global principle", bad is None, bad)]
    bad = None
    for G in Gs:
        for V in space.subsets():
            if G.apply_supp(V) not in (frozenset(), frozenset({G.prime})):
                bad = [G.point, sorted(V)]
    checks.append(Check("minimality of each layer", bad is None, bad))

    B = bousfield_lattice(space)
    points = list(X.points)
    prime_of = {G.point: G.prime for G in Gs}
    factors = [powerset_lattice([prime_of[P]]) for P in points]
    prod = product_lattice(factors)
    forward = {
        a: product_label([subset_label(_members(a) & {prime_of[P]}) for P in points])
        for a in B.elements
    }
    inverse = {}
    for t in iproduct(*[F.elements for F in factors]):
        inverse[product_label(t)] = subset_label(frozenset().union(*map(_members, t)))
    mutually_inverse = all(inverse[forward[a]] == a for a in B.elements) and all(
        forward[inverse[t]] == t for t in prod.elements
    )
    iso = mutually_inverse and is_order_isomorphism(B.poset, prod.poset, forward)
    checks.append(Check("Bousfield lattice splits over spectrum points", iso, None))
    checks.append(
        Check(
            "Bousfield lattice is the powerset of the thick spectrum",
            find_lattice_isomorphism(B, powerset_lattice(points)) is not None,
            None,
        )
    )
    return checks


# -- recollement ------------------------------------------------------------------

FACTOR_NAMES = ("A(T/S)", "A(S1/S1∩S2)", "A(S2/S1∩S2)", "A(S1∩S2)")


@dataclass
class RecollementReport:
    grounds: dict
    sizes: dict
    bijection: bool
    isomorphism: bool
    nodes: dict
    edges: list
    diagram_ok: bool
    forward: dict = field(repr=False, default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.bijection and self.isomorphism and self.diagram_ok

    @property
    def product_size(self) -> int:
        n = 1
        for v in self.sizes.values():
            n *= v
        return n

    def as_dict(self) -> dict:
        return {
            "factors": {k: sorted(v) for k, v in self.grounds.items()},
            "sizes": self.sizes,
            "product_size": self.product_size,
            "bijection": self.bijection,
            "isomorphism": self.isomorphism,
            "diagram_ok": self.diagram_ok,
            "nodes": {k: sorted(v) for k, v in self.nodes.items()},
            "edges": [list(e) for e in self.edges],
        }

    def dot(self) -> str:
        lines = ["digraph recollement {", "  rankdir=BT;"]
        for k, v in self.nodes.items():
            lines.append(f'  "{k}" [label="{k}\\n{subset_label(v)}"];')
        for upper, lower in self.edges:
            lines.append(f'  "{lower}" -> "{upper}";')
        lines.append("}")
        return "\n".join(lines) + "\n"


def recollement_decompose(S, U1, U2) -> RecollementReport:
    space = _space(S)
    U1, U2 = frozenset(U1), frozenset(U2)
    unknown = (U1 | U2) - space.all
    if unknown:
        raise FramekitError(f"unknown primes {sorted(unknown)}")
    U = U1 | U2
    grounds = dict(zip(FACTOR_NAMES, (space.all - U, U1 - U2, U2 - U1, U1 & U2)))
    factors = [powerset_lattice(sorted(g)) for g in grounds.values()]
    prod = product_lattice(factors)
    B = bousfield_lattice(space)
    forward = {
        a: product_label([subset_label(_members(a) & g) for g in grounds.values()])
        for a in B.elements
    }
    inverse = {}
    for t in iproduct(*[F.elements for F in factors]):
        inverse[product_label(t)] = subset_label(frozenset().union(*map(_members, t)))
    bijection = (
        len(B) == len(prod)
        and all(inverse[forward[a]] == a for a in B.elements)
        and all(forward[inverse[t]] == t for t in prod.elements)
    )
    iso = bijection and is_order_isomorphism(B.poset, prod.poset, forward)
    nodes = {
        "A(1)": space.all,
        "A(Γ_S 1)": U,
        "A(Γ_S1 1)": U1,
        "A(Γ_S2 1)": U2,
        "A(Γ_{S1∩S2} 1)": U1 & U2,
        "A(0)": frozenset(),
    }
    edges = [
        ("A(1)", "A(Γ_S 1)"),
        ("A(Γ_S 1)", "A(Γ_S1 1)"),
        ("A(Γ_S 1)", "A(Γ_S2 1)"),
        ("A(Γ_S1 1)", "A(Γ_{S1∩S2} 1)"),
        ("A(Γ_S2 1)", "A(Γ_{S1∩S2} 1)"),
        ("A(Γ_{S1∩S2} 1)", "A(0)"),
    ]
    diagram_ok = all(nodes[lo] <= nodes[hi] for hi, lo in edges)
    sizes = {k: len(F) for k, F in zip(FACTOR_NAMES, factors)}
    return RecollementReport(grounds, sizes, bijection, iso, nodes, edges, diagram_ok, forward)


# -- Thomason classification --------------------------------------------------------

@dataclass(frozen=True)
class ThomasonReport:
    classes: int
    family_is_up_sets: bool
    mutually_inverse: bool

    @property
    def ok(self) -> bool:
        return self.family_is_up_sets and self.mutually_inverse


def thomason_report(S) -> ThomasonReport:
    space = _space(S)
    Z = space.zariski
    complements = [Z.full_mask & ~u for u in quasi_compact_open_masks(Z)]
    family = {0}
    for c in complements:
        family |= {m | c for m in family}
    family = {Z.subset(m) for m in family}
    ups = space.up_sets()
    # the universe of compacts: one object per closed support
    universe = [frozenset(V) for V in ups if V]

    def objects_in(Y):
        return frozenset(x for x in universe if x <= Y)

    def union_of(objs):
        return frozenset().union(*objs)

    classes = [objects_in(V) for V in ups]
    inverse = all(objects_in(union_of(C)) == C for C in classes) and all(
        union_of(objects_in(Y)) == Y for Y in family
    )
    return ThomasonReport(len(classes), family == set(ups), inverse)


def thomason_roundtrip(S) -> bool:
    """Thick classes and unions of closed complements of qc opens correspond bijectively."""
    return thomason_report(S).ok

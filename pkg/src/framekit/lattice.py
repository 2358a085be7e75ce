"""Finite lattices: joins and meets, distributivity, compact elements, ideals."""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Sequence

from ._bits import bits, popcount, submasks
from .errors import FramekitError, NotALattice
from .poset import (
    Poset,
    find_order_isomorphism,
    is_order_isomorphism,
    opposite,
    poset_from_pairs,
    subposet,
    subset_label,
)

IDEAL_ENUMERATION_LIMIT = 16


def _least(P: Poset, mask: int):
    """Index of the least element of ``mask`` or None."""
    for k in bits(mask):
        if mask & ~P.up[k] == 0:
            return k
    return None


def _greatest(P: Poset, mask: int):
    for k in bits(mask):
        if mask & ~P.down[k] == 0:
            return k
    return None


class FiniteLattice:
    """A finite poset in which every subset has a join and a meet.

    Binary join/meet tables are built on construction; `join` and `meet`
    fold them over arbitrary subsets.
    """

    def __init__(self, poset: Poset):
        P = poset
        n = len(P)
        if n == 0:
            raise NotALattice((), "empty carrier has no bottom")
        jt = [[0] * n for _ in range(n)]
        mt = [[0] * n for _ in range(n)]
        for i in range(n):
            for k in range(i, n):
                j = _least(P, P.up[i] & P.up[k])
                m = _greatest(P, P.down[i] & P.down[k])
                if j is None or m is None:
                    raise NotALattice((P.elements[i], P.elements[k]))
                jt[i][k] = jt[k][i] = j
                mt[i][k] = mt[k][i] = m
        # pairwise joins in a finite non-empty poset already force bounds
        bottom = _least(P, P.full_mask)
        top = _greatest(P, P.full_mask)
        if bottom is None or top is None:
            raise NotALattice((), "no bottom or top")
        self.poset = P
        self._bot = bottom
        self._top = top
        self._jt = tuple(tuple(r) for r in jt)
        self._mt = tuple(tuple(r) for r in mt)

    @classmethod
    def _adopt(cls, other: "FiniteLattice"):
        obj = cls.__new__(cls)
        obj.__dict__.update(other.__dict__)
        return obj

    # -- carrier -------------------------------------------------------------
    @property
    def elements(self) -> tuple:
        return self.poset.elements

    def __len__(self):
        return len(self.poset)

    def __iter__(self):
        return iter(self.poset.elements)

    def __contains__(self, x):
        return x in self.poset

    def __eq__(self, other):
        if not isinstance(other, FiniteLattice):
            return NotImplemented
        return self.poset == other.poset

    def __hash__(self):
        return hash(self.poset)

    def __repr__(self):
        return f"{type(self).__name__}({list(self.elements)!r})"

    @property
    def bottom(self) -> str:
        return self.poset.elements[self._bot]

    @property
    def top(self) -> str:
        return self.poset.elements[self._top]

    def le(self, a: str, b: str) -> bool:
        return self.poset.le(a, b)

    # -- operations ----------------------------------------------------------
    def vee(self, a: str, b: str) -> str:
        P = self.poset
        return P.elements[self._jt[P.index(a)][P.index(b)]]

    def wedge(self, a: str, b: str) -> str:
        P = self.poset
        return P.elements[self._mt[P.index(a)][P.index(b)]]

    def join_mask(self, mask: int) -> int:
        acc = self._bot
        for i in bits(mask):
            acc = self._jt[acc][i]
        return acc

    def meet_mask(self, mask: int) -> int:
        acc = self._top
        for i in bits(mask):
            acc = self._mt[acc][i]
        return acc

    def join(self, A: Iterable[str]) -> str:
        return self.poset.elements[self.join_mask(self.poset.mask(A))]

    def meet(self, A: Iterable[str]) -> str:
        return self.poset.elements[self.meet_mask(self.poset.mask(A))]


def lattice_from_poset(P: Poset) -> FiniteLattice:
    return FiniteLattice(P)


def lattice_from_pairs(labels: Sequence[str], pairs) -> FiniteLattice:
    return FiniteLattice(poset_from_pairs(labels, pairs))


def meet_via_lower_bounds(L: FiniteLattice, A: Iterable[str]) -> str:
    """Meet computed as the join of all common lower bounds, scanning the order."""
    A = list(A)
    lower = [b for b in L.elements if all(L.le(b, a) for a in A)]
    ubs = [c for c in L.elements if all(L.le(b, c) for b in lower)]
    least = [c for c in ubs if all(L.le(c, d) for d in ubs)]
    return least[0]


# -- distributivity -------------------------------------------------------------

def distributivity_violation(L: FiniteLattice):
    """First triple (a, b, c) with a∧(b∨c) ≠ (a∧b)∨(a∧c), or None."""
    n = len(L)
    jt, mt = L._jt, L._mt
    for a in range(n):
        for b in range(n):
            for c in range(b + 1, n):
                if mt[a][jt[b][c]] != jt[mt[a][b]][mt[a][c]]:
                    E = L.elements
                    return (E[a], E[b], E[c])
    return None


def is_distributive(L: FiniteLattice) -> bool:
    return distributivity_violation(L) is None


def subset_frame_law_violation(L: FiniteLattice, masks: Iterable[int]):
    """Check a∧⋁B = ⋁(a∧b) for each B in ``masks``; return (a, B) on failure."""
    mt, jt, bot = L._mt, L._jt, L._bot
    for B in masks:
        members = list(bits(B))
        jb = L.join_mask(B)
        for a, row in enumerate(mt):
            rhs = bot
            for b in members:
                rhs = jt[rhs][row[b]]
            if row[jb] != rhs:
                return (L.elements[a], sorted(L.poset.subset(B)))
    return None


# -- compactness ----------------------------------------------------------------

def _directed_subsets(L: FiniteLattice):
    """All non-empty directed subsets as (mask, join index).

    A finite non-empty subset is directed exactly when it contains its own join.
    """
    n = len(L)
    if n > 20:
        raise FramekitError("directed-subset enumeration capped at 20 elements")
    joins = [L._bot] * (1 << n)
    out = []
    for D in range(1, 1 << n):
        low = (D & -D).bit_length() - 1
        joins[D] = L._jt[joins[D & (D - 1)]][low]
        if D >> joins[D] & 1:
            out.append((D, joins[D]))
    return out


def _compact_mask(L: FiniteLattice) -> int:
    cached = L.__dict__.get("_compact_cache")
    if cached is not None:
        return cached
    P = L.poset
    directed = _directed_subsets(L)
    mask = 0
    for a in range(len(L)):
        ok = True
        for D, j in directed:
            if P.up[a] >> j & 1 and not D & P.up[a]:
                ok = False
                break
        if ok:
            mask |= 1 << a
    L.__dict__["_compact_cache"] = mask
    return mask


def is_compact_element(L: FiniteLattice, a: str) -> bool:
    """Whether a ≤ ⋁D forces a ≤ d for some d in D, over every directed D."""
    return bool(_compact_mask(L) >> L.poset.index(a) & 1)


def compact_elements(L: FiniteLattice) -> frozenset:
    return L.poset.subset(_compact_mask(L))


def is_compactly_generated(L: FiniteLattice) -> bool:
    P = L.poset
    cm = _compact_mask(L)
    for i in bits(cm):
        for k in bits(cm):
            if not cm >> L._jt[i][k] & 1:
                return False
    return all(L.join_mask(P.down[a] & cm) == a for a in range(len(L)))


def compacts_form_sublattice_with_top(L: FiniteLattice) -> bool:
    cm = _compact_mask(L)
    if not cm >> L._top & 1:
        return False
    return all(
        cm >> L._mt[i][k] & 1 and cm >> L._jt[i][k] & 1 for i in bits(cm) for k in bits(cm)
    )


# -- ideals ---------------------------------------------------------------------

@dataclass(frozen=True)
class Ideal:
    members: frozenset
    of: FiniteLattice = field(compare=False, hash=False, repr=False)

    @property
    def label(self) -> str:
        return subset_label(self.members)


def _is_ideal_mask(L: FiniteLattice, m: int) -> bool:
    if not m:
        return False
    if L.poset.down_mask(m) != m:
        return False
    return all(m >> L._jt[i][k] & 1 for i in bits(m) for k in bits(m) if k > i)


def _ideal_closure(L: FiniteLattice, m: int) -> int:
    """Smallest down-closed, join-closed superset of ``m``."""
    while True:
        grown = L.poset.down_mask(m)
        for i in bits(grown):
            for k in bits(grown):
                grown |= 1 << L._jt[i][k]
        if grown == m:
            return m
        m = grown


def _ideal_masks_by_closure(L: FiniteLattice) -> list:
    """Ganter's NextClosure over the ideal closure operator."""
    n = len(L)
    full = (1 << n) - 1
    A = _ideal_closure(L, 0)
    out = [A]
    while A != full:
        for i in reversed(range(n)):
            if A >> i & 1:
                A &= ~(1 << i)
                continue
            B = _ideal_closure(L, A | 1 << i)
            low = (1 << i) - 1
            if B & low == A & low:
                A = B
                out.append(A)
                break
    return [m for m in out if m]


def ideals(L: FiniteLattice, method: str = "auto") -> list:
    """Every ideal of ``L`` exactly once.

    Small lattices filter all subsets; larger ones enumerate closed sets of
    the ideal closure operator.
    """
    n = len(L)
    if method == "auto":
        method = "filter" if n <= IDEAL_ENUMERATION_LIMIT else "closure"
    if method == "filter":
        if n > IDEAL_ENUMERATION_LIMIT:
            raise FramekitError(f"subset filtering capped at {IDEAL_ENUMERATION_LIMIT} elements")
        found = [m for m in range(1, 1 << n) if _is_ideal_mask(L, m)]
    else:
        found = _ideal_masks_by_closure(L)
    found.sort(key=lambda m: (popcount(m), sorted(L.poset.subset(m))))
    return [Ideal(L.poset.subset(m), L) for m in found]


def principal_ideal(L: FiniteLattice, a: str) -> Ideal:
    return Ideal(L.poset.subset(L.poset.down[L.poset.index(a)]), L)


def ideal_completion(L: FiniteLattice) -> FiniteLattice:
    """Ideals of ``L`` ordered by inclusion; elements are labelled by member sets."""
    ids = ideals(L)
    labels = [I.label for I in ids]
    pairs = [
        (labels[i], labels[k])
        for i, I in enumerate(ids)
        for k, J in enumerate(ids)
        if i != k and I.members <= J.members
    ]
    return FiniteLattice(poset_from_pairs(labels, pairs))


def principal_ideal_map(L: FiniteLattice) -> dict:
    """a ↦ label of I(a) inside ``ideal_completion(L)``."""
    return {a: principal_ideal(L, a).label for a in L.elements}


def le_compact_iso_check(L: FiniteLattice) -> bool:
    """Check a ↦ I(a) ∩ Λ^c is an order isomorphism onto the ideal completion of Λ^c."""
    cm = compact_elements(L)
    try:
        Lc = FiniteLattice(subposet(L.poset, cm))
    except NotALattice:
        return False
    target = ideal_completion(Lc)
    mapping = {}
    for a in L.elements:
        below = frozenset(x for x in cm if L.le(x, a))
        mapping[a] = subset_label(below)
    if not all(v in target for v in mapping.values()):
        return False
    return is_order_isomorphism(L.poset, target.poset, mapping)


# -- constructions --------------------------------------------------------------

def product_label(parts: Sequence[str]) -> str:
    return "(" + ",".join(parts) + ")"


def product_lattice(Ls: Sequence[FiniteLattice]) -> FiniteLattice:
    """Componentwise order on the cartesian product; the empty product is a point."""
    Ls = list(Ls)
    tuples = list(product(*[L.elements for L in Ls]))
    labels = [product_label(t) for t in tuples]
    idx = {t: i for i, t in enumerate(tuples)}
    up = []
    for t in tuples:
        row = 0
        for s in tuples:
            if all(L.le(x, y) for L, x, y in zip(Ls, t, s)):
                row |= 1 << idx[s]
        up.append(row)
    return FiniteLattice(Poset(labels, up, check=False))


def powerset_lattice(ground: Sequence[str]) -> FiniteLattice:
    """Boolean lattice on ``ground``; elements are labelled ``{a,b}``."""
    ground = list(ground)
    n = len(ground)
    labels = [subset_label(ground[i] for i in bits(m)) for m in range(1 << n)]
    up = [sum(1 << s for s in range(1 << n) if s & m == m) for m in range(1 << n)]
    return FiniteLattice(Poset(labels, up, check=False))


def chain_lattice(labels: Sequence[str]) -> FiniteLattice:
    return lattice_from_pairs(labels, zip(labels, labels[1:]))


def opposite_lattice(L: FiniteLattice) -> FiniteLattice:
    return FiniteLattice(opposite(L.poset))


def find_lattice_isomorphism(L: FiniteLattice, M: FiniteLattice) -> dict | None:
    return find_order_isomorphism(L.poset, M.poset)


def m3() -> FiniteLattice:
    return lattice_from_pairs(
        ["0", "a", "b", "c", "1"], [("0", "a"), ("0", "b"), ("0", "c"), ("a", "1"), ("b", "1"), ("c", "1")]
    )


def n5() -> FiniteLattice:
    return lattice_from_pairs(
        ["0", "a", "b", "c", "1"], [("0", "a"), ("a", "b"), ("b", "1"), ("0", "c"), ("c", "1")]
    )


def diamond() -> FiniteLattice:
    return lattice_from_pairs(["0", "a", "b", "1"], [("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")])

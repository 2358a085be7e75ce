"""Finite topological spaces.

Points are labels; open sets are held as bitmasks over the point order and
surfaced as frozensets of labels. Specialization convention: ``p <= q`` when
every open containing ``q`` contains ``p``, so closed sets are up-closed.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import Iterable, Sequence

from ._bits import bits, popcount, submasks
from .errors import InvalidSpace, NotContinuous, NotSpectral, NotT0
from .poset import Poset, subset_label

COVER_ENUMERATION_LIMIT = 12


def _close_family(full: int, masks: Iterable[int]) -> frozenset:
    fam = {0, full}
    fam.update(masks)
    changed = True
    while changed:
        changed = False
        cur = list(fam)
        for a in cur:
            for b in cur:
                for c in (a | b, a & b):
                    if c not in fam:
                        fam.add(c)
                        changed = True
    return frozenset(fam)


class FiniteSpace:
    """Points plus a topology given by its family of open sets."""

    def __init__(self, points: Sequence[str], open_masks: Iterable[int], *, check: bool = True):
        self.points = tuple(points)
        self._index = {x: i for i, x in enumerate(self.points)}
        self.open_masks = frozenset(open_masks)
        if check:
            self._validate()

    def _validate(self):
        if len(self._index) != len(self.points):
            raise InvalidSpace("point labels must be pairwise distinct")
        full = self.full_mask
        if 0 not in self.open_masks or full not in self.open_masks:
            raise InvalidSpace("the empty set and the whole space must be open")
        for u in self.open_masks:
            if u & ~full:
                raise InvalidSpace("open set mentions unknown points")
            for v in self.open_masks:
                if u | v not in self.open_masks or u & v not in self.open_masks:
                    raise InvalidSpace("opens not closed under union and intersection")

    @property
    def full_mask(self) -> int:
        return (1 << len(self.points)) - 1

    def __len__(self):
        return len(self.points)

    def index(self, x: str) -> int:
        from .errors import UnknownLabel

        try:
            return self._index[x]
        except KeyError:
            raise UnknownLabel(x) from None

    def mask(self, labels: Iterable[str]) -> int:
        m = 0
        for x in labels:
            m |= 1 << self.index(x)
        return m

    def subset(self, mask: int) -> frozenset:
        return frozenset(self.points[i] for i in bits(mask))

    @property
    def opens(self) -> frozenset:
        return frozenset(self.subset(u) for u in self.open_masks)

    def is_open(self, labels: Iterable[str]) -> bool:
        return self.mask(labels) in self.open_masks

    def sorted_open_masks(self) -> list:
        return sorted(self.open_masks, key=lambda u: (popcount(u), sorted(self.subset(u))))

    @cached_property
    def closed_masks(self) -> frozenset:
        return frozenset(self.full_mask & ~u for u in self.open_masks)

    @cached_property
    def neighbourhoods(self) -> tuple:
        """Smallest open set containing each point."""
        out = []
        for i in range(len(self.points)):
            m = self.full_mask
            for u in self.open_masks:
                if u >> i & 1:
                    m &= u
            out.append(m)
        return tuple(out)

    def closure_mask(self, mask: int) -> int:
        best = self.full_mask
        for c in self.closed_masks:
            if c & mask == mask:
                best &= c
        return best

    def __eq__(self, other):
        if not isinstance(other, FiniteSpace):
            return NotImplemented
        return set(self.points) == set(other.points) and self.opens == other.opens

    def __hash__(self):
        return hash((frozenset(self.points), self.opens))

    def __repr__(self):
        opens = [sorted(self.subset(u)) for u in self.sorted_open_masks()]
        return f"FiniteSpace({list(self.points)!r}, opens={opens!r})"


def space(points: Sequence[str], opens: Iterable[Iterable[str]]) -> FiniteSpace:
    """Build a space from a complete list of opens (validated, not closed up)."""
    points = tuple(points)
    idx = {x: i for i, x in enumerate(points)}
    masks = []
    for u in opens:
        m = 0
        for x in u:
            if x not in idx:
                raise InvalidSpace(f"open set mentions unknown point {x!r}")
            m |= 1 << idx[x]
        masks.append(m)
    return FiniteSpace(points, masks)


def space_from_opens(points: Sequence[str], generators: Iterable[Iterable[str]]) -> FiniteSpace:
    """Topology generated by ``generators`` (closed under union and intersection)."""
    points = tuple(points)
    idx = {x: i for i, x in enumerate(points)}
    masks = []
    for g in generators:
        m = 0
        for x in g:
            if x not in idx:
                raise InvalidSpace(f"generator mentions unknown point {x!r}")
            m |= 1 << idx[x]
        masks.append(m)
    return FiniteSpace(points, _close_family((1 << len(points)) - 1, masks), check=False)


def alexandrov(P: Poset, side: str = "zariski") -> FiniteSpace:
    """Zariski side: down-closed sets are open. Dual side: up-closed sets are open."""
    if side not in ("zariski", "dual"):
        raise ValueError(f"side must be 'zariski' or 'dual', not {side!r}")
    rows = P.down if side == "zariski" else P.up
    opens = set()
    for m in range(1 << len(P)):
        closure = 0
        for i in bits(m):
            closure |= rows[i]
        if closure == m:
            opens.add(m)
    return FiniteSpace(P.elements, opens, check=False)


def discrete(points: Sequence[str]) -> FiniteSpace:
    return FiniteSpace(points, range(1 << len(points)), check=False)


def indiscrete(points: Sequence[str]) -> FiniteSpace:
    return FiniteSpace(points, {0, (1 << len(points)) - 1}, check=False)


def sierpinski(open_point: str = "x", closed_point: str = "y") -> FiniteSpace:
    return space_from_opens([open_point, closed_point], [[open_point]])


# -- separation and specialization -------------------------------------------------

def t0_violation(X: FiniteSpace):
    nb = X.neighbourhoods
    for i in range(len(X)):
        for k in range(i + 1, len(X)):
            if nb[i] >> k & 1 and nb[k] >> i & 1:
                return (X.points[i], X.points[k])
    return None


def is_T0(X: FiniteSpace) -> bool:
    return t0_violation(X) is None


def specialization_order(X: FiniteSpace) -> Poset:
    """``p <= q`` iff every open containing ``q`` also contains ``p``."""
    bad = t0_violation(X)
    if bad is not None:
        raise NotT0(bad)
    nb = X.neighbourhoods
    up = [0] * len(X)
    for q in range(len(X)):
        for p in bits(nb[q]):
            up[p] |= 1 << q
    return Poset(X.points, up, check=False)


def _is_irreducible(X: FiniteSpace, c: int) -> bool:
    if c == 0:
        return False
    proper = [d for d in X.closed_masks if d & c == d and d != c]
    return not any(a | b == c for a in proper for b in proper)


def is_sober(X: FiniteSpace) -> bool:
    """Every non-empty irreducible closed set has exactly one generic point."""
    for c in X.closed_masks:
        if not _is_irreducible(X, c):
            continue
        generic = [i for i in bits(c) if X.closure_mask(1 << i) == c]
        if len(generic) != 1:
            return False
    return True


# -- quasi-compactness, spectrality, Hochster duality --------------------------------

def _has_finite_subcover(u: int, family: list) -> bool:
    # pick one member per point: a subcover with at most popcount(u) members
    chosen = 0
    for i in bits(u):
        for v in family:
            if v >> i & 1:
                chosen |= v
                break
        else:
            return False
    return chosen == u


def _is_quasi_compact(X: FiniteSpace, u: int) -> bool:
    inside = [v for v in X.open_masks if v & u == v and v]
    if len(inside) > COVER_ENUMERATION_LIMIT:
        # every finite open is quasi-compact; the exhaustive path is capped
        return True
    for sel in range(1 << len(inside)):
        fam = [inside[k] for k in bits(sel)]
        union = 0
        for v in fam:
            union |= v
        if union == u and not _has_finite_subcover(u, fam):
            return False
    return True


def quasi_compact_open_masks(X: FiniteSpace) -> frozenset:
    cached = X.__dict__.get("_qc_cache")
    if cached is None:
        cached = frozenset(u for u in X.open_masks if _is_quasi_compact(X, u))
        X.__dict__["_qc_cache"] = cached
    return cached


def quasi_compact_opens(X: FiniteSpace) -> frozenset:
    return frozenset(X.subset(u) for u in quasi_compact_open_masks(X))


def spectral_report(X: FiniteSpace) -> dict:
    qc = quasi_compact_open_masks(X)
    closed_under_meets = all(a & b in qc for a in qc for b in qc)
    basis = True
    for u in X.open_masks:
        union = 0
        for v in qc:
            if v & u == v:
                union |= v
        if union != u:
            basis = False
            break
    return {
        "T0": is_T0(X),
        "quasi_compact": X.full_mask in qc,
        "qc_opens_closed_under_intersection": closed_under_meets,
        "qc_opens_form_basis": basis,
        "sober": is_sober(X),
    }


def is_spectral(X: FiniteSpace) -> bool:
    return all(spectral_report(X).values())


def hochster_dual(X: FiniteSpace) -> FiniteSpace:
    """Same points; opens generated by complements of quasi-compact opens."""
    if not is_spectral(X):
        raise NotSpectral("Hochster duality needs a spectral space")
    full = X.full_mask
    gens = [full & ~u for u in quasi_compact_open_masks(X)]
    return FiniteSpace(X.points, _close_family(full, gens), check=False)


def open_label(X: FiniteSpace, mask: int) -> str:
    return subset_label(X.subset(mask))


def open_lattice(X: FiniteSpace):
    """The frame of open sets; elements are labelled like ``{x,y}``."""
    from .frame import to_frame
    from .lattice import FiniteLattice

    masks = X.sorted_open_masks()
    labels = [open_label(X, u) for u in masks]
    pos = {u: k for k, u in enumerate(masks)}
    up = [sum(1 << pos[v] for v in masks if v & u == u) for u in masks]
    return to_frame(FiniteLattice(Poset(labels, up, check=False)))


# -- maps ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ContinuousMap:
    source: FiniteSpace
    target: FiniteSpace
    mapping: dict

    def __post_init__(self):
        if set(self.mapping) != set(self.source.points):
            raise NotContinuous("map must be defined on every source point")
        if not set(self.mapping.values()) <= set(self.target.points):
            raise NotContinuous("map leaves the target space")
        if not is_continuous(self.source, self.target, self.mapping):
            raise NotContinuous("preimage of an open set is not open")

    def __call__(self, x):
        return self.mapping[x]

    def preimage(self, labels: Iterable[str]) -> frozenset:
        s = set(labels)
        return frozenset(x for x, y in self.mapping.items() if y in s)

    def is_bijective(self) -> bool:
        return len(set(self.mapping.values())) == len(self.target.points) == len(self.source.points)

    def is_homeomorphism(self) -> bool:
        return is_homeomorphism(self.source, self.target, self.mapping)

    def __hash__(self):
        return hash(tuple(sorted(self.mapping.items())))

    def __eq__(self, other):
        if not isinstance(other, ContinuousMap):
            return NotImplemented
        return (
            self.source == other.source
            and self.target == other.target
            and self.mapping == other.mapping
        )


def is_continuous(X: FiniteSpace, Y: FiniteSpace, mapping: dict) -> bool:
    for v in Y.open_masks:
        pre = 0
        for x, y in mapping.items():
            if Y.mask([y]) & v:
                pre |= 1 << X.index(x)
        if pre not in X.open_masks:
            return False
    return True


def is_homeomorphism(X: FiniteSpace, Y: FiniteSpace, mapping: dict) -> bool:
    if len(X) != len(Y) or set(mapping) != set(X.points):
        return False
    if set(mapping.values()) != set(Y.points):
        return False
    image = {Y.mask(mapping[x] for x in X.subset(u)) for u in X.open_masks}
    return image == set(Y.open_masks)


def continuous_maps(X: FiniteSpace, Y: FiniteSpace) -> list:
    """Every continuous map X -> Y, by exhaustive enumeration."""
    out = []
    for values in product(Y.points, repeat=len(X)):
        mapping = dict(zip(X.points, values))
        if is_continuous(X, Y, mapping):
            out.append(ContinuousMap(X, Y, mapping))
    return out


def find_homeomorphism(X: FiniteSpace, Y: FiniteSpace) -> dict | None:
    """Bijection search pruned by neighbourhood structure, verified on opens."""
    n = len(X)
    if n != len(Y) or len(X.open_masks) != len(Y.open_masks):
        return None
    nx, ny = X.neighbourhoods, Y.neighbourhoods

    def sig(S, nb, i):
        return (popcount(nb[i]), sum(1 for u in S.open_masks if u >> i & 1))

    sx = [sig(X, nx, i) for i in range(n)]
    sy = [sig(Y, ny, j) for j in range(n)]
    if sorted(sx) != sorted(sy):
        return None
    image = [-1] * n
    used = [False] * n

    def extend(i):
        if i == n:
            return True
        for j in range(n):
            if used[j] or sx[i] != sy[j]:
                continue
            if any(
                (nx[i] >> k & 1) != (ny[j] >> image[k] & 1)
                or (nx[k] >> i & 1) != (ny[image[k]] >> j & 1)
                for k in range(i)
            ):
                continue
            image[i] = j
            used[j] = True
            if extend(i + 1):
                return True
            used[j] = False
        image[i] = -1
        return False

    if not extend(0):
        return None
    mapping = {X.points[i]: Y.points[image[i]] for i in range(n)}
    return mapping if is_homeomorphism(X, Y, mapping) else None


def space_canonical_code(X: FiniteSpace) -> tuple:
    """Isomorphism-invariant code of the specialization preorder."""
    n = len(X)
    nb = X.neighbourhoods
    from itertools import permutations

    sig = [(popcount(nb[i]), sum(1 for k in range(n) if nb[k] >> i & 1)) for i in range(n)]
    classes = {}
    for i in range(n):
        classes.setdefault(sig[i], []).append(i)
    keys = sorted(classes)
    best = None

    def rec(ki, prefix):
        nonlocal best
        if ki == len(keys):
            pos = {i: k for k, i in enumerate(prefix)}
            code = tuple(sum(1 << pos[j] for j in bits(nb[i])) for i in prefix)
            if best is None or code < best:
                best = code
            return
        for perm in permutations(classes[keys[ki]]):
            rec(ki + 1, prefix + list(perm))

    rec(0, [])
    return (n, best if best is not None else ())

"""Finite posets stored as dense up-set bitmasks.

Element ``i`` is below element ``j`` exactly when bit ``j`` of ``up[i]`` is set.
Labels are opaque strings; indices never leak into results.
"""
from __future__ import annotations

from itertools import permutations
from typing import Iterable, Sequence

from ._bits import bits, popcount
from .errors import CycleError, FramekitError, UnknownLabel


def subset_label(members: Iterable[str]) -> str:
    """Canonical label for a finite set of labels, e.g. ``{a,b}``."""
    return "{" + ",".join(sorted(members)) + "}"


class Poset:
    """An immutable finite partial order."""

    __slots__ = ("elements", "up", "down", "_index")

    def __init__(self, elements: Sequence[str], up: Sequence[int], *, check: bool = True):
        self.elements = tuple(elements)
        self.up = tuple(up)
        n = len(self.elements)
        down = [0] * n
        for i, m in enumerate(self.up):
            for j in bits(m):
                down[j] |= 1 << i
        self.down = tuple(down)
        self._index = {x: i for i, x in enumerate(self.elements)}
        if check:
            self._validate()

    def _validate(self):
        n = len(self.elements)
        if len(self._index) != n:
            raise FramekitError("poset labels must be pairwise distinct")
        if len(self.up) != n or any(m >> n for m in self.up):
            raise FramekitError("relation does not match the carrier")
        for i in range(n):
            if not self.up[i] >> i & 1:
                raise FramekitError(f"relation not reflexive at {self.elements[i]!r}")
        for i in range(n):
            for j in bits(self.up[i]):
                if j != i and self.up[j] >> i & 1:
                    raise CycleError(self.elements[i], self.elements[j])
                # transitivity: everything above j is above i
                if self.up[j] & ~self.up[i]:
                    raise FramekitError("relation not transitive")

    # -- label/mask plumbing -------------------------------------------------
    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, label):
        return label in self._index

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise UnknownLabel(label) from None

    def mask(self, labels: Iterable[str]) -> int:
        m = 0
        for x in labels:
            m |= 1 << self.index(x)
        return m

    def subset(self, mask: int) -> frozenset:
        return frozenset(self.elements[i] for i in bits(mask))

    @property
    def full_mask(self) -> int:
        return (1 << len(self.elements)) - 1

    # -- order queries -------------------------------------------------------
    def le(self, a: str, b: str) -> bool:
        return bool(self.up[self.index(a)] >> self.index(b) & 1)

    def lt(self, a: str, b: str) -> bool:
        return a != b and self.le(a, b)

    @property
    def leq(self) -> tuple:
        """The relation as a square boolean matrix in element order."""
        n = len(self.elements)
        return tuple(tuple(bool(self.up[i] >> j & 1) for j in range(n)) for i in range(n))

    def relation(self) -> frozenset:
        return frozenset(
            (self.elements[i], self.elements[j]) for i in range(len(self)) for j in bits(self.up[i])
        )

    def up_mask(self, mask: int) -> int:
        out = 0
        for i in bits(mask):
            out |= self.up[i]
        return out

    def down_mask(self, mask: int) -> int:
        out = 0
        for i in bits(mask):
            out |= self.down[i]
        return out

    def minimal(self) -> frozenset:
        return frozenset(x for i, x in enumerate(self.elements) if self.down[i] == 1 << i)

    def maximal(self) -> frozenset:
        return frozenset(x for i, x in enumerate(self.elements) if self.up[i] == 1 << i)

    def __eq__(self, other):
        if not isinstance(other, Poset):
            return NotImplemented
        return set(self.elements) == set(other.elements) and self.relation() == other.relation()

    def __hash__(self):
        return hash((frozenset(self.elements), self.relation()))

    def __repr__(self):
        return f"Poset({list(self.elements)!r}, covers={covers(self)!r})"


def poset_from_pairs(labels: Sequence[str], pairs: Iterable[tuple[str, str]]) -> Poset:
    """Reflexive-transitive closure of ``pairs`` over ``labels``."""
    labels = tuple(labels)
    index = {x: i for i, x in enumerate(labels)}
    if len(index) != len(labels):
        raise FramekitError("poset labels must be pairwise distinct")
    n = len(labels)
    up = [1 << i for i in range(n)]
    for a, b in pairs:
        for x in (a, b):
            if x not in index:
                raise UnknownLabel(x)
        up[index[a]] |= 1 << index[b]
    # Warshall closure on bitmask rows
    for k in range(n):
        bit = 1 << k
        for i in range(n):
            if up[i] & bit:
                up[i] |= up[k]
    for i in range(n):
        for j in bits(up[i]):
            if j != i and up[j] >> i & 1:
                raise CycleError(labels[min(i, j)], labels[max(i, j)])
    return Poset(labels, up, check=False)


def opposite(P: Poset) -> Poset:
    return Poset(P.elements, P.down, check=False)


def up_set(P: Poset, A: Iterable[str]) -> frozenset:
    return P.subset(P.up_mask(P.mask(A)))


def down_set(P: Poset, A: Iterable[str]) -> frozenset:
    return P.subset(P.down_mask(P.mask(A)))


def is_up_closed(P: Poset, A: Iterable[str]) -> bool:
    m = P.mask(A)
    return P.up_mask(m) == m


def is_down_closed(P: Poset, A: Iterable[str]) -> bool:
    m = P.mask(A)
    return P.down_mask(m) == m


def covers(P: Poset) -> list:
    """Transitive reduction: pairs ``a < b`` with nothing strictly between."""
    out = []
    for i, a in enumerate(P.elements):
        strict_up = P.up[i] & ~(1 << i)
        for j in bits(strict_up):
            between = strict_up & P.down[j] & ~(1 << j)
            if not between:
                out.append((a, P.elements[j]))
    return out


def subposet(P: Poset, labels: Iterable[str]) -> Poset:
    """Induced order on ``labels``, kept in ``P``'s element order."""
    keep = P.mask(labels)
    idx = list(bits(keep))
    pos = {i: k for k, i in enumerate(idx)}
    up = []
    for i in idx:
        row = 0
        for j in bits(P.up[i] & keep):
            row |= 1 << pos[j]
        up.append(row)
    return Poset([P.elements[i] for i in idx], up, check=False)


def chain(labels: Sequence[str]) -> Poset:
    return poset_from_pairs(labels, zip(labels, labels[1:]))


def antichain(labels: Sequence[str]) -> Poset:
    return poset_from_pairs(labels, [])


def to_dot(P: Poset, name: str = "P") -> str:
    lines = [f"digraph {name} {{", "  rankdir=BT;"]
    for x in sorted(P.elements):
        lines.append(f'  "{x}";')
    for a, b in sorted(covers(P)):
        lines.append(f'  "{a}" -> "{b}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


# -- isomorphism ---------------------------------------------------------------

def _signature(P: Poset, i: int) -> tuple:
    return (popcount(P.down[i]), popcount(P.up[i]))


def is_order_isomorphism(P: Poset, Q: Poset, mapping: dict) -> bool:
    """Check that ``mapping`` is a bijection P -> Q preserving and reflecting order."""
    if len(P) != len(Q) or set(mapping) != set(P.elements):
        return False
    if set(mapping.values()) != set(Q.elements):
        return False
    return all(
        P.le(a, b) == Q.le(mapping[a], mapping[b]) for a in P.elements for b in P.elements
    )


def find_order_isomorphism(P: Poset, Q: Poset) -> dict | None:
    """Backtracking search for an order isomorphism, pruned by up/down-set sizes."""
    n = len(P)
    if n != len(Q):
        return None
    sig_p = [_signature(P, i) for i in range(n)]
    sig_q = [_signature(Q, j) for j in range(n)]
    if sorted(sig_p) != sorted(sig_q):
        return None
    # most constrained first: rarest signature classes
    counts = {}
    for s in sig_p:
        counts[s] = counts.get(s, 0) + 1
    order = sorted(range(n), key=lambda i: (counts[sig_p[i]], sig_p[i]))
    image = [-1] * n
    used = [False] * n

    def extend(k):
        if k == n:
            return True
        i = order[k]
        for j in range(n):
            if used[j] or sig_q[j] != sig_p[i]:
                continue
            ok = True
            for kk in range(k):
                i2 = order[kk]
                j2 = image[i2]
                if (P.up[i] >> i2 & 1) != (Q.up[j] >> j2 & 1) or (P.up[i2] >> i & 1) != (
                    Q.up[j2] >> j & 1
                ):
                    ok = False
                    break
            if not ok:
                continue
            image[i] = j
            used[j] = True
            if extend(k + 1):
                return True
            used[j] = False
            image[i] = -1
        return False

    if not extend(0):
        return None
    return {P.elements[i]: Q.elements[image[i]] for i in range(n)}


def canonical_code(P: Poset) -> tuple:
    """Isomorphism-invariant code: lexicographically least relation matrix.

    Only permutations compatible with the (down-size, up-size) ordering are
    tried, which keeps the search small at the sizes the corpus uses.
    """
    n = len(P)
    sig = [_signature(P, i) for i in range(n)]
    classes = {}
    for i in range(n):
        classes.setdefault(sig[i], []).append(i)
    keys = sorted(classes)
    best = None

    def rec(ki, prefix):
        nonlocal best
        if ki == len(keys):
            pos = {i: k for k, i in enumerate(prefix)}
            code = tuple(
                sum(1 << pos[j] for j in bits(P.up[i])) for i in prefix
            )
            if best is None or code < best:
                best = code
            return
        for perm in permutations(classes[keys[ki]]):
            rec(ki + 1, prefix + list(perm))

    rec(0, [])
    return (tuple(keys), best if best is not None else ())

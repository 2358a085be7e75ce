"""Exhaustive and random small instances for law testing."""
from __future__ import annotations

import random
from itertools import product
from typing import Iterator

from ._bits import bits
from .errors import FramekitError, TooLarge
from .lattice import FiniteLattice
from .poset import Poset, canonical_code
from .topology import FiniteSpace, space_canonical_code

MAX_ENUMERATE = 7
KINDS = ("posets", "lattices", "spaces")


def _labels(n: int) -> list:
    return [chr(ord("a") + i) for i in range(n)]


def _check_size(n: int) -> None:
    if n < 0:
        raise FramekitError("size must be non-negative")
    if n > MAX_ENUMERATE:
        raise TooLarge(f"enumeration is capped at {MAX_ENUMERATE} elements")


def _poset_codes(n: int) -> list:
    """Up-set rows of one representative per isomorphism class, on indices 0..n-1."""
    if n == 0:
        return [()]
    found = {}
    for rows in _poset_codes(n - 1):
        P = Poset(_labels(n - 1), rows, check=False)
        full = P.full_mask
        # the new element n-1 sits above a down-closed set and below nothing
        for d in range(full + 1):
            if P.down_mask(d) != d:
                continue
            new = [r | (1 << (n - 1)) if d >> i & 1 else r for i, r in enumerate(rows)]
            new.append(1 << (n - 1))
            Q = Poset(_labels(n), new, check=False)
            found.setdefault(canonical_code(Q), tuple(new))
    return [found[k] for k in sorted(found)]


_POSET_CACHE: dict = {}


def posets(n: int) -> list:
    """All posets on exactly ``n`` elements up to isomorphism, in a fixed order."""
    _check_size(n)
    if n not in _POSET_CACHE:
        _POSET_CACHE[n] = _poset_codes(n)
    return [Poset(_labels(n), rows, check=False) for rows in _POSET_CACHE[n]]


def _bounded(P: Poset) -> Poset:
    """Adjoin a new bottom ``0`` and top ``1``."""
    n = len(P)
    full = (1 << (n + 2)) - 1
    up = [full]
    for r in P.up:
        up.append((r << 1) | (1 << (n + 1)))
    up.append(1 << (n + 1))
    return Poset(["0", *P.elements, "1"], up, check=False)


def lattices(n: int) -> list:
    """All lattices on exactly ``n`` elements up to isomorphism."""
    _check_size(n)
    if n == 0:
        return []
    if n == 1:
        return [FiniteLattice(Poset(["0"], [1], check=False))]
    out = []
    for P in posets(n - 2):
        try:
            out.append(FiniteLattice(_bounded(P)))
        except FramekitError:
            pass
    return out


def _compositions(k: int, n: int) -> Iterator[tuple]:
    if k == 0:
        if n == 0:
            yield ()
        return
    for first in range(1, n - k + 2):
        for rest in _compositions(k - 1, n - first):
            yield (first, *rest)


def _blown_up(P: Poset, sizes: tuple) -> FiniteSpace:
    """Alexandrov space of the preorder with block i of ``sizes[i]`` equivalent points."""
    blocks, start = [], 0
    for s in sizes:
        blocks.append(((1 << s) - 1) << start)
        start += s
    opens = set()
    for m in range(1 << len(P)):
        if P.down_mask(m) != m:
            continue
        u = 0
        for i in bits(m):
            u |= blocks[i]
        opens.add(u)
    return FiniteSpace([f"x{i}" for i in range(start)], opens, check=False)


def spaces(n: int, t0: bool = False) -> list:
    """All topologies on exactly ``n`` points up to homeomorphism."""
    _check_size(n)
    if t0:
        from .topology import alexandrov

        return [alexandrov(_relabel_points(P), "zariski") for P in posets(n)]
    found = {}
    for k in range(0 if n == 0 else 1, n + 1):
        for P in posets(k):
            for sizes in _compositions(k, n):
                X = _blown_up(P, sizes)
                found.setdefault(space_canonical_code(X), X)
    return [found[c] for c in sorted(found)]


def _relabel_points(P: Poset) -> Poset:
    return Poset([f"x{i}" for i in range(len(P))], P.up, check=False)


def enumerate_kind(kind: str, n: int, *, t0: bool = False, up_to: bool = False) -> list:
    if kind not in KINDS:
        raise FramekitError(f"kind must be one of {KINDS}")
    sizes = range(n + 1) if up_to else [n]
    out = []
    for k in sizes:
        if kind == "posets":
            out += posets(k)
        elif kind == "lattices":
            out += lattices(k)
        else:
            out += spaces(k, t0=t0)
    return out


def lattice_corpus(max_n: int = 6) -> list:
    return [L for n in range(1, max_n + 1) for L in lattices(n)]


def random_lattice(rng: random.Random, max_size: int = 10, ground: int = 4) -> FiniteLattice:
    """Random closure system (intersection-closed family containing the full set)."""
    full = (1 << ground) - 1
    while True:
        family = {full}
        for _ in range(rng.randint(0, 2 * ground)):
            s = rng.randint(0, full)
            family |= {s & t for t in family} | {s}
        if len(family) <= max_size:
            break
    masks = sorted(family, key=lambda m: (bin(m).count("1"), m))
    pos = {m: i for i, m in enumerate(masks)}
    up = [sum(1 << pos[t] for t in masks if s & t == s) for s in masks]
    return FiniteLattice(Poset([f"e{i}" for i in range(len(masks))], up, check=False))


def random_lattices(count: int, seed: int = 0, max_size: int = 10) -> list:
    rng = random.Random(seed)
    return [random_lattice(rng, max_size) for _ in range(count)]

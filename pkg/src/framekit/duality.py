"""Distributive lattices with 0 and 1 versus spectral spaces."""
from __future__ import annotations

from dataclasses import dataclass, field

from .errors import NotDistributive, NotSpectral
from .frame import spectrum, to_frame
from .lattice import (
    FiniteLattice,
    distributivity_violation,
    ideal_completion,
    opposite_lattice,
)
from .poset import Poset, is_order_isomorphism, find_order_isomorphism
from .topology import (
    FiniteSpace,
    find_homeomorphism,
    hochster_dual,
    is_homeomorphism,
    is_spectral,
    open_label,
    quasi_compact_open_masks,
)


def lattice_to_space(D: FiniteLattice) -> FiniteSpace:
    """Spectrum of the ideal completion of a distributive lattice."""
    bad = distributivity_violation(D)
    if bad is not None:
        raise NotDistributive(bad)
    X = spectrum(to_frame(ideal_completion(D)))
    if not is_spectral(X):
        raise NotSpectral("spectrum of a coherent frame came out non-spectral")
    return X


def space_to_lattice(X: FiniteSpace) -> FiniteLattice:
    """Quasi-compact opens ordered by inclusion."""
    if not is_spectral(X):
        raise NotSpectral("space is not spectral")
    qc = sorted(quasi_compact_open_masks(X), key=lambda u: (bin(u).count("1"), open_label(X, u)))
    labels = [open_label(X, u) for u in qc]
    pos = {u: k for k, u in enumerate(qc)}
    up = [sum(1 << pos[v] for v in qc if v & u == u) for u in qc]
    return FiniteLattice(Poset(labels, up, check=False))


@dataclass(frozen=True)
class RoundtripReport:
    kind: str  # "lattice" or "space"
    ok: bool
    witness: dict | None = None
    revalidated: bool = False
    detail: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {
            "kind": self.kind,
            "ok": self.ok,
            "witness": self.witness,
            "revalidated": self.revalidated,
        }


def lattice_roundtrip(D: FiniteLattice) -> RoundtripReport:
    back = space_to_lattice(lattice_to_space(D))
    iso = find_order_isomorphism(D.poset, back.poset)
    revalidated = iso is not None and is_order_isomorphism(D.poset, back.poset, iso)
    return RoundtripReport("lattice", revalidated, iso, revalidated)


def space_roundtrip(X: FiniteSpace) -> RoundtripReport:
    back = lattice_to_space(space_to_lattice(X))
    homeo = find_homeomorphism(X, back)
    revalidated = homeo is not None and is_homeomorphism(X, back, homeo)
    return RoundtripReport("space", revalidated, homeo, revalidated)


def stone_roundtrip_check(obj) -> RoundtripReport:
    """Round-trip a distributive lattice or a spectral space through the other side."""
    if isinstance(obj, FiniteLattice):
        return lattice_roundtrip(obj)
    if isinstance(obj, FiniteSpace):
        return space_roundtrip(obj)
    raise TypeError(f"expected FiniteLattice or FiniteSpace, got {type(obj).__name__}")


def hochster_vs_opposite(D: FiniteLattice) -> bool:
    """The opposite lattice corresponds to the Hochster dual space."""
    left = lattice_to_space(opposite_lattice(D))
    right = hochster_dual(lattice_to_space(D))
    return find_homeomorphism(left, right) is not None

"""JSON and DOT formats with canonical ordering, so output reloads to an equal value."""
from __future__ import annotations

import json
from pathlib import Path

from .errors import FramekitError, ParseError
from .lattice import FiniteLattice
from .poset import Poset, covers, poset_from_pairs, to_dot
from .topology import FiniteSpace, alexandrov, space, specialization_order


def _need(d, key, kind):
    if not isinstance(d, dict) or key not in d:
        raise ParseError(f"{kind} JSON needs a {key!r} field")
    return d[key]


def _str_list(xs, what) -> list:
    if not isinstance(xs, list) or not all(isinstance(x, str) for x in xs):
        raise ParseError(f"{what} must be a list of strings")
    return xs


# -- posets and lattices ----------------------------------------------------------

def poset_from_json(d) -> Poset:
    elements = _str_list(_need(d, "elements", "poset"), "elements")
    unknown = sorted(set(d) - {"elements", "le", "name"})
    if unknown:
        raise ParseError(f"unknown poset keys {unknown}; expected elements and le")
    pairs = d.get("le", [])
    if not isinstance(pairs, list) or not all(
        isinstance(p, list) and len(p) == 2 and all(isinstance(x, str) for x in p) for p in pairs
    ):
        raise ParseError("le must be a list of [lower, upper] pairs")
    return poset_from_pairs(elements, [tuple(p) for p in pairs])


def poset_to_json(P: Poset) -> dict:
    return {"elements": sorted(P.elements), "le": [list(c) for c in sorted(covers(P))]}


def lattice_from_json(d) -> FiniteLattice:
    if isinstance(d, dict) and "poset" in d and "elements" not in d:
        d = d["poset"]
    return FiniteLattice(poset_from_json(d))


def lattice_to_json(L: FiniteLattice) -> dict:
    return poset_to_json(L.poset)


# -- spaces -------------------------------------------------------------------------

def space_from_json(d) -> FiniteSpace:
    if isinstance(d, dict) and "poset" in d:
        side = d.get("side", "zariski")
        if side not in ("zariski", "dual"):
            raise ParseError("side must be 'zariski' or 'dual'")
        return alexandrov(poset_from_json(d["poset"]), side)
    points = _str_list(_need(d, "points", "space"), "points")
    opens = _need(d, "opens", "space")
    if not isinstance(opens, list):
        raise ParseError("opens must be a list of lists")
    return space(points, [_str_list(u, "each open") for u in opens])


def canonical_opens(X: FiniteSpace) -> list:
    sets = [sorted(X.subset(u)) for u in X.open_masks]
    return sorted(sets, key=lambda s: (len(s), s))


def space_to_json(X: FiniteSpace) -> dict:
    return {"points": sorted(X.points), "opens": canonical_opens(X)}


def space_to_dot(X: FiniteSpace, name: str = "X") -> str:
    """Hasse diagram of the specialization order (T0 spaces only)."""
    return to_dot(specialization_order(X), name)


# -- scenarios ---------------------------------------------------------------------

def scenario_from_json(d):
    from .ttmodel import ModelObject, build_scenario

    primes = poset_from_json(_need(d, "poset", "scenario"))
    objects = []
    for o in d.get("objects", []):
        name = _need(o, "name", "object")
        cosupp = o.get("cosupp")
        objects.append(
            ModelObject(
                str(name),
                frozenset(_str_list(o.get("supp", []), "supp")),
                None if cosupp is None else frozenset(_str_list(cosupp, "cosupp")),
                bool(o.get("compact", False)),
            )
        )
    presets = _str_list(d.get("presets", []), "presets")
    triangles = d.get("triangles", [])
    if not all(isinstance(t, list) and len(t) == 3 for t in triangles):
        raise ParseError("triangles must be lists of three object names")
    return build_scenario(primes, objects, presets, triangles, d.get("name", "scenario"))


def object_to_json(X) -> dict:
    out = {"name": X.name, "supp": sorted(X.supp), "compact": X.compact}
    if X.cosupp is not None:
        out["cosupp"] = sorted(X.cosupp)
    return out


def scenario_to_json(sc) -> dict:
    return {
        "name": sc.name,
        "poset": poset_to_json(sc.space.primes),
        "presets": list(sc.presets),
        "objects": [object_to_json(X) for X in sc.objects],
        "triangles": [list(t) for t in sc.triangles],
    }


# -- files --------------------------------------------------------------------------

def read_json(path) -> object:
    try:
        return json.loads(Path(path).read_text())
    except (OSError, UnicodeDecodeError) as e:
        raise ParseError(f"cannot read {path}: {e}") from e
    except json.JSONDecodeError as e:
        raise ParseError(f"{path}: malformed JSON: {e}") from e


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def write_text(path, text: str) -> None:
    Path(path).write_text(text)


def detect_kind(d) -> str:
    if not isinstance(d, dict):
        raise ParseError("top-level JSON value must be an object")
    if "objects" in d or "presets" in d:
        return "scenario"
    if "points" in d or "side" in d:
        return "space"
    if "elements" in d or "poset" in d:
        return "lattice"
    raise ParseError("cannot tell whether the input is a lattice, space or scenario")


def load(path, kind: str | None = None):
    """Load a lattice, space or scenario file, raising ParseError on any bad input."""
    d = read_json(path)
    kind = kind or detect_kind(d)
    loaders = {
        "poset": poset_from_json,
        "lattice": lattice_from_json,
        "space": space_from_json,
        "scenario": scenario_from_json,
    }
    try:
        return loaders[kind](d)
    except ParseError:
        raise
    except FramekitError as e:
        raise ParseError(str(e)) from e
    except (TypeError, KeyError, AttributeError) as e:
        raise ParseError(f"malformed {kind} JSON: {e}") from e


def to_json(obj) -> dict:
    from .ttmodel import Scenario

    if isinstance(obj, FiniteLattice):
        return lattice_to_json(obj)
    if isinstance(obj, FiniteSpace):
        return space_to_json(obj)
    if isinstance(obj, Poset):
        return poset_to_json(obj)
    if isinstance(obj, Scenario):
        return scenario_to_json(obj)
    raise TypeError(f"no JSON form for {type(obj).__name__}")

"""JSON documents for posets, functions, linear maps, systems and decompositions.

All writers emit sorted keys and canonical (index-ordered) lists, so equal
values serialize to identical bytes.
"""

from __future__ import annotations

import json
from typing import Any, Dict, Optional

from .algebra import IncidenceFunction, delta
from .automorphisms import AutDecomposition, MultiplicativeSystem
from .coalgebra import CoalgebraEndomap
from .derivations import AdditiveSystem, DerDecomposition
from .duality import AlgebraEndomap
from .errors import IncoalgError, PosetError
from .poset import Poset, PosetAutomorphism, build_poset
from .scalars import FieldSpec


class FormatError(IncoalgError):
    """A JSON document does not follow the expected schema."""


def dumps(doc: Any) -> str:
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def _require(doc, key, kind):
    if not isinstance(doc, dict) or key not in doc:
        raise FormatError(f"missing key {key!r}")
    value = doc[key]
    if not isinstance(value, kind):
        raise FormatError(f"key {key!r} has the wrong type")
    return value


def poset_to_doc(P: Poset) -> Dict[str, Any]:
    return {
        "elements": [str(x) for x in P.elements],
        "covers": [[str(x), str(y)] for x, y in P.covers()],
    }


def poset_from_doc(doc) -> Poset:
    elements = _require(doc, "elements", list)
    covers = _require(doc, "covers", list)
    if not all(isinstance(x, str) for x in elements):
        raise FormatError("element names must be strings")
    pairs = []
    for c in covers:
        if not (isinstance(c, list) and len(c) == 2):
            raise FormatError(f"malformed cover {c!r}")
        pairs.append((c[0], c[1]))
    return build_poset(elements, pairs)


def _entries_to_list(f: IncidenceFunction):
    return [[str(x), str(y), str(v)] for (x, y), v in f]


def _entries_from_list(rows, P: Poset, field: FieldSpec):
    out = {}
    for row in rows:
        if not (isinstance(row, list) and len(row) == 3):
            raise FormatError(f"malformed entry {row!r}")
        x, y, s = row
        if x not in P or y not in P:
            raise PosetError(f"unknown element in entry {row!r}")
        if (x, y) in out:
            raise FormatError(f"duplicate entry for ({x}, {y})")
        out[(x, y)] = field.parse(s)
    return out


def function_to_doc(f: IncidenceFunction) -> Dict[str, Any]:
    return {
        "poset": poset_to_doc(f.poset),
        "field": str(f.field),
        "entries": _entries_to_list(f),
    }


def function_from_doc(doc, poset: Optional[Poset] = None,
                      field: Optional[FieldSpec] = None) -> IncidenceFunction:
    """Read a function document; a named (string) poset must be passed in as ``poset``."""
    pdoc = doc.get("poset") if isinstance(doc, dict) else None
    if isinstance(pdoc, dict):
        P = poset_from_doc(pdoc)
        if poset is not None and P != poset:
            raise FormatError("function document is over a different poset")
    elif poset is not None:
        P = poset
    else:
        raise FormatError("function document names a poset that was not supplied")
    F = FieldSpec.from_string(_require(doc, "field", str))
    if field is not None and F != field:
        raise FormatError(f"function is over {F}, expected {field}")
    return IncidenceFunction(P, F, _entries_from_list(_require(doc, "entries", list), P, F))


def _interval_key(x, y) -> str:
    return f"[{x},{y}]"


def endomap_to_doc(phi: CoalgebraEndomap) -> Dict[str, Any]:
    images = {}
    for iv in phi.poset.intervals:
        images[_interval_key(*iv)] = [
            {"interval": [str(s), str(t)], "coeff": str(c)} for (s, t), c in phi.image(iv)
        ]
    return {"images": images}


def endomap_from_doc(doc, P: Poset, field: FieldSpec) -> CoalgebraEndomap:
    raw = _require(doc, "images", dict)
    lookup = {_interval_key(*iv): iv for iv in P.intervals}
    images = {}
    for key, terms in raw.items():
        if key not in lookup:
            raise FormatError(f"{key} is not an interval of the poset")
        if not isinstance(terms, list):
            raise FormatError(f"image of {key} must be a list")
        img: Dict = {}
        for term in terms:
            iv = _require(term, "interval", list)
            if len(iv) != 2:
                raise FormatError(f"malformed interval {iv!r}")
            s, t = iv
            if s not in P or t not in P or not P.leq(s, t):
                raise FormatError(f"[{s},{t}] is not an interval of the poset")
            c = field.parse(_require(term, "coeff", str))
            img[(s, t)] = img.get((s, t), field.zero) + c
        images[lookup[key]] = img
    missing = [k for k in lookup if k not in raw]
    if missing:
        raise FormatError(f"linear map has no image for {missing[0]}")
    return CoalgebraEndomap(P, field, images)


def algebra_endomap_to_doc(D: AlgebraEndomap) -> Dict[str, Any]:
    return {
        "images": {
            f"({x},{y})": {"entries": _entries_to_list(D.images[(x, y)])}
            for x, y in D.poset.intervals
        }
    }


def algebra_endomap_from_doc(doc, P: Poset, field: FieldSpec) -> AlgebraEndomap:
    raw = _require(doc, "images", dict)
    lookup = {f"({x},{y})": (x, y) for x, y in P.intervals}
    images = {}
    for key, fdoc in raw.items():
        if key not in lookup:
            raise FormatError(f"{key} is not a comparable pair")
        entries = _entries_from_list(_require(fdoc, "entries", list), P, field)
        images[lookup[key]] = IncidenceFunction(P, field, entries)
    return AlgebraEndomap(P, field, images)


def _system_values_to_list(P: Poset, values) -> list:
    return [[str(x), str(y), str(values[(x, y)])] for x, y in P.strict_pairs()]


def _system_values_from_doc(doc, P: Poset, field: FieldSpec) -> Dict:
    rows = _require(doc, "values", list)
    return _entries_from_list(rows, P, field)


def mult_system_to_doc(sys: MultiplicativeSystem) -> Dict[str, Any]:
    return {"values": _system_values_to_list(sys.poset, sys.values)}


def mult_system_from_doc(doc, P: Poset, field: FieldSpec) -> MultiplicativeSystem:
    return MultiplicativeSystem(P, field, _system_values_from_doc(doc, P, field))


def additive_system_to_doc(sys: AdditiveSystem) -> Dict[str, Any]:
    return {"values": _system_values_to_list(sys.poset, sys.values)}


def additive_system_from_doc(doc, P: Poset, field: FieldSpec) -> AdditiveSystem:
    return AdditiveSystem(P, field, _system_values_from_doc(doc, P, field))


def automorphism_to_doc(tau: PosetAutomorphism) -> Dict[str, Any]:
    return {"map": {str(x): str(tau(x)) for x in tau.poset.elements}}


def automorphism_from_doc(doc, P: Poset) -> PosetAutomorphism:
    m = _require(doc, "map", dict)
    return PosetAutomorphism(P, m)


def aut_decomposition_to_doc(dec: AutDecomposition) -> Dict[str, Any]:
    return {
        "inner_unit": function_to_doc(dec.inner_unit),
        "mult_system": mult_system_to_doc(dec.mult_system),
        "order": automorphism_to_doc(dec.order_part),
    }


def aut_decomposition_from_doc(doc, P: Poset, field: FieldSpec) -> AutDecomposition:
    u = function_from_doc(_require(doc, "inner_unit", dict), P, field)
    if u.diagonal() != delta(P, field):
        raise FormatError("inner unit must have an all-ones diagonal")
    return AutDecomposition(
        u,
        mult_system_from_doc(_require(doc, "mult_system", dict), P, field),
        automorphism_from_doc(_require(doc, "order", dict), P),
    )


def der_decomposition_to_doc(dec: DerDecomposition) -> Dict[str, Any]:
    return {
        "inner_part": function_to_doc(dec.inner_part),
        "additive_system": additive_system_to_doc(dec.additive_system),
    }


def der_decomposition_from_doc(doc, P: Poset, field: FieldSpec) -> DerDecomposition:
    g = function_from_doc(_require(doc, "inner_part", dict), P, field)
    if g.diagonal():
        raise FormatError("inner part must vanish on the diagonal")
    return DerDecomposition(
        g,
        additive_system_from_doc(_require(doc, "additive_system", dict), P, field),
    )

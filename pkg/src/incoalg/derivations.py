"""Inner and additive derivations of C and A, and the direct-sum decomposition.

Every derivation of the incidence coalgebra is uniquely ``nu + lam`` with
``nu`` inner, determined by a strictly off-diagonal ``g``, and ``lam``
additive, scaling each interval by an additive system.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Hashable, Mapping, NamedTuple, Tuple

from .algebra import IncidenceFunction, convolve, split_L1_M1
from .coalgebra import CoalgebraEndomap, _accumulate, is_coalgebra_derivation
from .duality import AlgebraEndomap, theta
from .errors import InvalidSystemError, MismatchError, NotADerivationError
from .poset import Interval, Poset
from .scalars import FieldSpec, Scalar


class AdditiveSystem:
    """Scalars ``c[x, y]`` on strict pairs with ``c_xy = c_xz + c_zy``.

    Pairs absent from ``values`` are read as zero; the relation is checked on
    the completed table, so a missing pair is rejected exactly when zero would
    be inconsistent.
    """

    __slots__ = ("poset", "field", "values")

    def __init__(self, poset: Poset, field: FieldSpec, values: Mapping[Interval, object] = ()):
        items = dict(values)
        for pair in items:
            if pair[0] == pair[1] or not poset.leq(*pair):
                raise InvalidSystemError(f"({pair[0]}, {pair[1]}) is not a strict pair")
        full = {p: field(items.get(p, 0)) for p in poset.strict_pairs()}
        for x, y in full:
            for z in poset.between(x, y):
                if z != x and z != y and full[(x, y)] != full[(x, z)] + full[(z, y)]:
                    raise InvalidSystemError(f"c({x},{y}) != c({x},{z}) + c({z},{y})")
        self.poset = poset
        self.field = field
        self.values = full

    @classmethod
    def zero(cls, poset: Poset, field: FieldSpec) -> "AdditiveSystem":
        return cls(poset, field, {})

    @classmethod
    def from_potential(cls, poset: Poset, field: FieldSpec,
                       s: Mapping[Hashable, object]) -> "AdditiveSystem":
        """``c_xy = s(y) - s(x)``; always satisfies the sum rule."""
        return cls(poset, field, {
            (x, y): field(s[y]) - field(s[x]) for x, y in poset.strict_pairs()
        })

    def __getitem__(self, pair: Interval) -> Scalar:
        if pair[0] == pair[1]:
            return self.field.zero
        return self.values[pair]

    def is_zero(self) -> bool:
        return not any(self.values.values())

    def __eq__(self, other) -> bool:
        if not isinstance(other, AdditiveSystem):
            return NotImplemented
        return self.poset == other.poset and self.field == other.field and self.values == other.values

    __hash__ = None

    def __repr__(self) -> str:
        body = ", ".join(f"({x},{y}): {v}" for (x, y), v in self.values.items())
        return f"AdditiveSystem({{{body}}})"


@dataclass(frozen=True)
class DerDecomposition:
    """``d = d_g + add(sys)`` with ``g`` strictly off-diagonal."""

    inner_part: IncidenceFunction
    additive_system: AdditiveSystem


class CoalgebraDerFactors(NamedTuple):
    inner: CoalgebraEndomap
    additive: CoalgebraEndomap
    decomposition: DerDecomposition


def additive_derivation_C(sys: AdditiveSystem) -> CoalgebraEndomap:
    """``[x, y] ↦ c_xy [x, y]`` and ``[x, x] ↦ 0``."""
    P, F = sys.poset, sys.field
    images = {}
    for iv in P.intervals:
        c = sys[iv]
        images[iv] = {iv: c} if c else {}
    return CoalgebraEndomap._raw(P, F, images)


def inner_derivation_C(g: IncidenceFunction) -> CoalgebraEndomap:
    """``[x,y] ↦ Σ_u g(u,y) [x,u] - Σ_v g(x,v) [v,y]``; transfers to ``f ↦ fg - gf``."""
    P, F = g.poset, g.field
    images = {}
    for x, y in P.intervals:
        terms: Dict[Interval, Scalar] = {}
        for u in P.between(x, y):
            c = g.entries.get((u, y))
            if c is not None:
                _accumulate(terms, (x, u), c)
        for v in P.between(x, y):
            c = g.entries.get((x, v))
            if c is not None:
                _accumulate(terms, (v, y), -c)
        images[(x, y)] = terms
    return CoalgebraEndomap._raw(P, F, images)


def inner_algebra_derivation(c: IncidenceFunction) -> AlgebraEndomap:
    """``d_c(a) = ac - ca``."""
    return AlgebraEndomap.from_function(
        c.poset, c.field, lambda a: convolve(a, c) - convolve(c, a)
    )


def additive_algebra_derivation(sys: AdditiveSystem) -> AlgebraEndomap:
    P, F = sys.poset, sys.field
    return AlgebraEndomap._raw(P, F, {
        p: IncidenceFunction(P, F, {p: sys[p]}) for p in P.intervals
    })


def algebra_derivation(P: Poset, field: FieldSpec, kind: str, payload) -> AlgebraEndomap:
    if payload.poset != P or payload.field != field:
        raise MismatchError("payload over a different poset or field")
    if kind == "inner":
        return inner_algebra_derivation(payload)
    if kind == "additive":
        return additive_algebra_derivation(payload)
    raise ValueError(f"unknown derivation kind {kind!r}")


def split_inner_derivation(c: IncidenceFunction) -> Tuple[IncidenceFunction, IncidenceFunction]:
    """Split ``c`` so that ``d_c = d_{c_L} + d_{c_M}`` with ``c_L`` diagonal, ``c_M`` in M1."""
    return split_L1_M1(c)


def compose_algebra_derivation(dec: DerDecomposition) -> AlgebraEndomap:
    return inner_algebra_derivation(dec.inner_part) + additive_algebra_derivation(dec.additive_system)


def compose_coalgebra_derivation(dec: DerDecomposition) -> CoalgebraEndomap:
    return inner_derivation_C(dec.inner_part) + additive_derivation_C(dec.additive_system)


def decompose_algebra_derivation(d: AlgebraEndomap) -> DerDecomposition:
    """Split a derivation of A as ``d_g + additive`` with ``g`` in M1.

    ``g = Σ_x e_x d(e_x)``; then ``d - d_g`` kills every idempotent and scales
    each ``e_xy`` by the additive coefficient ``c_xy``.
    """
    P, F = d.poset, d.field
    report = d.check_leibniz()
    if not report:
        raise NotADerivationError(f"not a derivation: {report.describe()}", report)
    one = F.one
    g = IncidenceFunction._raw(P, F, {})
    for x in P.elements:
        ex = IncidenceFunction._raw(P, F, {(x, x): one})
        g = g + convolve(ex, d.images[(x, x)])
    if g.diagonal():
        raise NotADerivationError("extracted inner part has a nonzero diagonal")
    rest = d - inner_algebra_derivation(g)
    values = {(x, y): rest.images[(x, y)][(x, y)] for x, y in P.strict_pairs()}
    try:
        sys = AdditiveSystem(P, F, values)
    except InvalidSystemError as exc:
        raise NotADerivationError(f"residual part is not additive: {exc}")
    dec = DerDecomposition(g, sys)
    if compose_algebra_derivation(dec) != d:
        raise NotADerivationError("recomposition does not reproduce the input map")
    return dec


def decompose_coalgebra_derivation(d: CoalgebraEndomap) -> CoalgebraDerFactors:
    """Split a coalgebra derivation as ``d = nu + lam``."""
    report = is_coalgebra_derivation(d)
    if not report:
        raise NotADerivationError(f"not a coalgebra derivation: {report.describe()}", report)
    dec = decompose_algebra_derivation(theta(d))
    nu = inner_derivation_C(dec.inner_part)
    lam = additive_derivation_C(dec.additive_system)
    if nu + lam != d:
        raise NotADerivationError("recomposition does not reproduce the input map")
    return CoalgebraDerFactors(nu, lam, dec)

"""Inner, multiplicative and order automorphisms of C and A, and their factorization.

Every automorphism of the incidence coalgebra factors uniquely as
``sigma ∘ lam ∘ nu``: an order automorphism after a multiplicative one after
an inner one determined by a unit ``1 + g`` with ``g`` strictly off-diagonal.
On the algebra side the transferred map factors as ``mu_u ∘ m ∘ eta_tau``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Dict, Hashable, Mapping, NamedTuple

from .algebra import IncidenceFunction, convolve, delta, invert_function
from .coalgebra import (
    CoalgebraEndomap,
    _accumulate,
    compose_endomaps,
    is_coalgebra_automorphism,
)
from .duality import AlgebraEndomap, theta
from .errors import (
    InvalidSystemError,
    MismatchError,
    NotAnAutomorphismError,
    NotInvertibleError,
    PosetError,
)
from .poset import Interval, Poset, PosetAutomorphism
from .scalars import QQ, FieldSpec, Scalar


class MultiplicativeSystem:
    """Nonzero scalars ``c[x, y]`` on strict pairs with ``c_xy = c_xz * c_zy``."""

    __slots__ = ("poset", "field", "values")

    def __init__(self, poset: Poset, field: FieldSpec, values: Mapping[Interval, object]):
        clean: Dict[Interval, Scalar] = {}
        strict = poset.strict_pairs()
        for pair in values:
            if pair[0] == pair[1] or not poset.leq(*pair):
                raise InvalidSystemError(f"({pair[0]}, {pair[1]}) is not a strict pair")
        for pair in strict:
            if pair not in values:
                raise InvalidSystemError(f"missing value for ({pair[0]}, {pair[1]})")
            v = field(values[pair])
            if not v:
                raise InvalidSystemError(f"zero value at ({pair[0]}, {pair[1]})")
            clean[pair] = v
        for x, y in strict:
            for z in poset.between(x, y):
                if z != x and z != y and clean[(x, y)] != clean[(x, z)] * clean[(z, y)]:
                    raise InvalidSystemError(
                        f"c({x},{y}) != c({x},{z}) * c({z},{y})"
                    )
        self.poset = poset
        self.field = field
        self.values = clean

    @classmethod
    def trivial(cls, poset: Poset, field: FieldSpec) -> "MultiplicativeSystem":
        return cls(poset, field, {p: 1 for p in poset.strict_pairs()})

    @classmethod
    def from_potential(cls, poset: Poset, field: FieldSpec,
                       s: Mapping[Hashable, object]) -> "MultiplicativeSystem":
        """``c_xy = s(x)^-1 s(y)`` for nonzero ``s``; always satisfies the product rule."""
        return cls(poset, field, {
            (x, y): field(s[y]) / field(s[x]) for x, y in poset.strict_pairs()
        })

    def __getitem__(self, pair: Interval) -> Scalar:
        if pair[0] == pair[1]:
            return self.field.one
        return self.values[pair]

    def is_trivial(self) -> bool:
        return all(v == 1 for v in self.values.values())

    def __eq__(self, other) -> bool:
        if not isinstance(other, MultiplicativeSystem):
            return NotImplemented
        return self.poset == other.poset and self.field == other.field and self.values == other.values

    __hash__ = None

    def __repr__(self) -> str:
        body = ", ".join(f"({x},{y}): {v}" for (x, y), v in self.values.items())
        return f"MultiplicativeSystem({{{body}}})"


@dataclass(frozen=True, eq=True)
class AutDecomposition:
    """Factors ``(u, sys, tau)`` of ``mu_u ∘ m_sys ∘ eta_tau``; ``u`` has unit diagonal."""

    inner_unit: IncidenceFunction
    mult_system: MultiplicativeSystem
    order_part: PosetAutomorphism


class CoalgebraAutFactors(NamedTuple):
    order: CoalgebraEndomap
    mult: CoalgebraEndomap
    inner: CoalgebraEndomap
    decomposition: AutDecomposition


def mult_automorphism_C(sys: MultiplicativeSystem) -> CoalgebraEndomap:
    """``[x, y] ↦ c_xy [x, y]``, one-point intervals fixed."""
    P, F = sys.poset, sys.field
    return CoalgebraEndomap._raw(P, F, {iv: {iv: sys[iv]} for iv in P.intervals})


def order_automorphism_C(tau: PosetAutomorphism, field: FieldSpec = QQ) -> CoalgebraEndomap:
    """``[x, y] ↦ [tau x, tau y]``."""
    P = tau.poset
    one = field.one
    return CoalgebraEndomap._raw(
        P, field, {(x, y): {(tau(x), tau(y)): one} for x, y in P.intervals}
    )


def inner_alpha(h: IncidenceFunction) -> Callable[[Hashable, Hashable, Hashable, Hashable], Scalar]:
    """Coefficient function ``alpha(x, y, s, t) = h^-1(x, s) * h(t, y)``."""
    hinv = invert_function(h)
    return lambda x, y, s, t: hinv[(x, s)] * h[(t, y)]


def inner_automorphism_C(h: IncidenceFunction, direction: str = "forward") -> CoalgebraEndomap:
    """Coalgebra map whose transfer is conjugation ``f ↦ h^-1 f h``.

    ``forward`` gives ``[x,y] ↦ Σ h^-1(x,s) h(t,y) [s,t]``; ``inverse`` gives
    the two-sided inverse ``[x,y] ↦ Σ h^-1(t,y) h(x,s) [s,t]``.
    """
    if direction not in ("forward", "inverse"):
        raise ValueError(f"unknown direction {direction!r}")
    P, F = h.poset, h.field
    hinv = invert_function(h)
    if direction == "forward":
        left, right = hinv, h
    else:
        left, right = h, hinv
    images: Dict[Interval, Dict[Interval, Scalar]] = {}
    for x, y in P.intervals:
        terms: Dict[Interval, Scalar] = {}
        for s in P.between(x, y):
            a = left.entries.get((x, s))
            if a is None:
                continue
            for t in P.between(s, y):
                b = right.entries.get((t, y))
                if b is not None:
                    _accumulate(terms, (s, t), a * b)
        images[(x, y)] = terms
    return CoalgebraEndomap._raw(P, F, images)


def inner_algebra_automorphism(v: IncidenceFunction) -> AlgebraEndomap:
    """``mu_v(f) = v^-1 f v``."""
    vinv = invert_function(v)
    return AlgebraEndomap.from_function(v.poset, v.field, lambda f: convolve(convolve(vinv, f), v))


def mult_algebra_automorphism(sys: MultiplicativeSystem) -> AlgebraEndomap:
    P, F = sys.poset, sys.field
    return AlgebraEndomap._raw(P, F, {
        p: IncidenceFunction._raw(P, F, {p: sys[p]}) for p in P.intervals
    })


def order_algebra_automorphism(tau: PosetAutomorphism, field: FieldSpec) -> AlgebraEndomap:
    """``eta_tau(f)(x, y) = f(tau x, tau y)``, so ``e_st ↦ e_(tau^-1 s, tau^-1 t)``."""
    P = tau.poset
    one = field.one
    back = tau.backward
    return AlgebraEndomap._raw(P, field, {
        (s, t): IncidenceFunction._raw(P, field, {(back[s], back[t]): one})
        for s, t in P.intervals
    })


def algebra_automorphism(P: Poset, field: FieldSpec, kind: str, payload) -> AlgebraEndomap:
    if kind == "inner":
        if payload.poset != P or payload.field != field:
            raise MismatchError("unit over a different poset or field")
        return inner_algebra_automorphism(payload)
    if kind == "mult":
        if payload.poset != P or payload.field != field:
            raise MismatchError("system over a different poset or field")
        return mult_algebra_automorphism(payload)
    if kind == "order":
        if payload.poset != P:
            raise MismatchError("automorphism of a different poset")
        return order_algebra_automorphism(payload, field)
    raise ValueError(f"unknown automorphism kind {kind!r}")


def compose_algebra_parts(dec: AutDecomposition) -> AlgebraEndomap:
    """``mu_u ∘ m ∘ eta_tau``."""
    u = dec.inner_unit
    mu = inner_algebra_automorphism(u)
    m = mult_algebra_automorphism(dec.mult_system)
    eta = order_algebra_automorphism(dec.order_part, u.field)
    return mu.compose(m.compose(eta))


def compose_coalgebra_parts(dec: AutDecomposition) -> CoalgebraEndomap:
    """``sigma ∘ lam ∘ nu`` built from the three factors."""
    F = dec.inner_unit.field
    sigma = order_automorphism_C(dec.order_part, F)
    lam = mult_automorphism_C(dec.mult_system)
    nu = inner_automorphism_C(dec.inner_unit)
    return compose_endomaps(sigma, compose_endomaps(lam, nu))


def decompose_algebra_automorphism(psi: AlgebraEndomap) -> AutDecomposition:
    """Factor an automorphism of A as ``mu_u ∘ m ∘ eta_tau``.

    The order part is read off from where the idempotents go: ``psi(e_x)``
    has a single unit diagonal entry, at ``tau^-1(x)``. Removing it leaves a
    map fixing each ``e_x`` modulo M1; ``u = Σ e_x psi1(e_x)`` is the
    conjugating unit, and what remains scales each ``e_xy``.
    """
    P, F = psi.poset, psi.field
    report = psi.check_multiplicative()
    if not report:
        raise NotAnAutomorphismError(f"not an algebra automorphism: {report.describe()}", report)
    if not psi.is_bijective():
        raise NotAnAutomorphismError("not an algebra automorphism: not bijective")
    one = F.one

    tau_map: Dict[Hashable, Hashable] = {}
    for x in P.elements:
        img = psi.images[(x, x)]
        hits = [y for y in P.elements if img[(y, y)] == one]
        if len(hits) != 1:
            raise NotAnAutomorphismError(f"image of e_{x} has no unique unit diagonal entry")
        tau_map[hits[0]] = x
    try:
        tau = PosetAutomorphism(P, tau_map)
    except PosetError as exc:
        raise NotAnAutomorphismError(f"idempotent permutation is not order-preserving: {exc}")

    psi1 = psi.compose(order_algebra_automorphism(tau.inverse(), F))
    u = IncidenceFunction._raw(P, F, {})
    for x in P.elements:
        ex = IncidenceFunction._raw(P, F, {(x, x): one})
        u = u + convolve(ex, psi1.images[(x, x)])
    if u.diagonal() != delta(P, F):
        raise NotAnAutomorphismError("conjugating unit does not have unit diagonal")
    try:
        uinv = invert_function(u)
    except NotInvertibleError as exc:
        raise NotAnAutomorphismError(str(exc))

    values: Dict[Interval, Scalar] = {}
    for x, y in P.strict_pairs():
        img = convolve(convolve(u, psi1.images[(x, y)]), uinv)
        values[(x, y)] = img[(x, y)]
    try:
        sys = MultiplicativeSystem(P, F, values)
    except InvalidSystemError as exc:
        raise NotAnAutomorphismError(f"residual scaling is not a multiplicative system: {exc}")

    dec = AutDecomposition(u, sys, tau)
    if compose_algebra_parts(dec) != psi:
        raise NotAnAutomorphismError("recomposition does not reproduce the input map")
    return dec


def decompose_coalgebra_automorphism(phi: CoalgebraEndomap) -> CoalgebraAutFactors:
    """Factor a coalgebra automorphism as ``phi = sigma ∘ lam ∘ nu``."""
    report = is_coalgebra_automorphism(phi)
    if not report:
        raise NotAnAutomorphismError(
            f"not a coalgebra automorphism: {report.describe()}", report
        )
    dec = decompose_algebra_automorphism(theta(phi))
    sigma = order_automorphism_C(dec.order_part, phi.field)
    lam = mult_automorphism_C(dec.mult_system)
    nu = inner_automorphism_C(dec.inner_unit)
    if compose_endomaps(sigma, compose_endomaps(lam, nu)) != phi:
        raise NotAnAutomorphismError("recomposition does not reproduce the input map")
    return CoalgebraAutFactors(sigma, lam, nu, dec)

"""Dual pairing between the incidence coalgebra and the incidence algebra.

Functionals on C are always carried as incidence functions: ``f`` stands for
the functional ``[x,y] ↦ f(x,y)``. Under that identification the dual product
of functionals is convolution, and every linear map ``phi`` of C induces the
linear map ``theta(phi)`` of the algebra, ``f ↦ (f evaluated along phi)``.
``theta`` reverses composition: ``theta(phi ∘ psi) = theta(psi) ∘ theta(phi)``.
"""

from __future__ import annotations

from typing import Dict, Mapping

from ._linalg import rank
from .algebra import IncidenceFunction, convolve, delta
from .coalgebra import (
    CheckReport,
    CoalgebraEndomap,
    CoalgebraVector,
    PASS,
    _accumulate,
    _comultiply_terms,
)
from .errors import MismatchError, PosetError
from .poset import Interval, Poset
from .scalars import FieldSpec, Scalar


class AlgebraEndomap:
    """Linear map A -> A tabulated by the image of every matrix unit ``e_xy``."""

    __slots__ = ("poset", "field", "images")

    def __init__(self, poset: Poset, field: FieldSpec, images: Mapping[Interval, IncidenceFunction]):
        clean: Dict[Interval, IncidenceFunction] = {}
        for pair in poset.intervals:
            if pair not in images:
                raise PosetError(f"no image given for e_({pair[0]},{pair[1]})")
            img = images[pair]
            if not isinstance(img, IncidenceFunction):
                img = IncidenceFunction(poset, field, img)
            elif img.poset != poset or img.field != field:
                raise MismatchError("image over a different poset or field")
            clean[pair] = img
        if len(clean) != len(images):
            raise PosetError("images given for pairs that are not comparable")
        self.poset = poset
        self.field = field
        self.images = clean

    @classmethod
    def _raw(cls, poset, field, images) -> "AlgebraEndomap":
        m = cls.__new__(cls)
        m.poset, m.field, m.images = poset, field, images
        return m

    @classmethod
    def identity(cls, poset: Poset, field: FieldSpec) -> "AlgebraEndomap":
        one = field.one
        return cls._raw(poset, field, {
            p: IncidenceFunction._raw(poset, field, {p: one}) for p in poset.intervals
        })

    @classmethod
    def zero(cls, poset: Poset, field: FieldSpec) -> "AlgebraEndomap":
        return cls._raw(poset, field, {
            p: IncidenceFunction._raw(poset, field, {}) for p in poset.intervals
        })

    @classmethod
    def from_function(cls, poset: Poset, field: FieldSpec, fn) -> "AlgebraEndomap":
        """Tabulate a linear callable ``fn`` on the matrix units."""
        one = field.one
        return cls._raw(poset, field, {
            p: fn(IncidenceFunction._raw(poset, field, {p: one})) for p in poset.intervals
        })

    def __call__(self, f: IncidenceFunction) -> IncidenceFunction:
        return apply_algebra_endomap(self, f)

    def _check(self, other) -> None:
        if self.poset != other.poset or self.field != other.field:
            raise MismatchError("endomaps over different posets or fields")

    def compose(self, other: "AlgebraEndomap") -> "AlgebraEndomap":
        """``self ∘ other``: apply ``other`` first."""
        self._check(other)
        return AlgebraEndomap._raw(
            self.poset, self.field, {p: self(img) for p, img in other.images.items()}
        )

    def __add__(self, other: "AlgebraEndomap") -> "AlgebraEndomap":
        self._check(other)
        return AlgebraEndomap._raw(
            self.poset, self.field, {p: self.images[p] + other.images[p] for p in self.images}
        )

    def __sub__(self, other: "AlgebraEndomap") -> "AlgebraEndomap":
        self._check(other)
        return AlgebraEndomap._raw(
            self.poset, self.field, {p: self.images[p] - other.images[p] for p in self.images}
        )

    def __rmul__(self, c) -> "AlgebraEndomap":
        return AlgebraEndomap._raw(
            self.poset, self.field, {p: img.scale(c) for p, img in self.images.items()}
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, AlgebraEndomap):
            return NotImplemented
        return self.poset == other.poset and self.field == other.field and self.images == other.images

    __hash__ = None

    def matrix(self):
        pairs = self.poset.intervals
        pos = {p: i for i, p in enumerate(pairs)}
        zero = self.field.zero
        rows = [[zero] * len(pairs) for _ in pairs]
        for j, p in enumerate(pairs):
            for k, c in self.images[p].entries.items():
                rows[pos[k]][j] = c
        return rows

    def is_bijective(self) -> bool:
        return rank(self.matrix(), self.field) == len(self.poset.intervals)

    def check_multiplicative(self) -> CheckReport:
        """Unit preservation and ``D(e_ab e_cd) = D(e_ab) D(e_cd)`` on all basis pairs."""
        P = self.poset
        if self(delta(P, self.field)) != delta(P, self.field):
            x = P.elements[0]
            return CheckReport(False, "unit", (x, x), "image of the identity is not the identity")
        zero = IncidenceFunction._raw(P, self.field, {})
        for (a, b), ia in self.images.items():
            for (c, d), ic in self.images.items():
                expected = self.images[(a, d)] if b == c else zero
                if convolve(ia, ic) != expected:
                    return CheckReport(
                        False, "multiplicativity", (a, b),
                        f"fails on e_({a},{b}) * e_({c},{d})",
                    )
        return PASS

    def check_leibniz(self) -> CheckReport:
        """``D(e_ab e_cd) = D(e_ab) e_cd + e_ab D(e_cd)`` on all basis pairs."""
        P, F = self.poset, self.field
        one = F.one
        units = {p: IncidenceFunction._raw(P, F, {p: one}) for p in P.intervals}
        zero = IncidenceFunction._raw(P, F, {})
        for (a, b), da in self.images.items():
            for (c, d), dc in self.images.items():
                lhs = self.images[(a, d)] if b == c else zero
                rhs = convolve(da, units[(c, d)]) + convolve(units[(a, b)], dc)
                if lhs != rhs:
                    return CheckReport(
                        False, "Leibniz rule", (a, b), f"fails on e_({a},{b}) * e_({c},{d})"
                    )
        return PASS

    def __repr__(self) -> str:
        return "AlgebraEndomap(" + "; ".join(
            f"e_({p[0]},{p[1]}) ↦ {img!r}" for p, img in self.images.items()
        ) + ")"


def apply_algebra_endomap(D: AlgebraEndomap, f: IncidenceFunction) -> IncidenceFunction:
    if D.poset != f.poset or D.field != f.field:
        raise MismatchError("endomap and function over different posets or fields")
    acc: Dict[Interval, Scalar] = {}
    for pair, c in f.entries.items():
        for k, v in D.images[pair].entries.items():
            _accumulate(acc, k, c * v)
    return IncidenceFunction._raw(f.poset, f.field, acc)


def compose_algebra_endomaps(D1: AlgebraEndomap, D2: AlgebraEndomap) -> AlgebraEndomap:
    return D1.compose(D2)


def psi_eval(f: IncidenceFunction, v: CoalgebraVector) -> Scalar:
    """Evaluate the functional represented by ``f`` on the vector ``v``."""
    if f.poset != v.poset or f.field != v.field:
        raise MismatchError("function and vector over different posets or fields")
    s = f.field.zero
    for iv, c in v.terms.items():
        a = f.entries.get(iv)
        if a is not None:
            s = s + c * a
    return s


def dual_product(f: IncidenceFunction, g: IncidenceFunction) -> IncidenceFunction:
    """Product of functionals: ``(f∘g)(c) = Σ f(a_i) g(b_i)`` where ``Δc = Σ a_i ⊗ b_i``."""
    if f.poset != g.poset or f.field != g.field:
        raise MismatchError("functions over different posets or fields")
    P, F = f.poset, f.field
    out: Dict[Interval, Scalar] = {}
    for iv in P.intervals:
        s = F.zero
        for (a, b), c in _comultiply_terms(P, {iv: F.one}).items():
            s = s + c * f[a] * g[b]
        if s:
            out[iv] = s
    return IncidenceFunction._raw(P, F, out)


def theta(phi: CoalgebraEndomap) -> AlgebraEndomap:
    """Transfer a coalgebra endomap to the algebra.

    ``theta(phi)(f)(x, y)`` is ``f`` evaluated on ``phi([x, y])``; so the
    image of ``e_st`` takes the value ``alpha`` at ``(x, y)`` exactly when
    ``phi([x, y])`` contains ``alpha [s, t]``.
    """
    P, F = phi.poset, phi.field
    cols: Dict[Interval, Dict[Interval, Scalar]] = {p: {} for p in P.intervals}
    for xy, img in phi.images.items():
        for st, alpha in img.items():
            cols[st][xy] = alpha
    return AlgebraEndomap._raw(
        P, F, {st: IncidenceFunction._raw(P, F, col) for st, col in cols.items()}
    )


def theta_preimage(D: AlgebraEndomap) -> CoalgebraEndomap:
    """The unique coalgebra endomap whose transfer is ``D``."""
    P, F = D.poset, D.field
    images: Dict[Interval, Dict[Interval, Scalar]] = {p: {} for p in P.intervals}
    for st, img in D.images.items():
        for xy, alpha in img.entries.items():
            images[xy][st] = alpha
    return CoalgebraEndomap._raw(P, F, images)

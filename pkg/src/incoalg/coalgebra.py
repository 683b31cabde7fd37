"""The incidence coalgebra Co(X, F).

Basis vectors are intervals ``(x, y)`` with ``x <= y``. Comultiplication
splits an interval at every intermediate point and the counit picks out
one-point intervals. Linear self-maps are stored by their basis images.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Dict, Hashable, Iterator, Mapping, Optional, Tuple

from ._linalg import rank
from .errors import MismatchError, PosetError
from .poset import Interval, Poset
from .scalars import FieldSpec, Scalar

Terms = Dict[Interval, Scalar]
TensorKey = Tuple[Interval, Interval]


def _accumulate(acc: dict, key, value) -> None:
    s = acc.get(key)
    s = value if s is None else s + value
    if s:
        acc[key] = s
    else:
        acc.pop(key, None)


def _interval_key(P: Poset):
    idx = P.index
    return lambda p: (idx[p[0]], idx[p[1]])


class CoalgebraVector:
    """Finite linear combination of intervals, zero coefficients dropped."""

    __slots__ = ("poset", "field", "terms")

    def __init__(self, poset: Poset, field: FieldSpec, terms: Mapping[Interval, object] = ()):
        clean: Terms = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for (x, y), c in items:
            if not poset.leq(x, y):
                raise PosetError(f"[{x},{y}] is not an interval")
            _accumulate(clean, (x, y), field(c))
        self.poset = poset
        self.field = field
        self.terms = clean

    @classmethod
    def _raw(cls, poset, field, terms) -> "CoalgebraVector":
        v = cls.__new__(cls)
        v.poset, v.field, v.terms = poset, field, terms
        return v

    @classmethod
    def basis(cls, poset: Poset, field: FieldSpec, x, y) -> "CoalgebraVector":
        return cls(poset, field, {(x, y): 1})

    def __getitem__(self, interval: Interval) -> Scalar:
        c = self.terms.get(interval)
        return self.field.zero if c is None else c

    def __iter__(self) -> Iterator[Tuple[Interval, Scalar]]:
        for k in sorted(self.terms, key=_interval_key(self.poset)):
            yield k, self.terms[k]

    def __bool__(self) -> bool:
        return bool(self.terms)

    def _check(self, other) -> None:
        if self.poset != other.poset or self.field != other.field:
            raise MismatchError("coalgebra vectors over different posets or fields")

    def __add__(self, other: "CoalgebraVector") -> "CoalgebraVector":
        self._check(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            _accumulate(out, k, c)
        return CoalgebraVector._raw(self.poset, self.field, out)

    def __neg__(self) -> "CoalgebraVector":
        return CoalgebraVector._raw(self.poset, self.field, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other: "CoalgebraVector") -> "CoalgebraVector":
        return self + (-other)

    def __rmul__(self, c) -> "CoalgebraVector":
        c = self.field(c)
        if not c:
            return CoalgebraVector._raw(self.poset, self.field, {})
        return CoalgebraVector._raw(self.poset, self.field, {k: c * v for k, v in self.terms.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, CoalgebraVector):
            return NotImplemented
        return self.poset == other.poset and self.field == other.field and self.terms == other.terms

    __hash__ = None

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"{c}[{x},{y}]" for (x, y), c in self)


class TensorVector:
    """Element of C ⊗ C as a sparse map from interval pairs to coefficients."""

    __slots__ = ("poset", "field", "terms")

    def __init__(self, poset: Poset, field: FieldSpec, terms: Mapping[TensorKey, object] = ()):
        clean: Dict[TensorKey, Scalar] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for (a, b), c in items:
            for x, y in (a, b):
                if not poset.leq(x, y):
                    raise PosetError(f"[{x},{y}] is not an interval")
            _accumulate(clean, (tuple(a), tuple(b)), field(c))
        self.poset = poset
        self.field = field
        self.terms = clean

    @classmethod
    def _raw(cls, poset, field, terms) -> "TensorVector":
        t = cls.__new__(cls)
        t.poset, t.field, t.terms = poset, field, terms
        return t

    def __iter__(self):
        key = _interval_key(self.poset)
        for k in sorted(self.terms, key=lambda ab: (key(ab[0]), key(ab[1]))):
            yield k, self.terms[k]

    def __add__(self, other: "TensorVector") -> "TensorVector":
        out = dict(self.terms)
        for k, c in other.terms.items():
            _accumulate(out, k, c)
        return TensorVector._raw(self.poset, self.field, out)

    def __sub__(self, other: "TensorVector") -> "TensorVector":
        out = dict(self.terms)
        for k, c in other.terms.items():
            _accumulate(out, k, -c)
        return TensorVector._raw(self.poset, self.field, out)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TensorVector):
            return NotImplemented
        return self.poset == other.poset and self.field == other.field and self.terms == other.terms

    __hash__ = None

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"{c}[{a[0]},{a[1]}]⊗[{b[0]},{b[1]}]" for (a, b), c in self)


def _comultiply_terms(P: Poset, terms: Mapping[Interval, Scalar]) -> Dict[TensorKey, Scalar]:
    out: Dict[TensorKey, Scalar] = {}
    for (x, y), c in terms.items():
        for z in P.between(x, y):
            _accumulate(out, ((x, z), (z, y)), c)
    return out


def comultiply(v: CoalgebraVector) -> TensorVector:
    """Δ[x,y] = Σ_{x<=z<=y} [x,z] ⊗ [z,y], extended linearly."""
    return TensorVector._raw(v.poset, v.field, _comultiply_terms(v.poset, v.terms))


def counit(v: CoalgebraVector) -> Scalar:
    s = v.field.zero
    for (x, y), c in v.terms.items():
        if x == y:
            s = s + c
    return s


@dataclass(frozen=True)
class CheckReport:
    """Outcome of an identity check; truthy iff the identity held everywhere.

    On failure ``law`` names the identity and ``interval`` the first basis
    interval (in canonical order) where it broke.
    """

    ok: bool
    law: Optional[str] = None
    interval: Optional[Interval] = None
    detail: str = ""

    def __bool__(self) -> bool:
        return self.ok

    def describe(self) -> str:
        if self.ok:
            return "pass"
        x, y = self.interval
        return f"{self.law} fails at [{x},{y}]: {self.detail}"


PASS = CheckReport(True)


def _counit_left(P, field, t: Mapping[TensorKey, Scalar]) -> Terms:
    # (ε ⊗ 1): the scalar ε(a) multiplies the right factor
    out: Terms = {}
    for (a, b), c in t.items():
        if a[0] == a[1]:
            _accumulate(out, b, c)
    return out


def _counit_right(P, field, t: Mapping[TensorKey, Scalar]) -> Terms:
    out: Terms = {}
    for (a, b), c in t.items():
        if b[0] == b[1]:
            _accumulate(out, a, c)
    return out


def check_coalgebra_axioms(P: Poset, field: FieldSpec) -> CheckReport:
    """Coassociativity and both counit laws on every basis interval."""
    for x, y in P.intervals:
        one = {(x, y): field.one}
        d = _comultiply_terms(P, one)
        left: Dict[Tuple[Interval, Interval, Interval], Scalar] = {}
        right: Dict[Tuple[Interval, Interval, Interval], Scalar] = {}
        for (a, b), c in d.items():
            for (a1, a2), c1 in _comultiply_terms(P, {a: c}).items():
                _accumulate(left, (a1, a2, b), c1)
            for (b1, b2), c2 in _comultiply_terms(P, {b: c}).items():
                _accumulate(right, (a, b1, b2), c2)
        if left != right:
            return CheckReport(False, "coassociativity", (x, y), "(Δ⊗1)Δ ≠ (1⊗Δ)Δ")
        if _counit_left(P, field, d) != one:
            return CheckReport(False, "left counit", (x, y), "(ε⊗1)Δ ≠ id")
        if _counit_right(P, field, d) != one:
            return CheckReport(False, "right counit", (x, y), "(1⊗ε)Δ ≠ id")
    return PASS


class CoalgebraEndomap:
    """Linear map C -> C given by the image of every basis interval."""

    __slots__ = ("poset", "field", "images")

    def __init__(self, poset: Poset, field: FieldSpec, images: Mapping[Interval, object]):
        clean: Dict[Interval, Terms] = {}
        for iv in poset.intervals:
            if iv not in images:
                raise PosetError(f"no image given for [{iv[0]},{iv[1]}]")
            img = images[iv]
            if isinstance(img, CoalgebraVector):
                if img.poset != poset or img.field != field:
                    raise MismatchError("image over a different poset or field")
                clean[iv] = dict(img.terms)
            else:
                clean[iv] = CoalgebraVector(poset, field, img).terms
        extra = set(images) - set(clean)
        if extra:
            x, y = next(iter(extra))
            raise PosetError(f"[{x},{y}] is not an interval")
        self.poset = poset
        self.field = field
        self.images = clean

    @classmethod
    def _raw(cls, poset, field, images) -> "CoalgebraEndomap":
        m = cls.__new__(cls)
        m.poset, m.field, m.images = poset, field, images
        return m

    @classmethod
    def from_rule(cls, poset: Poset, field: FieldSpec,
                  rule: Callable[[Hashable, Hashable], Mapping[Interval, object]]) -> "CoalgebraEndomap":
        return cls(poset, field, {iv: rule(*iv) for iv in poset.intervals})

    @classmethod
    def identity(cls, poset: Poset, field: FieldSpec) -> "CoalgebraEndomap":
        one = field.one
        return cls._raw(poset, field, {iv: {iv: one} for iv in poset.intervals})

    @classmethod
    def zero(cls, poset: Poset, field: FieldSpec) -> "CoalgebraEndomap":
        return cls._raw(poset, field, {iv: {} for iv in poset.intervals})

    def image(self, interval: Interval) -> CoalgebraVector:
        return CoalgebraVector._raw(self.poset, self.field, dict(self.images[interval]))

    def _apply_terms(self, terms: Mapping[Interval, Scalar]) -> Terms:
        out: Terms = {}
        for iv, c in terms.items():
            for k, a in self.images[iv].items():
                _accumulate(out, k, c * a)
        return out

    def __call__(self, v: CoalgebraVector) -> CoalgebraVector:
        return apply_endomap(self, v)

    def _check(self, other) -> None:
        if self.poset != other.poset or self.field != other.field:
            raise MismatchError("endomaps over different posets or fields")

    def __add__(self, other: "CoalgebraEndomap") -> "CoalgebraEndomap":
        self._check(other)
        out = {}
        for iv in self.poset.intervals:
            t = dict(self.images[iv])
            for k, c in other.images[iv].items():
                _accumulate(t, k, c)
            out[iv] = t
        return CoalgebraEndomap._raw(self.poset, self.field, out)

    def __neg__(self) -> "CoalgebraEndomap":
        return CoalgebraEndomap._raw(
            self.poset, self.field,
            {iv: {k: -c for k, c in t.items()} for iv, t in self.images.items()},
        )

    def __sub__(self, other: "CoalgebraEndomap") -> "CoalgebraEndomap":
        return self + (-other)

    def __rmul__(self, c) -> "CoalgebraEndomap":
        c = self.field(c)
        if not c:
            return CoalgebraEndomap.zero(self.poset, self.field)
        return CoalgebraEndomap._raw(
            self.poset, self.field,
            {iv: {k: c * a for k, a in t.items()} for iv, t in self.images.items()},
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, CoalgebraEndomap):
            return NotImplemented
        return self.poset == other.poset and self.field == other.field and self.images == other.images

    __hash__ = None

    def matrix(self):
        """Dense matrix; column j holds the image of the j-th basis interval."""
        ivs = self.poset.intervals
        pos = {iv: i for i, iv in enumerate(ivs)}
        zero = self.field.zero
        rows = [[zero] * len(ivs) for _ in ivs]
        for j, iv in enumerate(ivs):
            for k, c in self.images[iv].items():
                rows[pos[k]][j] = c
        return rows

    def is_bijective(self) -> bool:
        return rank(self.matrix(), self.field) == len(self.poset.intervals)

    def __repr__(self) -> str:
        lines = []
        for iv in self.poset.intervals:
            img = CoalgebraVector._raw(self.poset, self.field, self.images[iv])
            lines.append(f"[{iv[0]},{iv[1]}] ↦ {img!r}")
        return "CoalgebraEndomap(" + "; ".join(lines) + ")"


def apply_endomap(phi: CoalgebraEndomap, v: CoalgebraVector) -> CoalgebraVector:
    if phi.poset != v.poset or phi.field != v.field:
        raise MismatchError("endomap and vector over different posets or fields")
    return CoalgebraVector._raw(v.poset, v.field, phi._apply_terms(v.terms))


def compose_endomaps(phi: CoalgebraEndomap, psi: CoalgebraEndomap) -> CoalgebraEndomap:
    """``phi ∘ psi``: apply ``psi`` first."""
    phi._check(psi)
    return CoalgebraEndomap._raw(
        phi.poset, phi.field, {iv: phi._apply_terms(t) for iv, t in psi.images.items()}
    )


def tensor_apply(phi: Optional[CoalgebraEndomap], psi: Optional[CoalgebraEndomap],
                 t: TensorVector) -> TensorVector:
    """(phi ⊗ psi)(t); ``None`` stands for the identity map."""
    return TensorVector._raw(t.poset, t.field, _tensor_apply_terms(phi, psi, t.terms))


def _tensor_apply_terms(phi, psi, terms) -> Dict[TensorKey, Scalar]:
    out: Dict[TensorKey, Scalar] = {}
    for (a, b), c in terms.items():
        left = phi.images[a] if phi is not None else {a: 1}
        right = psi.images[b] if psi is not None else {b: 1}
        for ka, ca in left.items():
            cca = c * ca
            for kb, cb in right.items():
                _accumulate(out, (ka, kb), cca * cb)
    return out


def _show_terms(P, terms) -> str:
    return repr(TensorVector._raw(P, None, terms)) if terms else "0"


def is_coalgebra_morphism(phi: CoalgebraEndomap) -> CheckReport:
    """Check ε∘phi = ε and Δ∘phi = (phi⊗phi)∘Δ on every basis interval."""
    P = phi.poset
    one = phi.field.one
    for iv in P.intervals:
        img = phi.images[iv]
        eps = sum((c for (x, y), c in img.items() if x == y), phi.field.zero)
        expected = phi.field.one if iv[0] == iv[1] else phi.field.zero
        if eps != expected:
            return CheckReport(False, "counit", iv, f"ε(φ[{iv[0]},{iv[1]}]) = {eps}, expected {expected}")
        lhs = _comultiply_terms(P, img)
        rhs = _tensor_apply_terms(phi, phi, _comultiply_terms(P, {iv: one}))
        if lhs != rhs:
            return CheckReport(
                False, "comultiplication", iv,
                f"Δφ gives {_show_terms(P, lhs)}, (φ⊗φ)Δ gives {_show_terms(P, rhs)}",
            )
    return PASS


def is_coalgebra_automorphism(phi: CoalgebraEndomap) -> CheckReport:
    report = is_coalgebra_morphism(phi)
    if not report:
        return report
    if not phi.is_bijective():
        return CheckReport(False, "bijectivity", phi.poset.intervals[0], "basis-image matrix is singular")
    return PASS


def is_coalgebra_derivation(d: CoalgebraEndomap) -> CheckReport:
    """Check Δ∘d = (d⊗1)∘Δ + (1⊗d)∘Δ on every basis interval."""
    P = d.poset
    one = d.field.one
    for iv in P.intervals:
        lhs = _comultiply_terms(P, d.images[iv])
        delta_iv = _comultiply_terms(P, {iv: one})
        rhs = _tensor_apply_terms(d, None, delta_iv)
        for k, c in _tensor_apply_terms(None, d, delta_iv).items():
            _accumulate(rhs, k, c)
        if lhs != rhs:
            return CheckReport(
                False, "derivation", iv,
                f"Δd gives {_show_terms(P, lhs)}, (d⊗1)Δ+(1⊗d)Δ gives {_show_terms(P, rhs)}",
            )
    return PASS

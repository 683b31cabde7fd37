"""The incidence algebra I(X, F): functions on comparable pairs under convolution."""

from __future__ import annotations

from typing import Dict, Hashable, Iterator, Mapping, Tuple

from .errors import MismatchError, NotInvertibleError, PosetError
from .poset import Interval, Poset
from .scalars import FieldSpec, Scalar


class IncidenceFunction:
    """Sparse element of the incidence algebra; zero entries are never stored.

    ``f[x, y]`` reads an entry (zero for pairs outside the support, including
    incomparable pairs). Arithmetic operators build new functions: ``f + g``,
    ``f - g``, ``c * f`` for a scalar ``c`` and ``f * g`` for convolution.
    """

    __slots__ = ("poset", "field", "entries")

    def __init__(self, poset: Poset, field: FieldSpec, entries: Mapping[Interval, object] = ()):
        clean: Dict[Interval, Scalar] = {}
        items = entries.items() if isinstance(entries, Mapping) else entries
        for (x, y), v in items:
            if not poset.leq(x, y):
                raise PosetError(f"({x}, {y}) is not a comparable pair")
            v = field(v)
            if v:
                clean[(x, y)] = v
        self.poset = poset
        self.field = field
        self.entries = clean

    @classmethod
    def _raw(cls, poset, field, entries) -> "IncidenceFunction":
        # entries already validated and nonzero
        f = cls.__new__(cls)
        f.poset, f.field, f.entries = poset, field, entries
        return f

    def __getitem__(self, pair: Interval) -> Scalar:
        v = self.entries.get(pair)
        return self.field.zero if v is None else v

    def __iter__(self) -> Iterator[Tuple[Interval, Scalar]]:
        idx = self.poset.index
        for pair in sorted(self.entries, key=lambda p: (idx[p[0]], idx[p[1]])):
            yield pair, self.entries[pair]

    def __bool__(self) -> bool:
        return bool(self.entries)

    def _check(self, other: "IncidenceFunction") -> None:
        if not isinstance(other, IncidenceFunction):
            raise TypeError(f"expected IncidenceFunction, got {type(other).__name__}")
        if self.poset != other.poset:
            raise MismatchError("incidence functions over different posets")
        if self.field != other.field:
            raise MismatchError(f"field mismatch: {self.field} vs {other.field}")

    def __add__(self, other: "IncidenceFunction") -> "IncidenceFunction":
        self._check(other)
        out = dict(self.entries)
        for k, v in other.entries.items():
            s = out.get(k)
            s = v if s is None else s + v
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return IncidenceFunction._raw(self.poset, self.field, out)

    def __neg__(self) -> "IncidenceFunction":
        return IncidenceFunction._raw(
            self.poset, self.field, {k: -v for k, v in self.entries.items()}
        )

    def __sub__(self, other: "IncidenceFunction") -> "IncidenceFunction":
        return self + (-other)

    def scale(self, c) -> "IncidenceFunction":
        c = self.field(c)
        if not c:
            return IncidenceFunction._raw(self.poset, self.field, {})
        return IncidenceFunction._raw(
            self.poset, self.field, {k: c * v for k, v in self.entries.items()}
        )

    def __rmul__(self, c) -> "IncidenceFunction":
        return self.scale(c)

    def __mul__(self, other):
        if isinstance(other, IncidenceFunction):
            return convolve(self, other)
        return self.scale(other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, IncidenceFunction):
            return NotImplemented
        return (
            self.field == other.field
            and self.poset == other.poset
            and self.entries == other.entries
        )

    __hash__ = None

    def diagonal(self) -> "IncidenceFunction":
        return IncidenceFunction._raw(
            self.poset, self.field, {k: v for k, v in self.entries.items() if k[0] == k[1]}
        )

    def off_diagonal(self) -> "IncidenceFunction":
        return IncidenceFunction._raw(
            self.poset, self.field, {k: v for k, v in self.entries.items() if k[0] != k[1]}
        )

    def is_invertible(self) -> bool:
        return all((x, x) in self.entries for x in self.poset.elements)

    def inverse(self) -> "IncidenceFunction":
        return invert_function(self)

    def __repr__(self) -> str:
        body = ", ".join(f"({x},{y}): {v}" for (x, y), v in self)
        return f"IncidenceFunction({{{body}}})"


def zero_function(P: Poset, field: FieldSpec) -> IncidenceFunction:
    return IncidenceFunction._raw(P, field, {})


def delta(P: Poset, field: FieldSpec) -> IncidenceFunction:
    one = field.one
    return IncidenceFunction._raw(P, field, {(x, x): one for x in P.elements})


def zeta(P: Poset, field: FieldSpec) -> IncidenceFunction:
    one = field.one
    return IncidenceFunction._raw(P, field, {p: one for p in P.intervals})


def matrix_unit(P: Poset, field: FieldSpec, x: Hashable, y: Hashable) -> IncidenceFunction:
    """``e_xy``; ``matrix_unit(P, F, x, x)`` is the idempotent ``e_x``."""
    if x not in P or y not in P:
        raise PosetError(f"unknown element in ({x}, {y})")
    if not P.leq(x, y):
        raise PosetError(f"matrix unit needs {x} <= {y}")
    return IncidenceFunction._raw(P, field, {(x, y): field.one})


def idempotent(P: Poset, field: FieldSpec, x: Hashable) -> IncidenceFunction:
    return matrix_unit(P, field, x, x)


def standard_function(P: Poset, field: FieldSpec, kind: str, *args) -> IncidenceFunction:
    if kind == "delta":
        return delta(P, field)
    if kind == "zeta":
        return zeta(P, field)
    if kind == "idempotent":
        return idempotent(P, field, *args)
    if kind == "matrix_unit":
        return matrix_unit(P, field, *args)
    raise ValueError(f"unknown standard function {kind!r}")


def convolve(f: IncidenceFunction, g: IncidenceFunction) -> IncidenceFunction:
    """(fg)(x, y) = sum over x <= z <= y of f(x, z) g(z, y)."""
    f._check(g)
    by_lo: Dict[Hashable, list] = {}
    for (z, y), b in g.entries.items():
        by_lo.setdefault(z, []).append((y, b))
    acc: Dict[Interval, Scalar] = {}
    for (x, z), a in f.entries.items():
        for y, b in by_lo.get(z, ()):
            k = (x, y)
            s = acc.get(k)
            acc[k] = a * b if s is None else s + a * b
    return IncidenceFunction._raw(f.poset, f.field, {k: v for k, v in acc.items() if v})


def invert_function(f: IncidenceFunction) -> IncidenceFunction:
    """Convolution inverse by induction on interval size.

    Raises :class:`NotInvertibleError` if some diagonal entry vanishes.
    """
    P = f.poset
    for x in P.elements:
        if (x, x) not in f.entries:
            raise NotInvertibleError(f"not invertible: f({x},{x}) = 0")
    inv: Dict[Interval, Scalar] = {}
    for x, y in sorted(P.intervals, key=lambda p: len(P.between(*p))):
        if x == y:
            inv[(x, x)] = 1 / f.entries[(x, x)]
            continue
        s = f.field.zero
        for z in P.between(x, y):
            if z == x:
                continue
            a = f.entries.get((x, z))
            b = inv.get((z, y))
            if a is not None and b is not None:
                s = s + a * b
        inv[(x, y)] = -(inv[(x, x)] * s)
    result = IncidenceFunction._raw(P, f.field, {k: v for k, v in inv.items() if v})
    one = delta(P, f.field)
    if convolve(f, result) != one or convolve(result, f) != one:
        raise NotInvertibleError("inverse failed two-sided check")
    return result


def mobius(P: Poset, field: FieldSpec) -> IncidenceFunction:
    return invert_function(zeta(P, field))


def split_L1_M1(f: IncidenceFunction) -> Tuple[IncidenceFunction, IncidenceFunction]:
    """Split into the diagonal part (in L1) and the strictly off-diagonal part (in M1)."""
    return f.diagonal(), f.off_diagonal()


def factor_unit(v: IncidenceFunction) -> Tuple[IncidenceFunction, IncidenceFunction]:
    """Write a unit as ``v = l * w`` with ``l`` diagonal and ``w`` unit-diagonal.

    Conjugation then factors as ``mu_v = mu_w ∘ mu_l``.
    """
    if not v.is_invertible():
        raise NotInvertibleError("factor_unit needs an invertible function")
    ell = v.diagonal()
    w = convolve(invert_function(ell), v)
    return ell, w


def is_in_L1(f: IncidenceFunction) -> bool:
    return all(x == y for x, y in f.entries)


def is_in_M1(f: IncidenceFunction) -> bool:
    return all(x != y for x, y in f.entries)

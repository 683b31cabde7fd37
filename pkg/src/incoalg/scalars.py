"""Exact scalars over the rationals and prime fields GF(p).

Rational scalars are plain :class:`fractions.Fraction` values; prime-field
scalars are :class:`GFElement`. Both support the usual arithmetic operators,
so the rest of the package is written against operators and a
:class:`FieldSpec` that supplies ``zero``/``one`` and text conversion.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .errors import FieldError

MAX_MODULUS = 2**31 - 1

_RATIONAL_RE = re.compile(r"^[+-]?\d+(/\d+)?$")
_INTEGER_RE = re.compile(r"^[+-]?\d+$")


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for n < 4759123141."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13):
        if n % p == 0:
            return n == p
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in (2, 7, 61):
        if a % n == 0:
            continue
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class GFElement:
    """Residue class modulo a prime ``p``, stored as an int in ``[0, p)``."""

    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int):
        self.value = value % p
        self.p = p

    def _coerce(self, other):
        if isinstance(other, GFElement):
            if other.p != self.p:
                raise FieldError(f"field mismatch: GF({self.p}) vs GF({other.p})")
            return other.value
        if isinstance(other, int) and not isinstance(other, bool):
            return other
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GFElement(self.value + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GFElement(self.value - o, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GFElement(o - self.value, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GFElement(self.value * o, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * GFElement(o, self.p).inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GFElement(o, self.p) * self.inverse()

    def __neg__(self):
        return GFElement(-self.value, self.p)

    def __pos__(self):
        return self

    def inverse(self) -> "GFElement":
        if self.value == 0:
            raise ZeroDivisionError("zero has no inverse")
        return GFElement(pow(self.value, -1, self.p), self.p)

    def __bool__(self):
        return self.value != 0

    def __eq__(self, other):
        if isinstance(other, GFElement):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int) and not isinstance(other, bool):
            return self.value == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.p))

    def __str__(self):
        return str(self.value)

    def __repr__(self):
        return f"GFElement({self.value}, {self.p})"


Scalar = Union[Fraction, GFElement]


@dataclass(frozen=True)
class FieldSpec:
    """The coefficient field: ``FieldSpec("q")`` or ``FieldSpec("gf", p)``."""

    kind: str
    modulus: Optional[int] = None

    def __post_init__(self):
        if self.kind == "q":
            if self.modulus is not None:
                raise FieldError("the rational field takes no modulus")
        elif self.kind == "gf":
            p = self.modulus
            if not isinstance(p, int) or isinstance(p, bool):
                raise FieldError("prime field needs an integer modulus")
            if p > MAX_MODULUS:
                raise FieldError(f"modulus {p} exceeds 2^31 - 1")
            if not is_prime(p):
                raise FieldError(f"modulus {p} is not prime")
        else:
            raise FieldError(f"unknown field kind {self.kind!r}")

    @classmethod
    def from_string(cls, text: str) -> "FieldSpec":
        """Parse the CLI/JSON notation ``q`` or ``gf:<p>``."""
        text = text.strip().lower()
        if text == "q":
            return cls("q")
        if text.startswith("gf:"):
            digits = text[3:]
            if not digits.isdigit():
                raise FieldError(f"malformed field {text!r}")
            return cls("gf", int(digits))
        raise FieldError(f"malformed field {text!r}")

    def __str__(self):
        return "q" if self.kind == "q" else f"gf:{self.modulus}"

    @property
    def is_rational(self) -> bool:
        return self.kind == "q"

    @property
    def characteristic(self) -> int:
        return 0 if self.kind == "q" else self.modulus

    def __call__(self, value) -> Scalar:
        """Embed an int (or Fraction, for Q) into the field."""
        if self.kind == "q":
            if isinstance(value, GFElement):
                raise FieldError(f"field mismatch: GF({value.p}) value over q")
            return Fraction(value)
        if isinstance(value, GFElement):
            if value.p != self.modulus:
                raise FieldError("field mismatch")
            return value
        if isinstance(value, Fraction):
            return GFElement(value.numerator, self.modulus) / value.denominator
        return GFElement(int(value), self.modulus)

    @property
    def zero(self) -> Scalar:
        return self(0)

    @property
    def one(self) -> Scalar:
        return self(1)

    def contains(self, value) -> bool:
        if self.kind == "q":
            return isinstance(value, Fraction)
        return isinstance(value, GFElement) and value.p == self.modulus

    def parse(self, text: str) -> Scalar:
        return parse_scalar(text, self)

    def format(self, value: Scalar) -> str:
        if not self.contains(value):
            raise FieldError(f"{value!r} is not an element of {self}")
        return str(value)


QQ = FieldSpec("q")


def GF(p: int) -> FieldSpec:
    return FieldSpec("gf", p)


def field_of(value: Scalar) -> FieldSpec:
    if isinstance(value, Fraction):
        return QQ
    if isinstance(value, GFElement):
        return GF(value.p)
    raise FieldError(f"{value!r} is not a field scalar")


def parse_scalar(text: str, field: FieldSpec) -> Scalar:
    """Parse ``"a"``/``"a/b"`` over Q or a decimal residue over GF(p)."""
    if not isinstance(text, str):
        raise FieldError(f"scalar must be given as a string, got {text!r}")
    s = text.strip()
    if field.is_rational:
        if not _RATIONAL_RE.match(s):
            raise FieldError(f"malformed rational {text!r}")
        num, _, den = s.partition("/")
        if den and int(den) == 0:
            raise FieldError(f"zero denominator in {text!r}")
        return Fraction(int(num), int(den) if den else 1)
    if not _INTEGER_RE.match(s):
        raise FieldError(f"malformed residue {text!r}")
    return GFElement(int(s), field.modulus)


def format_scalar(value: Scalar) -> str:
    return str(value)


def scalar_arith(a: Scalar, b: Scalar, op: str) -> Scalar:
    fa, fb = field_of(a), field_of(b)
    if fa != fb:
        raise FieldError(f"field mismatch: {fa} vs {fb}")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        if not b:
            raise ZeroDivisionError("division by zero")
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def scalar_invert(a: Scalar) -> Scalar:
    field_of(a)
    if not a:
        raise ZeroDivisionError("zero has no inverse")
    if isinstance(a, GFElement):
        return a.inverse()
    return 1 / a

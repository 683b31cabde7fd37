"""Finite posets, their intervals, and their automorphism groups."""

from __future__ import annotations

import random
from typing import Dict, Hashable, Iterable, Iterator, List, Sequence, Tuple

from .errors import PosetError

Interval = Tuple[Hashable, Hashable]

MAX_AUT_SIZE = 10


class Poset:
    """An immutable finite partial order.

    The order of ``elements`` is the fixed index order: it determines the
    canonical ordering of intervals (lo-major, hi-minor) used for every
    basis, serialization and comparison in the package. Build instances with
    :func:`build_poset` or :func:`generate_poset`.
    """

    __slots__ = (
        "elements", "index", "_leq", "_up", "_down", "intervals", "_hash", "_between",
    )

    def __init__(self, elements: Sequence[Hashable], leq: Iterable[Interval]):
        self.elements = tuple(elements)
        self.index = {x: i for i, x in enumerate(self.elements)}
        if len(self.index) != len(self.elements):
            raise PosetError("duplicate elements")
        rel = frozenset(leq)
        for x, y in rel:
            if x not in self.index or y not in self.index:
                raise PosetError(f"unknown element in pair ({x}, {y})")
        _check_partial_order(self.elements, rel)
        self._leq = rel
        up: Dict[Hashable, List[Hashable]] = {x: [] for x in self.elements}
        down: Dict[Hashable, List[Hashable]] = {x: [] for x in self.elements}
        for x, y in rel:
            up[x].append(y)
            down[y].append(x)
        key = self.index.__getitem__
        self._up = {x: tuple(sorted(v, key=key)) for x, v in up.items()}
        self._down = {x: tuple(sorted(v, key=key)) for x, v in down.items()}
        self.intervals = tuple(
            sorted(rel, key=lambda p: (self.index[p[0]], self.index[p[1]]))
        )
        self._hash = hash((self.elements, rel))
        self._between: Dict[Interval, Tuple[Hashable, ...]] = {}

    def leq(self, x, y) -> bool:
        return (x, y) in self._leq

    def lt(self, x, y) -> bool:
        return x != y and (x, y) in self._leq

    def up(self, x) -> Tuple[Hashable, ...]:
        """All z with x <= z, in index order."""
        return self._up[x]

    def down(self, x) -> Tuple[Hashable, ...]:
        return self._down[x]

    @property
    def relation(self) -> frozenset:
        return self._leq

    def strict_pairs(self) -> List[Interval]:
        return [(x, y) for x, y in self.intervals if x != y]

    def covers(self) -> List[Interval]:
        """Cover pairs x < y with nothing strictly between, in index order."""
        out = []
        for x, y in self.strict_pairs():
            if len(self.interval_elements(x, y)) == 2:
                out.append((x, y))
        return out

    def interval_elements(self, x, y) -> List[Hashable]:
        return list(self.between(x, y))

    def between(self, x, y) -> Tuple[Hashable, ...]:
        """Cached tuple of z with x <= z <= y, in index order."""
        try:
            return self._between[(x, y)]
        except KeyError:
            pass
        if not self.leq(x, y):
            raise PosetError(f"{x} is not <= {y}")
        ys = set(self._down[y])
        zs = tuple(z for z in self._up[x] if z in ys)
        self._between[(x, y)] = zs
        return zs

    def __contains__(self, x) -> bool:
        return x in self.index

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[Hashable]:
        return iter(self.elements)

    def __eq__(self, other) -> bool:
        if self is other:
            return True
        if not isinstance(other, Poset):
            return NotImplemented
        return self.elements == other.elements and self._leq == other._leq

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Poset({len(self.elements)} elements, {len(self._leq)} pairs)"


def _check_partial_order(elements, rel) -> None:
    for x in elements:
        if (x, x) not in rel:
            raise PosetError(f"reflexivity violated: {x}≤{x} missing")
    for x, y in rel:
        if x != y and (y, x) in rel:
            raise PosetError(f"antisymmetry violated: {x}≤{y}≤{x}")
    succ: Dict[Hashable, List[Hashable]] = {}
    for x, y in rel:
        succ.setdefault(y, []).append(x)
    for x, y in rel:
        for w in succ.get(x, ()):
            if (w, y) not in rel:
                raise PosetError(f"transitivity violated: {w}≤{x}≤{y}")


def build_poset(elements: Sequence[Hashable], pairs: Iterable[Interval]) -> Poset:
    """Poset whose order is the reflexive-transitive closure of ``pairs``."""
    elements = list(elements)
    index = {}
    for i, x in enumerate(elements):
        if x in index:
            raise PosetError(f"duplicate element {x!r}")
        index[x] = i
    n = len(elements)
    reach = [[False] * n for _ in range(n)]
    for i in range(n):
        reach[i][i] = True
    for x, y in pairs:
        if x not in index or y not in index:
            bad = x if x not in index else y
            raise PosetError(f"unknown element {bad!r} in pair ({x}, {y})")
        reach[index[x]][index[y]] = True
    for k in range(n):
        rk = reach[k]
        for i in range(n):
            if reach[i][k]:
                ri = reach[i]
                for j in range(n):
                    if rk[j]:
                        ri[j] = True
    for i in range(n):
        for j in range(i + 1, n):
            if reach[i][j] and reach[j][i]:
                x, y = elements[i], elements[j]
                raise PosetError(f"antisymmetry violated: {x}≤{y}≤{x}")
    rel = [(elements[i], elements[j]) for i in range(n) for j in range(n) if reach[i][j]]
    return Poset(elements, rel)


def _subset_name(mask: int, n: int) -> str:
    return "{" + ",".join(str(i + 1) for i in range(n) if mask >> i & 1) + "}"


def generate_poset(kind: str, n: int, density: float = 0.5, seed: int = 0) -> Poset:
    """Standard test posets: ``chain``, ``antichain``, ``boolean`` or ``random``.

    Element names are strings. ``boolean(n)`` is the subset lattice of
    ``{1..n}`` with elements named like ``"{1,3}"`` and ordered by bitmask.
    ``random`` adds each pair ``i < j`` (index order) with probability
    ``density``, so the result is always acyclic.
    """
    if kind in ("chain", "antichain"):
        if n < 1:
            raise PosetError(f"{kind} needs n >= 1")
        names = [str(i) for i in range(n)]
        pairs = [(names[i], names[i + 1]) for i in range(n - 1)] if kind == "chain" else []
        return build_poset(names, pairs)
    if kind == "boolean":
        if not 0 <= n <= 5:
            raise PosetError("boolean lattice limited to n <= 5")
        names = [_subset_name(m, n) for m in range(2**n)]
        pairs = [
            (names[m], names[m | 1 << i])
            for m in range(2**n)
            for i in range(n)
            if not m >> i & 1
        ]
        return build_poset(names, pairs)
    if kind == "random":
        if not 1 <= n <= 16:
            raise PosetError("random poset limited to 1 <= n <= 16")
        if not 0.0 <= density <= 1.0:
            raise PosetError("density must lie in [0, 1]")
        rng = random.Random(seed)
        names = [str(i) for i in range(n)]
        pairs = [
            (names[i], names[j])
            for i in range(n)
            for j in range(i + 1, n)
            if rng.random() < density
        ]
        return build_poset(names, pairs)
    raise PosetError(f"unknown poset kind {kind!r}")


def list_intervals(P: Poset) -> List[Interval]:
    return list(P.intervals)


def interval_elements(P: Poset, x, y) -> List[Hashable]:
    return P.interval_elements(x, y)


class PosetAutomorphism:
    """An order automorphism of a poset, validated on construction."""

    __slots__ = ("poset", "forward", "backward")

    def __init__(self, poset: Poset, forward: Dict[Hashable, Hashable]):
        fwd = {x: forward[x] for x in poset.elements if x in forward}
        if len(fwd) != len(poset) or set(fwd.values()) != set(poset.elements):
            raise PosetError("automorphism must be a bijection of the elements")
        for x in poset.elements:
            for y in poset.elements:
                if poset.leq(x, y) != poset.leq(fwd[x], fwd[y]):
                    raise PosetError(
                        f"map does not preserve the order at ({x}, {y})"
                    )
        self.poset = poset
        self.forward = fwd
        self.backward = {v: k for k, v in fwd.items()}

    @classmethod
    def identity(cls, poset: Poset) -> "PosetAutomorphism":
        return cls(poset, {x: x for x in poset.elements})

    def __call__(self, x):
        return self.forward[x]

    def inverse(self) -> "PosetAutomorphism":
        return PosetAutomorphism(self.poset, self.backward)

    def compose(self, other: "PosetAutomorphism") -> "PosetAutomorphism":
        """``self ∘ other``: apply ``other`` first."""
        return PosetAutomorphism(
            self.poset, {x: self.forward[other.forward[x]] for x in self.poset.elements}
        )

    def is_identity(self) -> bool:
        return all(k == v for k, v in self.forward.items())

    def __eq__(self, other):
        if not isinstance(other, PosetAutomorphism):
            return NotImplemented
        return self.poset == other.poset and self.forward == other.forward

    def __hash__(self):
        return hash(tuple(self.forward[x] for x in self.poset.elements))

    def __repr__(self):
        moved = {k: v for k, v in self.forward.items() if k != v}
        return f"PosetAutomorphism({moved or 'id'})"


def enumerate_automorphisms(P: Poset) -> List[PosetAutomorphism]:
    """All automorphisms of ``P`` by backtracking, identity first."""
    n = len(P)
    if n > MAX_AUT_SIZE:
        raise PosetError(f"automorphism enumeration limited to {MAX_AUT_SIZE} elements")
    elems = P.elements
    degree = {x: (len(P.up(x)), len(P.down(x))) for x in elems}
    candidates = {x: [y for y in elems if degree[y] == degree[x]] for x in elems}
    image: Dict[Hashable, Hashable] = {}
    used = set()
    found: List[Dict[Hashable, Hashable]] = []

    def extend(k: int) -> None:
        if k == n:
            found.append(dict(image))
            return
        x = elems[k]
        for y in candidates[x]:
            if y in used:
                continue
            ok = True
            for a, b in image.items():
                if P.leq(a, x) != P.leq(b, y) or P.leq(x, a) != P.leq(y, b):
                    ok = False
                    break
            if ok:
                image[x] = y
                used.add(y)
                extend(k + 1)
                del image[x]
                used.discard(y)

    extend(0)
    auts = [PosetAutomorphism(P, f) for f in found]
    auts.sort(key=lambda t: (not t.is_identity(), [P.index[t(x)] for x in elems]))
    return auts

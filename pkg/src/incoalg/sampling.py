"""Seeded random generators for test corpora and the CLI ``random`` commands."""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Optional

from .algebra import IncidenceFunction, delta
from .automorphisms import AutDecomposition, MultiplicativeSystem
from .coalgebra import CoalgebraEndomap
from .derivations import AdditiveSystem, DerDecomposition
from .poset import Poset, PosetAutomorphism, enumerate_automorphisms
from .scalars import FieldSpec, Scalar


def random_scalar(field: FieldSpec, rng: random.Random, nonzero: bool = False) -> Scalar:
    while True:
        if field.is_rational:
            v = Fraction(rng.randint(-6, 6), rng.randint(1, 4))
        else:
            v = field(rng.randrange(field.modulus))
        if v or not nonzero:
            return v


def random_function(P: Poset, field: FieldSpec, rng: random.Random, kind: str = "any",
                    density: float = 0.7) -> IncidenceFunction:
    """Random incidence function.

    ``kind`` is ``any``, ``unit`` (nonzero diagonal, so invertible),
    ``unit_diagonal`` (all-ones diagonal) or ``strict`` (zero diagonal, in M1).
    """
    entries = {}
    for x, y in P.intervals:
        if x == y:
            if kind == "unit":
                entries[(x, y)] = random_scalar(field, rng, nonzero=True)
            elif kind == "unit_diagonal":
                entries[(x, y)] = field.one
            elif kind == "any" and rng.random() < density:
                entries[(x, y)] = random_scalar(field, rng)
        elif rng.random() < density:
            entries[(x, y)] = random_scalar(field, rng)
    return IncidenceFunction(P, field, entries)


def random_mult_system(P: Poset, field: FieldSpec, rng: random.Random) -> MultiplicativeSystem:
    s = {x: random_scalar(field, rng, nonzero=True) for x in P.elements}
    return MultiplicativeSystem.from_potential(P, field, s)


def random_additive_system(P: Poset, field: FieldSpec, rng: random.Random) -> AdditiveSystem:
    s = {x: random_scalar(field, rng) for x in P.elements}
    return AdditiveSystem.from_potential(P, field, s)


def random_poset_automorphism(P: Poset, rng: random.Random) -> PosetAutomorphism:
    return rng.choice(enumerate_automorphisms(P))


def random_aut_parts(P: Poset, field: FieldSpec, rng: random.Random) -> AutDecomposition:
    """Seeded ``(1 + g, multiplicative system, tau)`` generating a coalgebra automorphism."""
    g = random_function(P, field, rng, kind="strict")
    return AutDecomposition(
        delta(P, field) + g,
        random_mult_system(P, field, rng),
        random_poset_automorphism(P, rng),
    )


def random_der_parts(P: Poset, field: FieldSpec, rng: random.Random) -> DerDecomposition:
    g = random_function(P, field, rng, kind="strict")
    return DerDecomposition(g, random_additive_system(P, field, rng))


def random_endomap(P: Poset, field: FieldSpec, rng: random.Random,
                   density: float = 0.4) -> CoalgebraEndomap:
    images = {}
    for iv in P.intervals:
        images[iv] = {
            jv: random_scalar(field, rng) for jv in P.intervals if rng.random() < density
        }
    return CoalgebraEndomap(P, field, images)


def make_rng(seed: Optional[int]) -> random.Random:
    return random.Random(0 if seed is None else seed)

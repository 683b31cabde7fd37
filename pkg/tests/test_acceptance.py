"""Acceptance suite: one group of tests per numbered criterion.

Every comparison is exact equality over Q (Fraction) or GF(5). The terminal
summary prints ``criterion N: PASS|FAIL`` for each group.
"""

import json
import random
import subprocess
import sys

import pytest

from incoalg import GF, QQ, generate_poset
from incoalg import serialize as ser
from incoalg.algebra import convolve, delta, idempotent, invert_function, mobius, zeta
from incoalg.automorphisms import (
    algebra_automorphism,
    compose_coalgebra_parts,
    decompose_coalgebra_automorphism,
    inner_alpha,
    inner_automorphism_C,
    mult_automorphism_C,
    order_automorphism_C,
)
from incoalg.coalgebra import (
    CoalgebraEndomap,
    CoalgebraVector,
    check_coalgebra_axioms,
    compose_endomaps,
    counit,
    is_coalgebra_automorphism,
    is_coalgebra_derivation,
)
from incoalg.derivations import (
    additive_derivation_C,
    algebra_derivation,
    compose_coalgebra_derivation,
    decompose_coalgebra_derivation,
    inner_algebra_derivation,
    inner_derivation_C,
)
from incoalg.duality import dual_product, psi_eval, theta
from incoalg.poset import PosetAutomorphism, enumerate_automorphisms
from incoalg.sampling import (
    random_additive_system,
    random_aut_parts,
    random_der_parts,
    random_endomap,
    random_function,
    random_mult_system,
)

FIELDS = [QQ, GF(5)]
FIELD_IDS = [str(F) for F in FIELDS]


def _random_corpus():
    rng = random.Random(2024)
    out = []
    for i in range(20):
        n = rng.randint(2, 7)
        out.append((f"random{i}_n{n}", generate_poset("random", n, rng.uniform(0.2, 0.7), seed=1000 + i)))
    return out


POSETS = (
    [(f"chain{n}", generate_poset("chain", n)) for n in range(1, 6)]
    + [(f"antichain{n}", generate_poset("antichain", n)) for n in range(1, 5)]
    + [("boolean2", generate_poset("boolean", 2)), ("boolean3", generate_poset("boolean", 3))]
    + _random_corpus()
)
POSET_IDS = [name for name, _ in POSETS]


def per_poset(fn):
    fn = pytest.mark.parametrize("name,P", POSETS, ids=POSET_IDS)(fn)
    return pytest.mark.parametrize("F", FIELDS, ids=FIELD_IDS)(fn)


def seeded(*key):
    return random.Random(repr(key))


# ---------------------------------------------------------------- criterion 1

@pytest.mark.acceptance(1)
@per_poset
def test_c01_coalgebra_axioms(name, P, F):
    assert check_coalgebra_axioms(P, F)


# ---------------------------------------------------------------- criterion 2

@pytest.mark.acceptance(2)
@per_poset
def test_c02_dual_product_is_convolution(name, P, F):
    rng = seeded(2, name, str(F))
    for _ in range(50):
        f = random_function(P, F, rng)
        g = random_function(P, F, rng)
        assert dual_product(f, g) == convolve(f, g)
    d = delta(P, F)
    for iv in P.intervals:
        assert psi_eval(d, CoalgebraVector.basis(P, F, *iv)) == counit(CoalgebraVector.basis(P, F, *iv))


# ---------------------------------------------------------------- criterion 3

@pytest.mark.acceptance(3)
@per_poset
def test_c03_theta_anti_homomorphism(name, P, F):
    rng = seeded(3, name, str(F))
    for _ in range(20):
        phi = random_endomap(P, F, rng)
        psi = random_endomap(P, F, rng)
        assert theta(compose_endomaps(phi, psi)) == theta(psi).compose(theta(phi))


@pytest.mark.acceptance(3)
@per_poset
def test_c03_theta_injective_on_basis_maps(name, P, F):
    """The elementary maps [a] ↦ [s] have pairwise distinct transfers."""
    ivs = P.intervals
    keys = set()
    for a in ivs:
        for s in ivs:
            D = theta(CoalgebraEndomap(P, F, {iv: ({s: 1} if iv == a else {}) for iv in ivs}))
            keys.add(tuple((p, tuple(D.images[p])) for p in ivs))
    assert len(keys) == len(ivs) ** 2


# ---------------------------------------------------------------- criterion 4

@pytest.mark.acceptance(4)
@per_poset
def test_c04_alpha_identities(name, P, F):
    rng = seeded(4, name, str(F))
    zero, one = F.zero, F.one
    for _ in range(20):
        alpha = inner_alpha(random_function(P, F, rng, kind="unit"))
        for x, y in P.intervals:
            for s in P.between(x, y):
                for r in P.between(s, y):
                    for t in P.between(r, y):
                        assert alpha(x, y, s, t) == alpha(x, r, s, r) * alpha(r, y, r, t)
            trace = sum((alpha(x, y, s, s) for s in P.between(x, y)), zero)
            assert trace == (one if x == y else zero)
        for x in P.elements:
            assert alpha(x, x, x, x) == one
            for p in P.up(x):
                for q in P.up(p):
                    for u in P.up(q):
                        if u == q:
                            continue
                        for v in P.up(u):
                            for y in P.up(v):
                                total = sum(
                                    (alpha(x, z, p, q) * alpha(z, y, u, v) for z in P.between(q, u)),
                                    zero,
                                )
                                assert total == zero


# ---------------------------------------------------------------- criterion 5

@pytest.mark.acceptance(5)
@per_poset
def test_c05_constructor_transfers(name, P, F):
    rng = seeded(5, name, str(F))
    auts = enumerate_automorphisms(P)
    for _ in range(20):
        h = random_function(P, F, rng, kind="unit")
        assert theta(inner_automorphism_C(h)) == algebra_automorphism(P, F, "inner", h)
        sys_m = random_mult_system(P, F, rng)
        assert theta(mult_automorphism_C(sys_m)) == algebra_automorphism(P, F, "mult", sys_m)
        tau = rng.choice(auts)
        assert theta(order_automorphism_C(tau, F)) == algebra_automorphism(P, F, "order", tau)
        g = random_function(P, F, rng)
        assert theta(inner_derivation_C(g)) == algebra_derivation(P, F, "inner", g)
        sys_a = random_additive_system(P, F, rng)
        assert theta(additive_derivation_C(sys_a)) == algebra_derivation(P, F, "additive", sys_a)


# ---------------------------------------------------------------- criterion 6

def _spread(count):
    """``count`` seeded cases per field, cycling through the poset corpus."""
    return [
        pytest.param(i, POSETS[i % len(POSETS)][1], F, id=f"{F}-{POSETS[i % len(POSETS)][0]}-{i}")
        for F in FIELDS for i in range(count)
    ]


@pytest.mark.acceptance(6)
@pytest.mark.parametrize("i,P,F", _spread(50))
def test_c06_automorphism_round_trip(i, P, F):
    parts = random_aut_parts(P, F, random.Random(6000 + i))
    phi = compose_coalgebra_parts(parts)
    sigma, lam, nu, dec = decompose_coalgebra_automorphism(phi)
    assert dec == parts
    recomposed = compose_endomaps(sigma, compose_endomaps(lam, nu))
    for iv in P.intervals:
        assert recomposed.image(iv) == phi.image(iv)


@pytest.mark.acceptance(6)
@per_poset
def test_c06_identity_decomposes_trivially(name, P, F):
    ident = CoalgebraEndomap.identity(P, F)
    sigma, lam, nu, dec = decompose_coalgebra_automorphism(ident)
    assert dec.inner_unit == delta(P, F)
    assert dec.mult_system.is_trivial()
    assert dec.order_part == PosetAutomorphism.identity(P)
    assert sigma == lam == nu == ident


# ---------------------------------------------------------------- criterion 7

@pytest.mark.acceptance(7)
@pytest.mark.parametrize("i,P,F", _spread(50))
def test_c07_derivation_round_trip(i, P, F):
    parts = random_der_parts(P, F, random.Random(7000 + i))
    d = compose_coalgebra_derivation(parts)
    nu, lam, dec = decompose_coalgebra_derivation(d)
    assert dec == parts
    assert nu + lam == d
    # uniqueness: the inner parts differ by g - g', and d_(g-g') kills every
    # idempotent only when g - g' is zero
    diff = inner_algebra_derivation(dec.inner_part - parts.inner_part)
    for x in P.elements:
        assert not diff(idempotent(P, F, x))
    assert not (dec.inner_part - parts.inner_part)


# ---------------------------------------------------------------- criterion 8

def _constructor_outputs(P, F, rng):
    morphisms = [
        inner_automorphism_C(random_function(P, F, rng, kind="unit")),
        inner_automorphism_C(random_function(P, F, rng, kind="unit"), direction="inverse"),
        mult_automorphism_C(random_mult_system(P, F, rng)),
        order_automorphism_C(rng.choice(enumerate_automorphisms(P)), F),
        compose_coalgebra_parts(random_aut_parts(P, F, rng)),
    ]
    derivations = [
        inner_derivation_C(random_function(P, F, rng)),
        additive_derivation_C(random_additive_system(P, F, rng)),
        compose_coalgebra_derivation(random_der_parts(P, F, rng)),
    ]
    return morphisms, derivations


@pytest.mark.acceptance(8)
@per_poset
def test_c08_constructors_pass_predicates(name, P, F):
    morphisms, derivations = _constructor_outputs(P, F, seeded(8, name, str(F)))
    for phi in morphisms:
        assert is_coalgebra_automorphism(phi)
    for d in derivations:
        assert is_coalgebra_derivation(d)


def _corrupt(phi, rng):
    """Perturb one coefficient of one basis image.

    The perturbed coefficient is the one on a one-point interval [s,s]; this
    always changes the counit of that image, so every constructed morphism
    and derivation is pushed out of its class. (An off-diagonal perturbation
    can land on another valid map, e.g. rescaling [0,1] in a chain of two is
    again a multiplicative automorphism.)
    """
    P, F = phi.poset, phi.field
    images = {iv: dict(phi.images[iv]) for iv in P.intervals}
    target = rng.choice(P.intervals)
    s = rng.choice(P.between(*target))
    bump = F(rng.randint(1, 4))
    images[target][(s, s)] = images[target].get((s, s), F.zero) + bump
    return CoalgebraEndomap(P, F, images), target


@pytest.mark.acceptance(8)
@pytest.mark.parametrize("i,P,F", _spread(50))
def test_c08_corruptions_detected(i, P, F):
    rng = random.Random(8000 + i)
    morphisms, derivations = _constructor_outputs(P, F, rng)
    phi, _ = _corrupt(rng.choice(morphisms), rng)
    report = is_coalgebra_automorphism(phi)
    assert not report and report.interval is not None and report.describe()
    d, _ = _corrupt(rng.choice(derivations), rng)
    report = is_coalgebra_derivation(d)
    assert not report and report.interval is not None and report.describe()


# ---------------------------------------------------------------- criterion 9

def _mobius_recurrence(P, F):
    """mu(x,x) = 1, mu(x,y) = -sum of mu(x,z) over x <= z < y."""
    mu = {}
    for x in P.elements:
        ups = sorted(P.up(x), key=lambda y: len(P.between(x, y)))
        for y in ups:
            if x == y:
                mu[(x, y)] = F.one
            else:
                mu[(x, y)] = -sum((mu[(x, z)] for z in P.between(x, y) if z != y), F.zero)
    return mu


@pytest.mark.acceptance(9)
@per_poset
def test_c09_mobius(name, P, F):
    z = zeta(P, F)
    mu = invert_function(z)
    one = delta(P, F)
    assert convolve(z, mu) == one == convolve(mu, z)
    assert mu == mobius(P, F)
    rec = _mobius_recurrence(P, F)
    assert all(mu[iv] == rec[iv] for iv in P.intervals)
    if name.startswith("chain"):
        n = len(P)
        for i in range(n):
            for j in range(i, n):
                want = 1 if j == i else (-1 if j == i + 1 else 0)
                assert mu[(str(i), str(j))] == F(want)


# ---------------------------------------------------------------- criterion 10

def _cli(*argv):
    return subprocess.run([sys.executable, "-m", "incoalg", *argv], capture_output=True, text=True)


@pytest.fixture
def b3(tmp_path):
    path = tmp_path / "boolean3.json"
    path.write_text(ser.dumps(ser.poset_to_doc(generate_poset("boolean", 3))), encoding="utf-8")
    return path


@pytest.mark.acceptance(10)
@pytest.mark.parametrize("group,seed", [("aut", "7"), ("der", "3")])
@pytest.mark.parametrize("field", ["q", "gf:5"])
def test_c10_cli_golden(tmp_path, b3, group, seed, field):
    out = tmp_path / f"{group}.json"
    proc = _cli(group, "random", str(b3), "--seed", seed, "--field", field, "--out", str(out))
    assert proc.returncode == 0, proc.stderr
    sidecar = (tmp_path / f"{group}.parts.json").read_bytes()
    proc = _cli(group, "decompose", str(b3), str(out), "--field", field)
    assert proc.returncode == 0, proc.stderr
    assert proc.stdout.encode("utf-8") == sidecar
    again = tmp_path / "again.json"
    assert _cli(group, "random", str(b3), "--seed", seed, "--field", field, "--out", str(again)).returncode == 0
    assert again.read_bytes() == out.read_bytes()


@pytest.mark.acceptance(10)
def test_c10_exit_codes(tmp_path, b3):
    assert _cli("poset", "check", str(b3)).returncode == 0
    cyc = tmp_path / "cyc.json"
    cyc.write_text(json.dumps({"elements": ["0", "1"], "covers": [["0", "1"], ["1", "0"]]}))
    proc = _cli("poset", "check", str(cyc))
    assert proc.returncode == 1 and "antisymmetry violated" in proc.stdout
    assert _cli("poset", "check", str(tmp_path / "missing.json")).returncode == 2
    broken = tmp_path / "broken.json"
    broken.write_text("{")
    assert _cli("poset", "check", str(broken)).returncode == 2

    P = generate_poset("boolean", 3)
    ident = tmp_path / "id.json"
    ident.write_text(ser.dumps(ser.endomap_to_doc(CoalgebraEndomap.identity(P, QQ))))
    zero = tmp_path / "zero.json"
    zero.write_text(ser.dumps(ser.endomap_to_doc(CoalgebraEndomap.zero(P, QQ))))
    assert _cli("aut", "decompose", str(b3), str(ident)).returncode == 0
    proc = _cli("aut", "decompose", str(b3), str(zero))
    assert proc.returncode == 1 and "fails at" in proc.stderr
    assert _cli("der", "decompose", str(b3), str(zero)).returncode == 0
    assert _cli("der", "decompose", str(b3), str(ident)).returncode == 1
    assert _cli("aut", "decompose", str(b3), str(tmp_path / "missing.json")).returncode == 2

import json
import random

import pytest

from incoalg import QQ, GF, generate_poset
from incoalg import serialize as ser
from incoalg.algebra import mobius
from incoalg.derivations import compose_coalgebra_derivation
from incoalg.automorphisms import compose_coalgebra_parts
from incoalg.duality import theta
from incoalg.errors import FieldError, PosetError
from incoalg.poset import enumerate_automorphisms
from incoalg.sampling import random_aut_parts, random_der_parts, random_endomap, random_function

from conftest import CORPUS


def round_trip(to_doc, from_doc, obj, *args):
    text = ser.dumps(to_doc(obj))
    back = from_doc(json.loads(text), *args)
    assert ser.dumps(to_doc(back)) == text
    return back


def test_poset_document_example():
    doc = ser.poset_to_doc(generate_poset("chain", 3))
    assert doc == {"elements": ["0", "1", "2"], "covers": [["0", "1"], ["1", "2"]]}


def test_function_document_example():
    doc = ser.function_to_doc(mobius(generate_poset("chain", 2), QQ))
    assert doc["field"] == "q"
    assert doc["entries"] == [["0", "0", "1"], ["0", "1", "-1"], ["1", "1", "1"]]


def test_dumps_is_canonical():
    assert ser.dumps({"b": 1, "a": ["∅"]}) == '{\n  "a": [\n    "∅"\n  ],\n  "b": 1\n}\n'


@pytest.mark.parametrize("name,P", CORPUS, ids=[n for n, _ in CORPUS])
def test_round_trips(name, P, field, rng):
    assert round_trip(ser.poset_to_doc, ser.poset_from_doc, P) == P
    f = random_function(P, field, rng)
    assert round_trip(ser.function_to_doc, ser.function_from_doc, f) == f
    phi = random_endomap(P, field, rng)
    assert round_trip(ser.endomap_to_doc, ser.endomap_from_doc, phi, P, field) == phi
    D = theta(phi)
    assert round_trip(ser.algebra_endomap_to_doc, ser.algebra_endomap_from_doc, D, P, field) == D
    aut = random_aut_parts(P, field, rng)
    assert round_trip(ser.aut_decomposition_to_doc, ser.aut_decomposition_from_doc, aut, P, field) == aut
    der = random_der_parts(P, field, rng)
    assert round_trip(ser.der_decomposition_to_doc, ser.der_decomposition_from_doc, der, P, field) == der
    for tau in enumerate_automorphisms(P)[:3]:
        assert round_trip(ser.automorphism_to_doc, ser.automorphism_from_doc, tau, P) == tau


@pytest.mark.parametrize("name,P", CORPUS[:4], ids=[n for n, _ in CORPUS[:4]])
def test_same_seed_same_bytes(name, P, field):
    a = ser.dumps(ser.endomap_to_doc(compose_coalgebra_parts(random_aut_parts(P, field, random.Random(9)))))
    b = ser.dumps(ser.endomap_to_doc(compose_coalgebra_parts(random_aut_parts(P, field, random.Random(9)))))
    assert a == b
    c = ser.dumps(ser.endomap_to_doc(compose_coalgebra_derivation(random_der_parts(P, field, random.Random(4)))))
    d = ser.dumps(ser.endomap_to_doc(compose_coalgebra_derivation(random_der_parts(P, field, random.Random(4)))))
    assert c == d


def test_bad_documents():
    P = generate_poset("chain", 2)
    with pytest.raises(ser.FormatError):
        ser.poset_from_doc({"elements": ["a"]})
    with pytest.raises(ser.FormatError):
        ser.poset_from_doc({"elements": [1], "covers": []})
    with pytest.raises(PosetError):
        ser.poset_from_doc({"elements": ["a", "b"], "covers": [["a", "b"], ["b", "a"]]})
    with pytest.raises(ser.FormatError):
        ser.endomap_from_doc({"images": {"[1,0]": []}}, P, QQ)
    with pytest.raises(ser.FormatError):
        ser.endomap_from_doc({"images": {}}, P, QQ)
    with pytest.raises(FieldError):
        ser.endomap_from_doc(
            {"images": {"[0,0]": [{"interval": ["0", "0"], "coeff": "x"}], "[0,1]": [], "[1,1]": []}},
            P, QQ,
        )
    f = ser.function_to_doc(mobius(P, QQ))
    with pytest.raises(ser.FormatError):
        ser.function_from_doc(f, P, GF(5))


def test_decomposition_documents_are_validated():
    P = generate_poset("chain", 2)
    doc = ser.aut_decomposition_to_doc(random_aut_parts(P, QQ, random.Random(1)))
    doc["inner_unit"]["entries"] = [["0", "0", "2"], ["1", "1", "1"]]
    with pytest.raises(ser.FormatError):
        ser.aut_decomposition_from_doc(doc, P, QQ)
    der = ser.der_decomposition_to_doc(random_der_parts(P, QQ, random.Random(1)))
    der["inner_part"]["entries"] = [["0", "0", "1"]]
    with pytest.raises(ser.FormatError):
        ser.der_decomposition_from_doc(der, P, QQ)

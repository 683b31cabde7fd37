"""Command-line interface.

Exit codes: 0 success, 1 semantic failure (invalid poset, map outside the
requested class; a counterexample is printed), 2 I/O or parse failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Callable, List, Optional

from . import serialize as ser
from .algebra import convolve, delta, invert_function, zeta
from .automorphisms import compose_coalgebra_parts, decompose_coalgebra_automorphism
from .coalgebra import (
    check_coalgebra_axioms,
    is_coalgebra_derivation,
    is_coalgebra_morphism,
)
from .derivations import compose_coalgebra_derivation, decompose_coalgebra_derivation
from .errors import (
    FieldError,
    IncoalgError,
    NotADerivationError,
    NotAnAutomorphismError,
    PosetError,
)
from .poset import enumerate_automorphisms
from .sampling import make_rng, random_aut_parts, random_der_parts
from .scalars import FieldSpec


class CliFailure(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _read_json(path: str):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise CliFailure(2, f"cannot read {path}: {exc.strerror or exc}")
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise CliFailure(2, f"malformed JSON in {path}: {exc}")


def _parse(loader: Callable, *args):
    try:
        return loader(*args)
    except (ser.FormatError, FieldError) as exc:
        raise CliFailure(2, f"parse error: {exc}")
    except PosetError as exc:
        raise CliFailure(1, str(exc))


def _load_poset(path: str):
    return _parse(ser.poset_from_doc, _read_json(path))


def _write(text: str, out: Optional[str]) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    try:
        Path(out).write_text(text, encoding="utf-8")
    except OSError as exc:
        raise CliFailure(2, f"cannot write {out}: {exc.strerror or exc}")


def _sidecar_path(out: str) -> str:
    p = Path(out)
    stem = p.name[: -len(".json")] if p.name.endswith(".json") else p.name
    return str(p.with_name(stem + ".parts.json"))


def cmd_poset_check(args) -> int:
    doc = _read_json(args.poset)
    try:
        P = ser.poset_from_doc(doc)
    except ser.FormatError as exc:
        raise CliFailure(2, f"parse error: {exc}")
    except PosetError as exc:
        print(str(exc))
        return 1
    print(f"elements={len(P)} pairs={len(P.relation)} intervals={len(P.intervals)}")
    return 0


def cmd_poset_autgroup(args) -> int:
    P = _load_poset(args.poset)
    try:
        auts = enumerate_automorphisms(P)
    except PosetError as exc:
        raise CliFailure(1, str(exc))
    doc = {"order": len(auts), "automorphisms": [ser.automorphism_to_doc(t) for t in auts]}
    _write(ser.dumps(doc), args.out)
    return 0


def cmd_coalgebra_check(args) -> int:
    P = _load_poset(args.poset)
    report = check_coalgebra_axioms(P, args.field)
    print(f"coalgebra axioms: {'pass' if report else 'fail'}")
    if not report:
        print(report.describe())
        return 1
    if args.map is None:
        return 0
    phi = _parse(ser.endomap_from_doc, _read_json(args.map), P, args.field)
    morph = is_coalgebra_morphism(phi)
    der = is_coalgebra_derivation(phi)
    m_text = "yes" if morph else f"no ({morph.law})"
    print(f"morphism: {m_text}, derivation: {'yes' if der else 'no'}")
    if morph and phi.is_bijective():
        kind = "automorphism"
    elif der:
        kind = "derivation"
    else:
        kind = "neither"
    print(f"classification: {kind}")
    if not morph:
        print(f"morphism counterexample: {morph.describe()}")
    elif not phi.is_bijective():
        print("morphism is not bijective")
    if not der:
        print(f"derivation counterexample: {der.describe()}")
    return 0


def cmd_aut_random(args) -> int:
    P = _load_poset(args.poset)
    rng = make_rng(args.seed)
    parts = random_aut_parts(P, args.field, rng)
    phi = compose_coalgebra_parts(parts)
    if args.out is None:
        raise CliFailure(2, "aut random needs --out for the map and its sidecar")
    _write(ser.dumps(ser.endomap_to_doc(phi)), args.out)
    _write(ser.dumps(ser.aut_decomposition_to_doc(parts)), args.parts or _sidecar_path(args.out))
    return 0


def cmd_aut_decompose(args) -> int:
    P = _load_poset(args.poset)
    phi = _parse(ser.endomap_from_doc, _read_json(args.map), P, args.field)
    try:
        factors = decompose_coalgebra_automorphism(phi)
    except NotAnAutomorphismError as exc:
        raise CliFailure(1, str(exc))
    _write(ser.dumps(ser.aut_decomposition_to_doc(factors.decomposition)), args.out)
    return 0


def cmd_aut_compose(args) -> int:
    P = _load_poset(args.poset)
    parts = _parse(ser.aut_decomposition_from_doc, _read_json(args.parts_file), P, args.field)
    _write(ser.dumps(ser.endomap_to_doc(compose_coalgebra_parts(parts))), args.out)
    return 0


def cmd_der_random(args) -> int:
    P = _load_poset(args.poset)
    rng = make_rng(args.seed)
    parts = random_der_parts(P, args.field, rng)
    d = compose_coalgebra_derivation(parts)
    if args.out is None:
        raise CliFailure(2, "der random needs --out for the map and its sidecar")
    _write(ser.dumps(ser.endomap_to_doc(d)), args.out)
    _write(ser.dumps(ser.der_decomposition_to_doc(parts)), args.parts or _sidecar_path(args.out))
    return 0


def cmd_der_decompose(args) -> int:
    P = _load_poset(args.poset)
    d = _parse(ser.endomap_from_doc, _read_json(args.map), P, args.field)
    try:
        factors = decompose_coalgebra_derivation(d)
    except NotADerivationError as exc:
        raise CliFailure(1, str(exc))
    _write(ser.dumps(ser.der_decomposition_to_doc(factors.decomposition)), args.out)
    return 0


def cmd_der_compose(args) -> int:
    P = _load_poset(args.poset)
    parts = _parse(ser.der_decomposition_from_doc, _read_json(args.parts_file), P, args.field)
    _write(ser.dumps(ser.endomap_to_doc(compose_coalgebra_derivation(parts))), args.out)
    return 0


def cmd_mobius(args) -> int:
    P = _load_poset(args.poset)
    z = zeta(P, args.field)
    mu = invert_function(z)
    one = delta(P, args.field)
    if convolve(z, mu) != one or convolve(mu, z) != one:
        raise CliFailure(1, "Möbius check failed")
    _write(ser.dumps(ser.function_to_doc(mu)), args.out)
    return 0


def _field_arg(text: str) -> FieldSpec:
    try:
        return FieldSpec.from_string(text)
    except FieldError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _seed_arg(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid seed {text!r}")
    if not 0 <= v < 2**64:
        raise argparse.ArgumentTypeError("seed must be an unsigned 64-bit integer")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", type=_field_arg, default=FieldSpec("q"),
                        help="coefficient field: q or gf:<p> (default q)")
    common.add_argument("--seed", type=_seed_arg, default=0, help="random seed (default 0)")
    common.add_argument("--out", default=None, help="output path (default stdout)")

    parser = argparse.ArgumentParser(
        prog="incoalg",
        description="Incidence algebras and coalgebras of finite posets.",
    )
    top = parser.add_subparsers(dest="group", required=True)

    poset = top.add_parser("poset", help="validate posets").add_subparsers(dest="cmd", required=True)
    p = poset.add_parser("check", parents=[common])
    p.add_argument("poset")
    p.set_defaults(func=cmd_poset_check)
    p = poset.add_parser("autgroup", parents=[common])
    p.add_argument("poset")
    p.set_defaults(func=cmd_poset_autgroup)

    coal = top.add_parser("coalgebra").add_subparsers(dest="cmd", required=True)
    p = coal.add_parser("check", parents=[common])
    p.add_argument("poset")
    p.add_argument("--map", default=None, help="linear map to classify")
    p.set_defaults(func=cmd_coalgebra_check)

    for group, handlers in (
        ("aut", (cmd_aut_random, cmd_aut_decompose, cmd_aut_compose)),
        ("der", (cmd_der_random, cmd_der_decompose, cmd_der_compose)),
    ):
        sub = top.add_parser(group).add_subparsers(dest="cmd", required=True)
        p = sub.add_parser("random", parents=[common])
        p.add_argument("poset")
        p.add_argument("--parts", default=None, help="sidecar path (default <out>.parts.json)")
        p.set_defaults(func=handlers[0])
        p = sub.add_parser("decompose", parents=[common])
        p.add_argument("poset")
        p.add_argument("map")
        p.set_defaults(func=handlers[1])
        p = sub.add_parser("compose", parents=[common])
        p.add_argument("poset")
        p.add_argument("parts_file")
        p.set_defaults(func=handlers[2])

    p = top.add_parser("mobius", parents=[common])
    p.add_argument("poset")
    p.set_defaults(func=cmd_mobius)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliFailure as exc:
        print(str(exc), file=sys.stderr)
        return exc.code
    except IncoalgError as exc:
        print(str(exc), file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

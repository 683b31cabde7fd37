"""Exact incidence algebras and incidence coalgebras of finite posets."""

from .algebra import (
    IncidenceFunction,
    convolve,
    delta,
    factor_unit,
    idempotent,
    invert_function,
    matrix_unit,
    mobius,
    split_L1_M1,
    standard_function,
    zeta,
)
from .automorphisms import (
    AutDecomposition,
    MultiplicativeSystem,
    algebra_automorphism,
    decompose_algebra_automorphism,
    decompose_coalgebra_automorphism,
    inner_automorphism_C,
    mult_automorphism_C,
    order_automorphism_C,
)
from .coalgebra import (
    CoalgebraEndomap,
    CoalgebraVector,
    TensorVector,
    apply_endomap,
    check_coalgebra_axioms,
    comultiply,
    compose_endomaps,
    counit,
    is_coalgebra_derivation,
    is_coalgebra_morphism,
)
from .derivations import (
    AdditiveSystem,
    DerDecomposition,
    additive_derivation_C,
    algebra_derivation,
    decompose_algebra_derivation,
    decompose_coalgebra_derivation,
    inner_derivation_C,
    split_inner_derivation,
)
from .duality import AlgebraEndomap, apply_algebra_endomap, dual_product, psi_eval, theta
from .poset import (
    Poset,
    PosetAutomorphism,
    build_poset,
    enumerate_automorphisms,
    generate_poset,
    interval_elements,
    list_intervals,
)
from .scalars import GF, QQ, FieldSpec, GFElement, parse_scalar, scalar_arith, scalar_invert

__version__ = "0.1.0"

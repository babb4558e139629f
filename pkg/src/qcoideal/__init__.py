"""Exact computations with right coideal subalgebras of U_q(sl2) and U_q(sl3).

Scalars live in Q(q).  Elements are stored in a PBW basis ``E^a K_nu F^c``
and multiplied by straightening; coproducts, subalgebra spans, character
shifts and leading-term reductions are built on top of that.
"""
from .scalar import ONE, Q, ZERO, QRat, q_number, qpow
from .rootdata import (
    WeylWord,
    dominance_leq,
    format_weight,
    get_system,
    inversion_set,
    is_convex,
    parse_weight,
    phi_plus_of,
    weak_leq,
)
from .pbw import (
    E,
    F,
    K,
    UElement,
    derive_relation,
    get_algebra,
    normalize,
    omega,
    parts,
    q_commutator,
    sigma,
    swap,
)
from .hopf import TensorElement, check_coproduct_shape, coproduct, counit
from .expr import ParseError, format_element, parse_element
from .subalgebra import (
    CoidealReport,
    GeneratorSet,
    SpanBasis,
    is_closed_under_multiplication,
    is_right_coideal,
    torus_subhopf_check,
)
from .rcs import Character, Lattice, character_shift_set, homogeneous_rcs, shift_element
from .leading import (
    check_generator_form,
    eta_split,
    leading_term,
    m_compare,
    m_set,
    reduce_generator,
    reduce_generator_f,
    reduce_system,
)
from .catalog import get_entry, instantiate, load_catalog, verify_catalog, verify_entry
from .repr import act, build_simple_module, restrict_find_onedim

__version__ = "0.1.0"

__all__ = [
    "ONE",
    "Q",
    "ZERO",
    "QRat",
    "q_number",
    "qpow",
    "WeylWord",
    "dominance_leq",
    "format_weight",
    "get_system",
    "inversion_set",
    "is_convex",
    "parse_weight",
    "phi_plus_of",
    "weak_leq",
    "E",
    "F",
    "K",
    "UElement",
    "derive_relation",
    "get_algebra",
    "normalize",
    "omega",
    "parts",
    "q_commutator",
    "sigma",
    "swap",
    "TensorElement",
    "check_coproduct_shape",
    "coproduct",
    "counit",
    "ParseError",
    "format_element",
    "parse_element",
    "CoidealReport",
    "GeneratorSet",
    "SpanBasis",
    "is_closed_under_multiplication",
    "is_right_coideal",
    "torus_subhopf_check",
    "Character",
    "Lattice",
    "character_shift_set",
    "homogeneous_rcs",
    "shift_element",
    "check_generator_form",
    "eta_split",
    "leading_term",
    "m_compare",
    "m_set",
    "reduce_generator",
    "reduce_generator_f",
    "reduce_system",
    "get_entry",
    "instantiate",
    "load_catalog",
    "verify_catalog",
    "verify_entry",
    "act",
    "build_simple_module",
    "restrict_find_onedim",
]

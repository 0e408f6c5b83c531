"""Exact computer algebra for the first Weyl algebra A_1(Q).

Normal-form arithmetic, weighted-degree geometry, the exchange involution and
its conjugate, and the classification of endomorphisms that commute with the
exchange involution, together with the analogous maps of Q[X, Y] under the
Jacobian bracket.
"""

from .classifier import (
    CanonicalForm,
    SymPair,
    classify,
    classify_sym_pair,
    decompose,
    even_odd_split,
    invert,
)
from .errors import (
    BoundExceeded,
    HypothesisViolation,
    InvalidDirection,
    InvalidParams,
    JacobianNotOne,
    NotAlphaEquivariant,
    NotAlphaMorphism,
    NotEndomorphism,
    NotInCanonicalShape,
    NotInFamily,
    WeylStarError,
    ZeroElement,
    ZeroPoint,
)
from .geometry import (
    Direction,
    LatticePoint,
    aligned,
    degree,
    end_point,
    leading_term,
    lower_degree,
    lower_leading_term,
    psi,
    start_point,
    support,
    w_bar_point,
    w_point,
)
from .jacobian import (
    JacFamilyParams,
    apply_poly_alpha,
    apply_poly_beta,
    beta_conjugate,
    build_jac_family,
    is_alpha_morphism,
    jac_bracket,
    jac_family_inverse,
    jc2_classify,
    jc2_invert,
)
from .morphisms import (
    FamilyParams,
    GenImages,
    apply_alpha,
    apply_beta,
    apply_endo,
    apply_phi,
    apply_phi_inv,
    build_family,
    compose,
    diagnose,
    family_inverse,
    is_alpha_equivariant,
    is_endomorphism,
)
from .parser import parse, parse_element, render
from .poly import PolyElement
from .weyl import WeylElement, commutator

__version__ = "0.1.0"

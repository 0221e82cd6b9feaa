"""Exact arithmetic for finite-dimensional Leibniz algebras.

Tables of structure constants over the rationals, optionally with named
parameters; identity checking, squares ideals, quotients, constraint
extraction, basis changes, and isomorphism verification.
"""

from .analysis import (
    DISTINGUISHED,
    INCONCLUSIVE,
    BasisChange,
    ConstraintSet,
    ProfileReport,
    apply_basis_change,
    compare_profiles,
    extract_constraints,
    verify_isomorphism,
)
from .algfile import ChangeDocument, parse_algebra, parse_change, serialize_algebra
from .constructions import (
    FamilySpec,
    make_abelian,
    make_direct_sum,
    make_dzhumadildaev,
    make_generic_family,
    make_L_family,
    make_L_prefamily,
    make_module_extension,
    make_r2,
    make_sl2,
    make_sl2_module,
)
from .core import (
    AlgebraTable,
    Element,
    InvariantProfile,
    QuotientMap,
    Subspace,
    Verdict,
    element_from,
    format_element,
    span,
    zero_element,
)
from .errors import (
    AdmissibilityError,
    AlgebraError,
    BasisChangeError,
    DimensionMismatchError,
    MissingParameterError,
    NotAnIdealError,
    ParametricError,
    ParseError,
)
from .scalars import ONE, ZERO, Poly, as_poly, normalize_primitive

__all__ = [
    "AdmissibilityError",
    "AlgebraError",
    "AlgebraTable",
    "BasisChange",
    "BasisChangeError",
    "ChangeDocument",
    "ConstraintSet",
    "DISTINGUISHED",
    "DimensionMismatchError",
    "Element",
    "FamilySpec",
    "INCONCLUSIVE",
    "InvariantProfile",
    "MissingParameterError",
    "NotAnIdealError",
    "ONE",
    "ParametricError",
    "ParseError",
    "Poly",
    "ProfileReport",
    "QuotientMap",
    "Subspace",
    "Verdict",
    "ZERO",
    "apply_basis_change",
    "as_poly",
    "compare_profiles",
    "element_from",
    "extract_constraints",
    "format_element",
    "make_L_family",
    "make_L_prefamily",
    "make_abelian",
    "make_direct_sum",
    "make_dzhumadildaev",
    "make_generic_family",
    "make_module_extension",
    "make_r2",
    "make_sl2",
    "make_sl2_module",
    "normalize_primitive",
    "parse_algebra",
    "parse_change",
    "serialize_algebra",
    "span",
    "verify_isomorphism",
    "zero_element",
]

__version__ = "0.1.0"

"""Bifurcation values at infinity of polynomials restricted to smooth complete intersections.

Exact tools for Newton non-degeneracy at infinity, the finite value sets K0 and
Sigma_infinity, certified supersets of the bifurcation set, and monodromy
stability checks for one-parameter families.
"""

__version__ = "0.1.0"

from .atypical import (
    BifurcationReport,
    ValueSet,
    Verdict,
    bifurcation_superset,
    check_nondegenerate_at_infinity,
    check_tuple_smooth_on_torus,
    critical_values_k0,
    sigma_infinity,
    verify_s_smooth,
)
from .family import (
    FamilyPolynomial,
    constant_polyhedron_check,
    family_nondegeneracy_check,
    stability_report,
)
from .groebner import (
    GREVLEX,
    LEX,
    GroebnerBasis,
    MonomialOrder,
    block_order,
    contains_one,
    eliminate,
    groebner,
    normal_form,
    saturate,
)
from .lp import lp_feasible
from .newton import (
    FaceDescriptor,
    FaceTuple,
    NewtonPolyhedron,
    enumerate_face_tuples,
    face_part,
    is_convenient,
    min_degree_and_face,
    newton_polyhedron,
)
from .parser import parse_polynomial
from .poly import Polynomial, evaluate, partial_derivative, restrict_to_axes
from .probe import ProbeSample, asymptotic_profile, rabier_nu
from .scalars import QQi
from .univariate import UnivariatePolynomial, sturm_count, univariate_roots

__all__ = [
    "asymptotic_profile",
    "bifurcation_superset",
    "BifurcationReport",
    "block_order",
    "check_nondegenerate_at_infinity",
    "check_tuple_smooth_on_torus",
    "constant_polyhedron_check",
    "contains_one",
    "critical_values_k0",
    "eliminate",
    "enumerate_face_tuples",
    "evaluate",
    "face_part",
    "FaceDescriptor",
    "FaceTuple",
    "family_nondegeneracy_check",
    "FamilyPolynomial",
    "GREVLEX",
    "groebner",
    "GroebnerBasis",
    "is_convenient",
    "LEX",
    "lp_feasible",
    "min_degree_and_face",
    "MonomialOrder",
    "newton_polyhedron",
    "NewtonPolyhedron",
    "normal_form",
    "parse_polynomial",
    "partial_derivative",
    "Polynomial",
    "ProbeSample",
    "QQi",
    "rabier_nu",
    "restrict_to_axes",
    "saturate",
    "sigma_infinity",
    "stability_report",
    "sturm_count",
    "univariate_roots",
    "UnivariatePolynomial",
    "ValueSet",
    "Verdict",
    "verify_s_smooth",
]

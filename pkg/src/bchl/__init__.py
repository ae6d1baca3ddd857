"""Exact Hall-Littlewood polynomials of type BC and their torus integrals.

Symmetric and nonsymmetric families at the Hall-Littlewood (q=0
Koornwinder) level, with exact rational arithmetic throughout: Laurent
polynomial ring, hyperoctahedral group statistics, an iterated-residue
constant-term engine with a float quadrature cross-oracle, Hecke-operator
recursion for nonsymmetric indices, and identity-verification suites.
"""

from .ct_engine import (
    DenominatorFactor,
    FactoredIntegrand,
    GenericityError,
    build_density,
    constant_term,
    ct_quadrature,
    inner_product_0,
    nonsymmetric_ct,
    nonsymmetric_ct_closed_form,
    symmetric_ct,
    symmetric_ct_closed_form,
    symmetric_invariant_ct,
)
from .nonsymmetric import (
    composition_stats,
    e_composition,
    e_partition,
    hecke_t,
    pq_coefficients,
    verify_hecke_relations,
)
from .ring import (
    InexactDivisionError,
    LaurentPoly,
    ModulusError,
    ParameterPoint,
    comp_prec,
    dominance_le,
    dominant_weight,
    exact_laurent_divide,
    lex_le,
    monomial_orbit_sum,
)
from .signed_perms import SignedPermutation, apply_signed_perm, enumerate_bn, stat_c, stat_n
from .symmetric import (
    application_closed_form,
    application_integral,
    decompose_monomial_basis,
    delta_bc,
    k_polynomial,
    norm_constant,
    symmetric_inner_product,
    v_lambda,
    v_lambda_plus,
)

__version__ = "0.1.0"

__all__ = [
    "DenominatorFactor",
    "FactoredIntegrand",
    "GenericityError",
    "InexactDivisionError",
    "LaurentPoly",
    "ModulusError",
    "ParameterPoint",
    "SignedPermutation",
    "application_closed_form",
    "application_integral",
    "apply_signed_perm",
    "build_density",
    "comp_prec",
    "composition_stats",
    "constant_term",
    "ct_quadrature",
    "decompose_monomial_basis",
    "delta_bc",
    "dominance_le",
    "dominant_weight",
    "e_composition",
    "e_partition",
    "enumerate_bn",
    "exact_laurent_divide",
    "hecke_t",
    "inner_product_0",
    "k_polynomial",
    "lex_le",
    "monomial_orbit_sum",
    "nonsymmetric_ct",
    "nonsymmetric_ct_closed_form",
    "norm_constant",
    "pq_coefficients",
    "stat_c",
    "stat_n",
    "symmetric_ct",
    "symmetric_ct_closed_form",
    "symmetric_inner_product",
    "symmetric_invariant_ct",
    "v_lambda",
    "v_lambda_plus",
    "verify_hecke_relations",
]

"""Exact complete weight enumerators of trace-defined linear codes over GF(p^e)."""

from .charsums import (
    additive_character_sum,
    chi,
    coulter_sum_brute,
    coulter_sum_brute_counts,
    coulter_sum_closed,
    eta,
    gauss_sum,
    gauss_sum_prime,
    is_f_permutation,
    l_p_sum,
    l_p_sum_closed,
    legendre,
    residue_class_cardinalities,
    residue_class_cardinalities_closed,
    s_p_sum,
    s_p_sum_closed,
    solve_f,
    SolutionSet,
    trace_of_solution_class,
)
from .codes import (
    CodeSpec,
    DefiningSet,
    code_length_closed,
    codeword,
    composition_of,
    defining_set,
    expected_census,
    n_a_closed,
    n_b_count_brute,
    n_b_count_closed,
    solvable_b_census,
)
from .cwe import (
    CWEPolynomial,
    VerificationReport,
    closed_terms,
    cwe_brute,
    cwe_closed,
    diff_cwe,
    diff_weights,
    run_sweep,
    sweep_fields,
    table_closed,
    verify,
    weight_distribution_of,
)
from .cyclotomic import CyclotomicInt
from .errors import (
    DegenerateCodeError,
    InternalError,
    ParameterError,
    UnsupportedRegimeError,
)
from .field import FieldElement, FieldParams, find_irreducible, is_irreducible, is_prime

__all__ = [
    "CodeSpec",
    "CWEPolynomial",
    "CyclotomicInt",
    "DefiningSet",
    "DegenerateCodeError",
    "FieldElement",
    "FieldParams",
    "InternalError",
    "ParameterError",
    "SolutionSet",
    "UnsupportedRegimeError",
    "VerificationReport",
    "additive_character_sum",
    "chi",
    "closed_terms",
    "code_length_closed",
    "codeword",
    "composition_of",
    "coulter_sum_brute",
    "coulter_sum_brute_counts",
    "coulter_sum_closed",
    "cwe_brute",
    "cwe_closed",
    "defining_set",
    "diff_cwe",
    "diff_weights",
    "eta",
    "expected_census",
    "find_irreducible",
    "gauss_sum",
    "gauss_sum_prime",
    "is_f_permutation",
    "is_irreducible",
    "is_prime",
    "l_p_sum",
    "l_p_sum_closed",
    "legendre",
    "n_a_closed",
    "n_b_count_brute",
    "n_b_count_closed",
    "residue_class_cardinalities",
    "residue_class_cardinalities_closed",
    "run_sweep",
    "s_p_sum",
    "s_p_sum_closed",
    "solvable_b_census",
    "solve_f",
    "sweep_fields",
    "table_closed",
    "trace_of_solution_class",
    "verify",
    "weight_distribution_of",
]

"""Centralizers of 2x2 matrices over finite quotient rings R/<k>.

Supported base rings: the integers, the Gaussian integers, and
univariate polynomials over a prime field. The package computes the
structural description of a centralizer (base-ring span plus annihilator
ideal grid), decides the containments between the two parts, counts the
centralizer exactly, and cross-checks all of it against brute-force
enumeration oracles.
"""

from .centralizer import (
    BaseCentralizer,
    CentralizerDescription,
    FieldCentralizer,
    base_centralizer,
    describe,
    field_centralizer,
    i_matrix_witness,
    s1_set,
    s2_ideals,
)
from .containment import ContainmentReport, report
from .counting import (
    CrtDecomposition,
    EquivClassStructure,
    count,
    count_zk,
    crt_decompose,
    defect,
    equiv_structure,
)
from .matrices import Mat2, MatN, commutes, is_scalar
from .oracle import (
    BudgetError,
    IntKernelBasis,
    MatrixSet,
    brute_force_cen,
    int_commutant_basis,
    prop14_check,
    sumset,
    sumset_count,
    transpose_check,
)
from .quotient import (
    PrincipalIdeal,
    QuotientContext,
    Residue,
    ann_intersection,
    annihilator,
    inverse,
    is_invertible,
    make_context,
    parse_ring,
)
from .ufd import (
    Factorization,
    GaussElem,
    IntElem,
    ParseError,
    PolyElem,
    UfdElement,
    exact_div,
    factor,
    gcd,
    normalize_associate,
    xgcd,
)

__all__ = [
    "BaseCentralizer",
    "BudgetError",
    "CentralizerDescription",
    "ContainmentReport",
    "CrtDecomposition",
    "EquivClassStructure",
    "Factorization",
    "FieldCentralizer",
    "GaussElem",
    "IntElem",
    "IntKernelBasis",
    "Mat2",
    "MatN",
    "MatrixSet",
    "ParseError",
    "PolyElem",
    "PrincipalIdeal",
    "QuotientContext",
    "Residue",
    "UfdElement",
    "ann_intersection",
    "annihilator",
    "base_centralizer",
    "brute_force_cen",
    "commutes",
    "count",
    "count_zk",
    "crt_decompose",
    "defect",
    "describe",
    "equiv_structure",
    "exact_div",
    "factor",
    "field_centralizer",
    "gcd",
    "i_matrix_witness",
    "int_commutant_basis",
    "inverse",
    "is_invertible",
    "is_scalar",
    "make_context",
    "normalize_associate",
    "parse_ring",
    "prop14_check",
    "report",
    "s1_set",
    "s2_ideals",
    "sumset",
    "sumset_count",
    "transpose_check",
    "xgcd",
]

__version__ = "0.1.0"

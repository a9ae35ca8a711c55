"""Exact quantum Schubert calculus on the orthogonal Grassmannian OG(n+1, 2n+2)."""

from .errors import (
    ArgumentOrderError,
    InadmissibleQueryError,
    InvalidDegreeError,
    InvalidIndexError,
    InvariantViolation,
)
from .identities import check_appendix, check_box_two_row, check_boxprop, check_pfaffian_identity
from .lgbridge import LGQuery, lg_gw, lg_gw_odd, oglg_check, ogsymmetry_check
from .ogring import (
    GWQuery,
    QuantumClass,
    classical_product,
    giambelli_check,
    gw,
    gw_invariant,
    multiply_by_top,
    presentation_check,
    quantum_pieri,
    quantum_product,
    rho_product,
    tau,
    vanishing_bounds,
)
from .polyengine import GenPoly, SymPoly
from .qtilde import QTildeVector, e_coeffs, expand, f_coeff, pieri_expand, ptilde, qtilde

__version__ = "0.1.0"

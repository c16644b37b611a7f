"""Exact a-number computations for hyperelliptic curves y^2 = f(x).

The package computes the Cartier-Manin matrix of a hyperelliptic curve
over F_p (p an odd prime), its rank, and the a-number, entirely in
exact modular arithmetic.  For the one-parameter families

    A:  y^2 = x^m + 1
    B:  y^2 = x^m + x

it also evaluates closed-form a-number rules and a congruence-counting
rank shortcut, and the sweep harness cross-checks every path against
the others over parameter grids.

Hot kernels (polynomial convolution and row reduction mod p) run from a
compiled extension when it is available and fall back to pure Python
otherwise; ``BACKEND`` names the implementation in use.
"""

from ._kernels import BACKEND
from .cartier import (
    ANumberCore,
    CartierMatrix,
    LaurentDifferential,
    a_number,
    cartier_action_on_basis,
    cartier_differential,
    cartier_matrix,
    format_matrix,
    nullspace_mod_p,
    parse_matrix,
    rank_mod_p,
    rank_of_rows,
    row_reduce,
)
from .closedform import (
    THEOREM_IDS,
    TheoremPrediction,
    congruence_rank,
    predicted_a,
)
from .curves import (
    CurveFamily,
    CurveSpec,
    CurveValidationError,
    Family,
    Strategy,
    family_a,
    family_b,
    generic,
    half_power_coeffs,
    make_curve,
)
from .ffpoly import (
    DEFAULT_COEFF_LIMIT,
    DensePolynomial,
    LimitExceededError,
    Prime,
    Residue,
    SparseCoeffMap,
    is_prime,
    lucas_binom,
    poly_derivative,
    poly_gcd,
    poly_pow_coeffs,
)
from .harness import (
    PATTERNS,
    REPORT_COLUMNS,
    ANumberReport,
    GridPoint,
    SkipRecord,
    SweepGrid,
    SweepResult,
    VerifyResult,
    evaluate_curve,
    expand_grid,
    reports_to_csv,
    reports_to_json,
    sweep,
    verify,
)

__version__ = "0.1.0"

__all__ = [
    "ANumberCore",
    "ANumberReport",
    "BACKEND",
    "CartierMatrix",
    "CurveFamily",
    "CurveSpec",
    "CurveValidationError",
    "DEFAULT_COEFF_LIMIT",
    "DensePolynomial",
    "Family",
    "GridPoint",
    "LaurentDifferential",
    "LimitExceededError",
    "PATTERNS",
    "Prime",
    "REPORT_COLUMNS",
    "Residue",
    "SkipRecord",
    "SparseCoeffMap",
    "Strategy",
    "SweepGrid",
    "SweepResult",
    "THEOREM_IDS",
    "TheoremPrediction",
    "VerifyResult",
    "a_number",
    "cartier_action_on_basis",
    "cartier_differential",
    "cartier_matrix",
    "congruence_rank",
    "evaluate_curve",
    "expand_grid",
    "family_a",
    "family_b",
    "format_matrix",
    "generic",
    "half_power_coeffs",
    "is_prime",
    "lucas_binom",
    "make_curve",
    "nullspace_mod_p",
    "parse_matrix",
    "poly_derivative",
    "poly_gcd",
    "poly_pow_coeffs",
    "predicted_a",
    "rank_mod_p",
    "rank_of_rows",
    "reports_to_csv",
    "reports_to_json",
    "row_reduce",
    "sweep",
    "verify",
]

"""Exact arithmetic for second-kind Bell, poly-Bell and degenerate Bell
families: a truncated-series engine over rationals and polynomials in
(lam, x), closed-form Stirling sums for every family, and a verifier that
checks each identity as exact polynomial equality.
"""

from .bell import (
    BellFamilyId,
    BellValue,
    bell2_number,
    bell2_poly,
    bell_poly,
    deg_bell2_poly,
    deg_bell_poly,
    deg_poly_bell2,
    egf_value,
    family_value,
    gf_bell2_numbers,
    gf_bell2_polys,
    gf_bell_numbers,
    gf_bell_polys,
    gf_deg_bell2_numbers,
    gf_deg_bell2_polys,
    gf_deg_bell_numbers,
    gf_deg_bell_polys,
    gf_deg_poly_bell2,
    gf_poly_bell2,
    poly_bell2,
    stirling_sum_value,
)
from .ring import LAM, X, MultiPoly, as_fraction, falling_factorial
from .series import TruncatedSeries, t_identity
from .special import (
    DerangementSeq,
    StirlingTable,
    deg_exp,
    deg_log1p,
    deg_polylog,
    derangements,
    exp_minus_one,
    log1p,
    polylog,
    stirling_table,
)
from .verify import VerificationReport, check, check_all

__version__ = "0.1.0"

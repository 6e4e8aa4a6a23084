"""Exact computation of relative eta-invariants for circle-bundle quotient
families, together with the integer-cohomology computations classifying them.

All arithmetic is exact rational; see :mod:`etainv.coeffcore` for the backend
selection (gmpy2 when available, stdlib fractions otherwise).
"""

from .coeffcore import RATIONAL_BACKEND, Rational, UniPoly, gcd, poly_eval
from .cohring import CohClass, RingSpec, coh_eval_series, coh_integrate
from .invariants import (
    EtaReport,
    FamilyParams,
    a1_direct,
    a1_poly_in_s,
    a1_residue,
    decompose_affine_in_t,
    family_scan,
    find_good_s,
    local_datum,
    relative_eta,
    s2_closed_form,
)
from .series import PowerSeries, ps_exp
from .zcohomology import cohomology_Mbar, gysin_step_matrix, h4_M_order, snf

__version__ = "0.1.0"

__all__ = [
    "RATIONAL_BACKEND",
    "Rational",
    "UniPoly",
    "gcd",
    "poly_eval",
    "CohClass",
    "RingSpec",
    "coh_eval_series",
    "coh_integrate",
    "EtaReport",
    "FamilyParams",
    "a1_direct",
    "a1_poly_in_s",
    "a1_residue",
    "decompose_affine_in_t",
    "family_scan",
    "find_good_s",
    "local_datum",
    "relative_eta",
    "s2_closed_form",
    "PowerSeries",
    "ps_exp",
    "cohomology_Mbar",
    "gysin_step_matrix",
    "h4_M_order",
    "snf",
    "__version__",
]

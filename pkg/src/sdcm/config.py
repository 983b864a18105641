"""Package-wide tunables.

N_CHECK bounds the coefficient-prefix scan used by nonnegativity checks.
Sixty-four terms is a heuristic, not a proof: positivity of a rational
series is in general subtle, but a prefix of this length catches every
arithmetic slip seen in practice.

EPS_CURV bounds the width of interval-valued curvatures produced when the
dominant denominator root is irrational.

The command line may override both via flags or the environment variables
SDCM_NCHECK and SDCM_EPS; library callers may pass explicit values to the
functions that take them or assign these module attributes once at startup.
"""

from fractions import Fraction

N_CHECK = 64
EPS_CURV = Fraction(1, 10 ** 9)

# Factor applied to the target width for the single refinement pass taken
# before an overlapping interval comparison is reported as ambiguous.
REFINE_FACTOR = 10 ** 6


def effective_n_check(n_terms=None):
    return N_CHECK if n_terms is None else n_terms


def effective_eps(eps=None):
    return EPS_CURV if eps is None else Fraction(eps)

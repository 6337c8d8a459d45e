"""Shared numerical tolerances.

All guards scale with the magnitude of the data they protect, so the
constants here are dimensionless base values.  The zero threshold used by
the multiplicity algorithms is deliberately a single shared value: those
algorithms are threshold-sensitive and must agree on what counts as zero.
"""

# Singularity guard for inverses, scaled by (1 + |operand|).
EPS_ZERO = 1e-14

# Unit/slice-plane membership checks (imaginary units, contour nodes).
EPS_UNIT = 1e-12

# Trailing-coefficient trim, scaled by (1 + max |a_n|).
EPS_COEFF = 1e-12

# Boundary classification of lemniscate sets, scaled by (1 + R^2).
EPS_BOUNDARY = 1e-9

# Minimum separation of a two-point sampling pair, scaled by the point
# magnitudes.  Differences across the pair divide by the separation, so
# anything closer loses more than half the mantissa and the two-point
# coefficients stop being meaningful.
EPS_PAIR = 1e-6

# Coefficient/value zero test in multiplicity algorithms, scaled by
# (1 + max |coeff of f|).  Overridable per call and via the CLI.
EPS_MULT = 1e-10

# Central finite-difference step for derivative cross-checks.
# Error model: O(step^2) truncation + O(eps_machine/step) roundoff.
FD_STEP = 1e-5


def zero_guard(scale: float) -> float:
    """Threshold below which a quantity of the given scale is singular."""
    return EPS_ZERO * (1.0 + scale)

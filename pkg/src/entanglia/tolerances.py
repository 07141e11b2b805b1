"""Central numerical tolerance constants.

One knob for all numerical gates; modules import from here instead of
hard-coding literals.
"""

# Hermiticity gate: max |H - H^dagger| entry.
HERM_TOL = 1e-9

# Eigen-reconstruction residual gate.
RESID_TOL = 1e-9

# Eigenvalues in [-PSD_CLAMP, 0) are clamped to 0 before sqrt/log.
PSD_CLAMP = 1e-9

# Slack for majorization partial-sum inequalities; boundary cases such as
# the .80 = .80 partial sum in the textbook catalysis pair must pass.
MAJ_TOL = 1e-9

# Two probability/trace totals are "equal" within this.
TRACE_TOL = 1e-9

# Schmidt coefficients below this count as zero rank.
RANK_TOL = 1e-10


def as_dict():
    """Tolerances as a plain dict, embedded in CLI reports."""
    return {
        "herm_tol": HERM_TOL,
        "resid_tol": RESID_TOL,
        "psd_clamp": PSD_CLAMP,
        "maj_tol": MAJ_TOL,
        "trace_tol": TRACE_TOL,
        "rank_tol": RANK_TOL,
    }

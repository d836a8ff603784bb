#pragma once

namespace jtri {

/// Tolerance knobs shared by every numerical decision in the library.
///
/// Conventions:
///  - rank_tol is relative to the largest singular value of whatever batch
///    is being rank-decided (span deflation, kernel cutoffs).
///  - cluster_tol is a dimensionless radius; eigenvalue grouping uses the
///    effective radius cluster_tol * (1 + ||A||) so that clustering is
///    scale-invariant.
///  - residual_tol gates identity checks and invariance audits, scaled by
///    the natural norm of the data being checked.
///
/// Defaults suit well-conditioned instances at desk scale (n <= 32).
/// Ill-conditioned inputs (tight spectra, defective eigenvalues) need
/// looser cluster_tol; the library errors loudly rather than guessing.
struct ToleranceConfig {
    double rank_tol = 1e-10;
    double cluster_tol = 1e-8;
    double residual_tol = 1e-8;
};

} // namespace jtri

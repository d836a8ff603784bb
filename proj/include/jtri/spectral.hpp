#pragma once

#include <vector>

#include "jtri/complex_matrix.hpp"
#include "jtri/config.hpp"
#include "jtri/subspace.hpp"

namespace jtri {

struct SpectralCluster {
    cplx lambda;             // cluster representative (mean of members)
    int multiplicity = 0;    // algebraic
    ComplexMatrix projection; // Riesz projection onto the generalized
                              // eigenspace, along all the others
};

/// Clustered spectrum with one Riesz projection per cluster.
/// Invariants (audited at construction): multiplicities sum to matrix_dim,
/// projections sum to the identity, are idempotent, mutually annihilate,
/// and commute with the source matrix, all within residual_tol scaling.
struct SpectralDecomposition {
    int matrix_dim = 0;
    std::vector<SpectralCluster> clusters;
};

/// Single-linkage grouping of points with linking radius `radius`;
/// returns index groups sorted by (Re, Im) of their means.
std::vector<std::vector<int>> cluster_points(const std::vector<cplx>& pts,
                                             double radius);

/// Riesz decomposition of A. Eigenvalues are clustered with effective
/// radius cluster_tol * (1 + ||A||); clusters closer than twice that
/// radius raise ClusterAmbiguity. Each projection is assembled from
/// orthonormal generalized-eigenspace bases via one similarity.
/// scale_hint, when nonnegative, replaces ||A|| in the radius (used to
/// avoid a large SVD when a bound is already known).
SpectralDecomposition riesz_decomposition(const ComplexMatrix& a,
                                          const ToleranceConfig& cfg,
                                          double scale_hint = -1.0);

/// The n^2 x n^2 matrix of B -> AB - BA in column-stacking convention:
/// vec(B)[j*n + i] = B(i, j), ad = I (x) A - A^T (x) I.
ComplexMatrix ad_matrix(const ComplexMatrix& a);

/// Kronecker product in the same convention:
/// K[(a*q + c), (b*q + d)] = X(a,b) * Y(c,d) with Y q x q; the vec-operator
/// of B -> P B Q is kron_cs(Q^T, P).
ComplexMatrix kron_cs(const ComplexMatrix& x, const ComplexMatrix& y);

/// Riesz decomposition of ad(A) in one pass, with the clustering radius
/// scaled by the bound ||ad(A)|| <= 2 ||A||.
SpectralDecomposition ad_riesz_all(const ComplexMatrix& a,
                                   const ToleranceConfig& cfg);

/// The clustering radius used by ad_riesz_all for this matrix.
double ad_cluster_radius(const ComplexMatrix& a, const ToleranceConfig& cfg);

/// Riesz projection of ad(A) at the cluster of lambda, as an n^2 x n^2
/// matrix. Throws InvalidArgument when lambda is not within the clustering
/// radius of any eigenvalue cluster of ad(A).
ComplexMatrix ad_riesz(const ComplexMatrix& a, cplx lambda,
                       const ToleranceConfig& cfg);

/// The sum over eigenvalue-cluster pairs (alpha, beta) of A with
/// alpha - beta within the clustering radius of lambda of the maps
/// B -> P_alpha B P_beta, materialized n^2 x n^2.
ComplexMatrix adproj_formula(const ComplexMatrix& a, cplx lambda,
                             const ToleranceConfig& cfg);

/// Same sum assembled from an existing decomposition of A; pairs are
/// included iff |alpha - beta - lambda| <= radius. Throws InvalidArgument
/// when no pair matches.
ComplexMatrix adproj_formula_from(const SpectralDecomposition& dec,
                                  cplx lambda, double radius);

/// Range of ad_riesz(a, lambda) as a matrix space: the elementary spectral
/// manifold of ad(A) at lambda, which in finite dimension is exactly the
/// generalized eigenspace.
MatrixSpace spectral_manifold(const ComplexMatrix& a, cplx lambda,
                              const ToleranceConfig& cfg);

} // namespace jtri

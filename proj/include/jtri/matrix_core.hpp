#pragma once

#include <vector>

#include "jtri/complex_matrix.hpp"
#include "jtri/config.hpp"

namespace jtri {

/// l_p norm of the singular values. p = infinity returns the largest
/// singular value (the induced operator norm); p = 1 the trace norm.
/// Throws InvalidArgument for p < 1.
double schatten_norm(const ComplexMatrix& a, double p);

/// Largest singular value; schatten_norm(a, inf).
double operator_norm(const ComplexMatrix& a);

/// Sum of singular values; schatten_norm(a, 1).
double trace_norm(const ComplexMatrix& a);

/// The dim eigenvalues with algebraic multiplicity, sorted by
/// (real, imag) for reproducible output.
std::vector<cplx> spectrum(const ComplexMatrix& a);

/// Relative spectral-radius gate of the nilpotency eigenvalue test:
/// max(cluster_tol, (n*eps)^(1/n)). Computed eigenvalues of a defective
/// matrix scatter like eps^(1/n), so below that resolution limit the
/// eigenvalue route carries no information.
double nilpotency_eigenvalue_gate(int dim, const ToleranceConfig& cfg);

/// Dual nilpotency test. Eigenvalue route: every |lambda| must be at most
/// nilpotency_eigenvalue_gate * (1 + ||A||). Power route:
/// ||(A/(1+||A||))^dim|| must be at most residual_tol, i.e.
/// ||A^dim|| <= residual_tol * (1+||A||)^dim. Throws AmbiguousNilpotency
/// when the two verdicts disagree (defective spectra are ill-conditioned;
/// agreement converts silent misclassification into a loud error).
bool is_nilpotent(const ComplexMatrix& a, const ToleranceConfig& cfg);

} // namespace jtri

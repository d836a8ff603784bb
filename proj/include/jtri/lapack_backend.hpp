#pragma once

#include <vector>

#include "jtri/complex_matrix.hpp"

namespace jtri::lapack {

/// Eigenvalues only (zgeev, no vectors), unordered as returned by the
/// driver. Throws EigensolverFailure on non-convergence.
std::vector<cplx> eigenvalues(const ComplexMatrix& a);

struct Eigensystem {
    std::vector<cplx> values;
    ComplexMatrix right; // columns are right eigenvectors
    ComplexMatrix left;  // columns are left eigenvectors
};

/// Full eigensystem (zgeev 'V','V').
Eigensystem eigensystem(const ComplexMatrix& a);

/// Singular values, descending (zgesvd, values only).
std::vector<double> singular_values(const ComplexMatrix& a);

struct Svd {
    std::vector<double> s; // descending
    ComplexMatrix u;
    ComplexMatrix vh;
};

/// Full SVD a = u * diag(s) * vh.
Svd svd(const ComplexMatrix& a);

struct Schur {
    ComplexMatrix t; // upper triangular
    ComplexMatrix q; // unitary, a = q t q^H
    std::vector<cplx> w; // diagonal of t
};

/// Complex Schur form (zgees, no eigenvalue sorting).
Schur schur(const ComplexMatrix& a);

/// Reorder a copy of the Schur form so the selected eigenvalues lead
/// (ztrsen) and return the leading columns of the reordered Q: an
/// orthonormal basis of the invariant subspace belonging to the selection.
/// select has one entry per eigenvalue (nonzero = selected).
std::vector<std::vector<cplx>> invariant_subspace_basis(
    const Schur& s, const std::vector<int>& select);

/// Matrix inverse via zgetrf/zgetri. Throws EigensolverFailure on exactly
/// singular input.
ComplexMatrix inverse(const ComplexMatrix& a);

} // namespace jtri::lapack

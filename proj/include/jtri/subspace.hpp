#pragma once

#include <vector>

#include "jtri/complex_matrix.hpp"
#include "jtri/config.hpp"

namespace jtri {

using Vec = std::vector<cplx>;

/// Subspace of C^n carried by an orthonormal column basis. An empty basis
/// is the zero subspace, a first-class value.
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(int ambient_dim);

    static Subspace zero(int ambient_dim) { return Subspace(ambient_dim); }
    static Subspace full(int ambient_dim);

    int ambient_dim() const { return ambient_dim_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<Vec>& basis() const { return basis_; }

    bool is_zero() const { return basis_.empty(); }
    bool is_full() const { return dim() == ambient_dim_; }

    /// Building block used by span/sum/extend; keeps the invariants.
    friend int subspace_extend(Subspace& s, const std::vector<Vec>& vectors,
                               const ToleranceConfig& cfg);

private:
    int ambient_dim_ = 0;
    std::vector<Vec> basis_;
};

/// Orthonormal basis of the span of `vectors`. Vectors are processed in
/// order with two-pass projection-deflation; a vector whose deflated
/// component falls below rank_tol * ||v|| is discarded (zero vectors drop
/// silently). Throws InvalidArgument for ambient_dim < 1 or a length
/// mismatch.
Subspace span(int ambient_dim, const std::vector<Vec>& vectors,
              const ToleranceConfig& cfg);

/// Span of the union of bases.
Subspace subspace_sum(const Subspace& u, const Subspace& v,
                      const ToleranceConfig& cfg);

/// True iff every basis vector of v is within rank_tol of its projection
/// onto u.
bool subspace_contains(const Subspace& u, const Subspace& v,
                       const ToleranceConfig& cfg);

/// span{A x : x in basis of v}.
Subspace subspace_image(const ComplexMatrix& a, const Subspace& v,
                        const ToleranceConfig& cfg);

/// Distance of v from u: max over basis vectors of v of the norm of the
/// component orthogonal to u. The quantity behind subspace_contains and
/// the invariance audits.
double subspace_defect(const Subspace& u, const Subspace& v);

/// Matrix of the action induced by A on U/V in an orthonormal basis of the
/// orthogonal complement of V inside U; dimension dim U - dim V (>= 1).
/// Requires V inside U and both invariant under A within
/// residual_tol * (1 + ||A||_F); throws HypothesisError otherwise.
ComplexMatrix quotient_action(const ComplexMatrix& a, const Subspace& u,
                              const Subspace& v, const ToleranceConfig& cfg);

/// Linear span of n x n matrices with a basis orthonormal under the
/// Frobenius inner product <A, B> = tr(B^H A).
class MatrixSpace {
public:
    MatrixSpace() = default;
    explicit MatrixSpace(int ambient_dim);

    int ambient_dim() const { return ambient_dim_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<ComplexMatrix>& basis() const { return basis_; }

    friend int matspace_extend(MatrixSpace& s,
                               const std::vector<ComplexMatrix>& mats,
                               const ToleranceConfig& cfg);

private:
    int ambient_dim_ = 0;
    std::vector<ComplexMatrix> basis_;
};

/// Frobenius-orthonormal basis of the span of `mats`, insertion order,
/// same deflation rule as span().
MatrixSpace matspan(int ambient_dim, const std::vector<ComplexMatrix>& mats,
                    const ToleranceConfig& cfg);

/// Residual of m after projection onto s, relative gate
/// residual <= residual_tol * (1 + ||m||_F).
bool matspace_member(const ComplexMatrix& m, const MatrixSpace& s,
                     const ToleranceConfig& cfg);

/// The residual itself (absolute Frobenius norm of the deflated part).
double matspace_defect(const ComplexMatrix& m, const MatrixSpace& s);

} // namespace jtri

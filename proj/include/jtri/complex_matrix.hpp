#pragma once

#include <complex>
#include <vector>

#include "jtri/errors.hpp"

namespace jtri {

using cplx = std::complex<double>;

/// Dense square complex matrix, row-major, immutable by convention after
/// construction (all library operations return fresh values).
class ComplexMatrix {
public:
    ComplexMatrix() = default;

    /// Zero matrix of the given dimension (dim >= 1).
    explicit ComplexMatrix(int dim);

    /// From row-major entries; validates the size and that every entry is
    /// finite.
    ComplexMatrix(int dim, std::vector<cplx> entries);

    static ComplexMatrix identity(int dim);

    /// Matrix unit E_{ij} (0-based): 1 at (i, j), 0 elsewhere.
    static ComplexMatrix unit(int dim, int i, int j);

    static ComplexMatrix diagonal(const std::vector<cplx>& diag);

    int dim() const { return dim_; }

    cplx& at(int i, int j) { return entries_[static_cast<std::size_t>(i) * dim_ + j]; }
    const cplx& at(int i, int j) const {
        return entries_[static_cast<std::size_t>(i) * dim_ + j];
    }

    const std::vector<cplx>& entries() const { return entries_; }
    cplx* data() { return entries_.data(); }
    const cplx* data() const { return entries_.data(); }

    ComplexMatrix adjoint() const;
    ComplexMatrix transpose() const;
    ComplexMatrix conjugate() const;

    double frobenius_norm() const;
    double max_abs() const;

    ComplexMatrix& operator+=(const ComplexMatrix& rhs);
    ComplexMatrix& operator-=(const ComplexMatrix& rhs);
    ComplexMatrix& operator*=(cplx s);

private:
    int dim_ = 0;
    std::vector<cplx> entries_;
};

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator-(const ComplexMatrix& m);
ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(cplx s, ComplexMatrix m);

/// Sum of diagonal entries.
cplx trace(const ComplexMatrix& a);

/// {A, B} = AB + BA.
ComplexMatrix anticommutator(const ComplexMatrix& a, const ComplexMatrix& b);

/// [A, B] = AB - BA.
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);

/// tr(B^H A): the Frobenius inner product <A, B>.
cplx frobenius_dot(const ComplexMatrix& a, const ComplexMatrix& b);

/// Entrywise equality within tol. Exact equality is never assumed after
/// arithmetic.
bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b, double tol);

/// A^k by binary powering, k >= 0.
ComplexMatrix matrix_power(const ComplexMatrix& a, int k);

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b,
                      const char* op);

} // namespace jtri

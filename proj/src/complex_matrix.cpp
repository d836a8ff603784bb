#include "jtri/complex_matrix.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "jtri/kernels.hpp"

namespace jtri {

static void require_positive_dim(int dim) {
    if (dim < 1)
        throw InvalidArgument("matrix dimension must be >= 1, got " +
                              std::to_string(dim));
}

ComplexMatrix::ComplexMatrix(int dim) : dim_(dim) {
    require_positive_dim(dim);
    entries_.assign(static_cast<std::size_t>(dim) * dim, cplx(0.0, 0.0));
}

ComplexMatrix::ComplexMatrix(int dim, std::vector<cplx> entries)
    : dim_(dim), entries_(std::move(entries)) {
    require_positive_dim(dim);
    if (entries_.size() != static_cast<std::size_t>(dim) * dim)
        throw InvalidArgument("entry count does not match dim*dim");
    for (const cplx& z : entries_)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
            throw InvalidArgument("matrix entries must be finite");
}

ComplexMatrix ComplexMatrix::identity(int dim) {
    ComplexMatrix m(dim);
    for (int i = 0; i < dim; ++i)
        m.at(i, i) = cplx(1.0, 0.0);
    return m;
}

ComplexMatrix ComplexMatrix::unit(int dim, int i, int j) {
    require_positive_dim(dim);
    if (i < 0 || i >= dim || j < 0 || j >= dim)
        throw InvalidArgument("matrix unit index out of range");
    ComplexMatrix m(dim);
    m.at(i, j) = cplx(1.0, 0.0);
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(const std::vector<cplx>& diag) {
    ComplexMatrix m(static_cast<int>(diag.size()));
    for (int i = 0; i < m.dim(); ++i)
        m.at(i, i) = diag[static_cast<std::size_t>(i)];
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix r(dim_);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j)
            r.at(j, i) = std::conj(at(i, j));
    return r;
}

ComplexMatrix ComplexMatrix::transpose() const {
    ComplexMatrix r(dim_);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j)
            r.at(j, i) = at(i, j);
    return r;
}

ComplexMatrix ComplexMatrix::conjugate() const {
    ComplexMatrix r(dim_);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j)
            r.at(i, j) = std::conj(at(i, j));
    return r;
}

double ComplexMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const cplx& z : entries_)
        s += std::norm(z);
    return std::sqrt(s);
}

double ComplexMatrix::max_abs() const {
    double m = 0.0;
    for (const cplx& z : entries_)
        m = std::max(m, std::abs(z));
    return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
    require_same_dim(*this, rhs, "add");
    for (std::size_t i = 0; i < entries_.size(); ++i)
        entries_[i] += rhs.entries_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
    require_same_dim(*this, rhs, "subtract");
    for (std::size_t i = 0; i < entries_.size(); ++i)
        entries_[i] -= rhs.entries_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx s) {
    for (cplx& z : entries_)
        z *= s;
    return *this;
}

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) {
    lhs += rhs;
    return lhs;
}

ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) {
    lhs -= rhs;
    return lhs;
}

ComplexMatrix operator-(const ComplexMatrix& m) {
    ComplexMatrix r = m;
    r *= cplx(-1.0, 0.0);
    return r;
}

ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
    require_same_dim(lhs, rhs, "multiply");
    ComplexMatrix r(lhs.dim());
    kernels::gemm(lhs.dim(), lhs.dim(), lhs.dim(), lhs.data(), rhs.data(),
                  r.data());
    return r;
}

ComplexMatrix operator*(cplx s, ComplexMatrix m) {
    m *= s;
    return m;
}

cplx trace(const ComplexMatrix& a) {
    cplx s(0.0, 0.0);
    for (int i = 0; i < a.dim(); ++i)
        s += a.at(i, i);
    return s;
}

ComplexMatrix anticommutator(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_dim(a, b, "anticommutator");
    return a * b + b * a;
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_dim(a, b, "commutator");
    return a * b - b * a;
}

cplx frobenius_dot(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_dim(a, b, "frobenius_dot");
    return kernels::dot_conj(b.entries().size(), b.data(), a.data());
}

bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b, double tol) {
    if (a.dim() != b.dim())
        return false;
    for (std::size_t i = 0; i < a.entries().size(); ++i)
        if (std::abs(a.entries()[i] - b.entries()[i]) > tol)
            return false;
    return true;
}

ComplexMatrix matrix_power(const ComplexMatrix& a, int k) {
    if (k < 0)
        throw InvalidArgument("matrix_power needs k >= 0");
    ComplexMatrix result = ComplexMatrix::identity(a.dim());
    ComplexMatrix base = a;
    while (k > 0) {
        if (k & 1)
            result = result * base;
        k >>= 1;
        if (k > 0)
            base = base * base;
    }
    return result;
}

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b,
                      const char* op) {
    if (a.dim() != b.dim())
        throw DimensionMismatch(std::string(op) + ": dimensions " +
                                std::to_string(a.dim()) + " vs " +
                                std::to_string(b.dim()));
}

} // namespace jtri

#include "jtri/subspace.hpp"

#include <cmath>
#include <string>

#include "jtri/kernels.hpp"

namespace jtri {

namespace {

double vec_norm(const Vec& v) {
    double s = 0.0;
    for (const cplx& z : v)
        s += std::norm(z);
    return std::sqrt(s);
}

void deflate_against(Vec& v, const std::vector<Vec>& basis) {
    for (const Vec& q : basis) {
        const cplx c = kernels::dot_conj(q.size(), q.data(), v.data());
        for (std::size_t i = 0; i < v.size(); ++i)
            v[i] -= c * q[i];
    }
}

/// Two-pass MGS append. Returns true if v survived the rank_tol gate.
bool mgs_append(std::vector<Vec>& basis, Vec v, double rank_tol) {
    const double original = vec_norm(v);
    if (original == 0.0)
        return false;
    deflate_against(v, basis);
    deflate_against(v, basis);
    const double remaining = vec_norm(v);
    if (remaining <= rank_tol * original)
        return false;
    for (cplx& z : v)
        z /= remaining;
    basis.push_back(std::move(v));
    return true;
}

void require_ambient(int got, int want, const char* what) {
    if (got != want)
        throw DimensionMismatch(std::string(what) + ": ambient dimension " +
                                std::to_string(got) + " vs " +
                                std::to_string(want));
}

} // namespace

Subspace::Subspace(int ambient_dim) : ambient_dim_(ambient_dim) {
    if (ambient_dim < 1)
        throw InvalidArgument("ambient dimension must be >= 1");
}

Subspace Subspace::full(int ambient_dim) {
    Subspace s(ambient_dim);
    for (int i = 0; i < ambient_dim; ++i) {
        Vec e(static_cast<std::size_t>(ambient_dim), cplx(0.0, 0.0));
        e[static_cast<std::size_t>(i)] = cplx(1.0, 0.0);
        s.basis_.push_back(std::move(e));
    }
    return s;
}

int subspace_extend(Subspace& s, const std::vector<Vec>& vectors,
                    const ToleranceConfig& cfg) {
    int kept = 0;
    for (const Vec& v : vectors) {
        if (v.size() != static_cast<std::size_t>(s.ambient_dim_))
            throw DimensionMismatch("span: vector length mismatch");
        if (mgs_append(s.basis_, v, cfg.rank_tol))
            ++kept;
    }
    return kept;
}

Subspace span(int ambient_dim, const std::vector<Vec>& vectors,
              const ToleranceConfig& cfg) {
    Subspace s(ambient_dim);
    subspace_extend(s, vectors, cfg);
    return s;
}

Subspace subspace_sum(const Subspace& u, const Subspace& v,
                      const ToleranceConfig& cfg) {
    require_ambient(v.ambient_dim(), u.ambient_dim(), "subspace_sum");
    Subspace s = u;
    subspace_extend(s, v.basis(), cfg);
    return s;
}

double subspace_defect(const Subspace& u, const Subspace& v) {
    require_ambient(v.ambient_dim(), u.ambient_dim(), "subspace_defect");
    double worst = 0.0;
    for (const Vec& b : v.basis()) {
        Vec r = b;
        deflate_against(r, u.basis());
        worst = std::max(worst, vec_norm(r));
    }
    return worst;
}

bool subspace_contains(const Subspace& u, const Subspace& v,
                       const ToleranceConfig& cfg) {
    return subspace_defect(u, v) <= cfg.rank_tol;
}

Subspace subspace_image(const ComplexMatrix& a, const Subspace& v,
                        const ToleranceConfig& cfg) {
    require_ambient(v.ambient_dim(), a.dim(), "subspace_image");
    const int n = a.dim();
    // An image whose norm is below roundoff scale ||A|| ||x|| is a
    // mathematical zero; normalizing it would inject a noise direction.
    const double floor = cfg.rank_tol * a.frobenius_norm();
    std::vector<Vec> images;
    images.reserve(v.basis().size());
    for (const Vec& x : v.basis()) {
        Vec y(static_cast<std::size_t>(n), cplx(0.0, 0.0));
        for (int i = 0; i < n; ++i) {
            cplx s(0.0, 0.0);
            for (int j = 0; j < n; ++j)
                s += a.at(i, j) * x[static_cast<std::size_t>(j)];
            y[static_cast<std::size_t>(i)] = s;
        }
        if (vec_norm(y) <= floor)
            continue;
        images.push_back(std::move(y));
    }
    return span(n, images, cfg);
}

ComplexMatrix quotient_action(const ComplexMatrix& a, const Subspace& u,
                              const Subspace& v, const ToleranceConfig& cfg) {
    const int n = a.dim();
    require_ambient(u.ambient_dim(), n, "quotient_action");
    require_ambient(v.ambient_dim(), n, "quotient_action");
    if (!subspace_contains(u, v, cfg))
        throw HypothesisError("quotient_action: V is not contained in U");
    if (u.dim() <= v.dim())
        throw InvalidArgument("quotient_action: dim U must exceed dim V");

    const double invariance_gate = cfg.residual_tol * (1.0 + a.frobenius_norm());
    if (subspace_defect(u, subspace_image(a, u, cfg)) > invariance_gate)
        throw HypothesisError("quotient_action: U not invariant under A");
    if (!v.is_zero() &&
        subspace_defect(v, subspace_image(a, v, cfg)) > invariance_gate)
        throw HypothesisError("quotient_action: V not invariant under A");

    // Orthonormal basis of the complement of V inside U.
    std::vector<Vec> complement = v.basis();
    std::vector<Vec> gap;
    for (const Vec& x : u.basis()) {
        Vec r = x;
        deflate_against(r, complement);
        deflate_against(r, complement);
        const double nr = vec_norm(r);
        if (nr <= cfg.rank_tol)
            continue;
        for (cplx& z : r)
            z /= nr;
        complement.push_back(r);
        gap.push_back(std::move(r));
    }
    const int d = static_cast<int>(gap.size());
    if (d != u.dim() - v.dim())
        throw NumericalError("quotient_action: complement rank mismatch");

    ComplexMatrix q(d);
    for (int j = 0; j < d; ++j) {
        // A * w_j, then coefficients against the gap basis.
        Vec img(static_cast<std::size_t>(n), cplx(0.0, 0.0));
        for (int i = 0; i < n; ++i) {
            cplx s(0.0, 0.0);
            for (int l = 0; l < n; ++l)
                s += a.at(i, l) * gap[static_cast<std::size_t>(j)][static_cast<std::size_t>(l)];
            img[static_cast<std::size_t>(i)] = s;
        }
        for (int i = 0; i < d; ++i)
            q.at(i, j) = kernels::dot_conj(img.size(),
                                           gap[static_cast<std::size_t>(i)].data(),
                                           img.data());
    }
    return q;
}

MatrixSpace::MatrixSpace(int ambient_dim) : ambient_dim_(ambient_dim) {
    if (ambient_dim < 1)
        throw InvalidArgument("ambient dimension must be >= 1");
}

int matspace_extend(MatrixSpace& s, const std::vector<ComplexMatrix>& mats,
                    const ToleranceConfig& cfg) {
    int kept = 0;
    for (const ComplexMatrix& m : mats) {
        if (m.dim() != s.ambient_dim_)
            throw DimensionMismatch("matspan: matrix dimension mismatch");
        const double original = m.frobenius_norm();
        if (original == 0.0)
            continue;
        ComplexMatrix r = m;
        for (int pass = 0; pass < 2; ++pass) {
            for (const ComplexMatrix& q : s.basis_) {
                const cplx c = frobenius_dot(r, q);
                r -= c * q;
            }
        }
        const double remaining = r.frobenius_norm();
        if (remaining <= cfg.rank_tol * original)
            continue;
        r *= cplx(1.0 / remaining, 0.0);
        s.basis_.push_back(std::move(r));
        ++kept;
    }
    return kept;
}

MatrixSpace matspan(int ambient_dim, const std::vector<ComplexMatrix>& mats,
                    const ToleranceConfig& cfg) {
    MatrixSpace s(ambient_dim);
    matspace_extend(s, mats, cfg);
    return s;
}

double matspace_defect(const ComplexMatrix& m, const MatrixSpace& s) {
    if (m.dim() != s.ambient_dim())
        throw DimensionMismatch("matspace_defect: dimension mismatch");
    ComplexMatrix r = m;
    for (int pass = 0; pass < 2; ++pass) {
        for (const ComplexMatrix& q : s.basis()) {
            const cplx c = frobenius_dot(r, q);
            r -= c * q;
        }
    }
    return r.frobenius_norm();
}

bool matspace_member(const ComplexMatrix& m, const MatrixSpace& s,
                     const ToleranceConfig& cfg) {
    return matspace_defect(m, s) <=
           cfg.residual_tol * (1.0 + m.frobenius_norm());
}

} // namespace jtri

#include "jtri/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "jtri/lapack_backend.hpp"
#include "jtri/matrix_core.hpp"

namespace jtri {

std::vector<std::vector<int>> cluster_points(const std::vector<cplx>& pts,
                                             double radius) {
    const int n = static_cast<int>(pts.size());
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x)
            x = parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        return x;
    };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (std::abs(pts[static_cast<std::size_t>(i)] -
                         pts[static_cast<std::size_t>(j)]) <= radius) {
                const int ri = find(i), rj = find(j);
                if (ri != rj)
                    parent[static_cast<std::size_t>(std::max(ri, rj))] =
                        std::min(ri, rj);
            }
    std::vector<std::vector<int>> groups;
    std::vector<int> root_slot(static_cast<std::size_t>(n), -1);
    for (int i = 0; i < n; ++i) {
        const int r = find(i);
        if (root_slot[static_cast<std::size_t>(r)] < 0) {
            root_slot[static_cast<std::size_t>(r)] =
                static_cast<int>(groups.size());
            groups.emplace_back();
        }
        groups[static_cast<std::size_t>(root_slot[static_cast<std::size_t>(r)])]
            .push_back(i);
    }
    auto mean = [&](const std::vector<int>& g) {
        cplx s(0.0, 0.0);
        for (int i : g)
            s += pts[static_cast<std::size_t>(i)];
        return s / static_cast<double>(g.size());
    };
    std::sort(groups.begin(), groups.end(),
              [&](const std::vector<int>& a, const std::vector<int>& b) {
                  const cplx ma = mean(a), mb = mean(b);
                  if (ma.real() != mb.real())
                      return ma.real() < mb.real();
                  return ma.imag() < mb.imag();
              });
    return groups;
}

namespace {

cplx group_mean(const std::vector<cplx>& pts, const std::vector<int>& g) {
    cplx s(0.0, 0.0);
    for (int i : g)
        s += pts[static_cast<std::size_t>(i)];
    return s / static_cast<double>(g.size());
}

// Smallest distance between members of different groups.
double intercluster_gap(const std::vector<cplx>& pts,
                        const std::vector<std::vector<int>>& groups) {
    double gap = std::numeric_limits<double>::infinity();
    for (std::size_t a = 0; a < groups.size(); ++a)
        for (std::size_t b = a + 1; b < groups.size(); ++b)
            for (int i : groups[a])
                for (int j : groups[b])
                    gap = std::min(gap,
                                   std::abs(pts[static_cast<std::size_t>(i)] -
                                            pts[static_cast<std::size_t>(j)]));
    return gap;
}

void audit_decomposition(const ComplexMatrix& a, double scale,
                         const SpectralDecomposition& dec,
                         const ToleranceConfig& cfg) {
    const int n = a.dim();
    ComplexMatrix sum(n);
    for (const auto& c : dec.clusters)
        sum += c.projection;
    double pnorm = 1.0;
    for (const auto& c : dec.clusters)
        pnorm = std::max(pnorm, c.projection.frobenius_norm());
    const double gate = cfg.residual_tol * (1.0 + pnorm) * (1.0 + pnorm);
    if (!approx_equal(sum, ComplexMatrix::identity(n), gate))
        throw NumericalError("riesz: projections do not sum to identity");

    // Idempotency / annihilation / commutation. Full pair checks at small
    // size; adjacent pairs only for very large superoperator splits.
    const bool full = n <= 128;
    const std::size_t k = dec.clusters.size();
    for (std::size_t i = 0; i < k; ++i) {
        const ComplexMatrix& p = dec.clusters[i].projection;
        if (full || i < 8)
            if (!approx_equal(p * p, p, gate))
                throw NumericalError("riesz: projection not idempotent");
        if (!approx_equal(a * p, p * a,
                          cfg.residual_tol * (1.0 + scale) * (1.0 + pnorm)))
            throw NumericalError("riesz: projection does not commute with A");
        const std::size_t j_end = full ? k : std::min(k, i + 2);
        for (std::size_t j = i + 1; j < j_end; ++j)
            if ((p * dec.clusters[j].projection).frobenius_norm() > gate)
                throw NumericalError(
                    "riesz: projections do not mutually annihilate");
    }
}

} // namespace

// Shared back end: assemble projections from a Schur form plus an
// eigenvalue grouping (groups index into sc.w; reps are the cluster
// representatives reported in the result).
SpectralDecomposition assemble_projections(
    const ComplexMatrix& a, double scale, const lapack::Schur& sc,
    const std::vector<std::vector<int>>& groups, const std::vector<cplx>& reps,
    const ToleranceConfig& cfg) {
    const int n = a.dim();
    SpectralDecomposition dec;
    dec.matrix_dim = n;

    if (groups.size() == 1) {
        // Single cluster: the projection is the identity.
        dec.clusters.push_back({reps.front(), n, ComplexMatrix::identity(n)});
        return dec;
    }

    // One orthonormal generalized-eigenspace basis per cluster, assembled
    // into a single similarity S; P_c = S E_c S^{-1}.
    ComplexMatrix s_mat(n);
    std::vector<std::pair<int, int>> column_ranges;
    int col = 0;
    for (const auto& g : groups) {
        std::vector<int> select(static_cast<std::size_t>(n), 0);
        for (int idx : g)
            select[static_cast<std::size_t>(idx)] = 1;
        const auto basis = lapack::invariant_subspace_basis(sc, select);
        column_ranges.emplace_back(col, col + static_cast<int>(basis.size()));
        for (const auto& v : basis) {
            for (int i = 0; i < n; ++i)
                s_mat.at(i, col) = v[static_cast<std::size_t>(i)];
            ++col;
        }
    }
    if (col != n)
        throw NumericalError("riesz: eigenspace bases do not fill the space");
    const ComplexMatrix s_inv = lapack::inverse(s_mat);

    for (std::size_t c = 0; c < groups.size(); ++c) {
        const auto [lo, hi] = column_ranges[c];
        // P = S[:, lo:hi] * S^{-1}[lo:hi, :]
        ComplexMatrix p(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                cplx acc(0.0, 0.0);
                for (int l = lo; l < hi; ++l)
                    acc += s_mat.at(i, l) * s_inv.at(l, j);
                p.at(i, j) = acc;
            }
        dec.clusters.push_back({reps[c], hi - lo, std::move(p)});
    }

    audit_decomposition(a, scale, dec, cfg);
    return dec;
}

SpectralDecomposition riesz_decomposition(const ComplexMatrix& a,
                                          const ToleranceConfig& cfg,
                                          double scale_hint) {
    const double scale = scale_hint >= 0.0 ? scale_hint : operator_norm(a);
    const double radius = cfg.cluster_tol * (1.0 + scale);

    // A numerically nilpotent matrix has the single cluster {0} with
    // projection I. Deciding this through the dual nilpotency test first
    // matters: the computed eigenvalues of a dense nilpotent scatter like
    // eps^(1/n), which blind clustering would shatter into garbage.
    try {
        if (is_nilpotent(a, cfg)) {
            SpectralDecomposition dec;
            dec.matrix_dim = a.dim();
            dec.clusters.push_back(
                {cplx(0.0, 0.0), a.dim(), ComplexMatrix::identity(a.dim())});
            return dec;
        }
    } catch (const AmbiguousNilpotency&) {
        // borderline; fall through to clustering
    }

    const lapack::Schur sc = lapack::schur(a);
    const auto groups = cluster_points(sc.w, radius);

    if (groups.size() > 1) {
        const double gap = intercluster_gap(sc.w, groups);
        if (gap <= 2.0 * radius)
            throw ClusterAmbiguity(
                "riesz: eigenvalue clusters separated by " +
                std::to_string(gap) + " <= 2 * " + std::to_string(radius));
    }

    std::vector<cplx> reps;
    reps.reserve(groups.size());
    for (const auto& g : groups)
        reps.push_back(group_mean(sc.w, g));
    return assemble_projections(a, scale, sc, groups, reps, cfg);
}

ComplexMatrix kron_cs(const ComplexMatrix& x, const ComplexMatrix& y) {
    const int p = x.dim();
    const int q = y.dim();
    ComplexMatrix k(p * q);
#pragma omp parallel for schedule(static) if (p * q >= 256)
    for (int a = 0; a < p; ++a)
        for (int c = 0; c < q; ++c) {
            const int row = a * q + c;
            for (int b = 0; b < p; ++b) {
                const cplx xab = x.at(a, b);
                if (xab == cplx(0.0, 0.0))
                    continue;
                for (int d = 0; d < q; ++d)
                    k.at(row, b * q + d) = xab * y.at(c, d);
            }
        }
    return k;
}

ComplexMatrix ad_matrix(const ComplexMatrix& a) {
    const int n = a.dim();
    ComplexMatrix ad = kron_cs(ComplexMatrix::identity(n), a);
    ad -= kron_cs(a.transpose(), ComplexMatrix::identity(n));
    return ad;
}

namespace {

// Shared by ad_riesz / spectral_manifold: decomposition of ad(A) with the
// scale bound ||ad(A)|| <= 2 ||A||, then the cluster containing lambda.
const SpectralCluster& locate_ad_cluster(const SpectralDecomposition& dec,
                                         cplx lambda, double radius) {
    for (const auto& c : dec.clusters)
        if (std::abs(c.lambda - lambda) <= radius)
            return c;
    throw InvalidArgument(
        "lambda is not in the spectrum of ad(A) within cluster_tol");
}

} // namespace

SpectralDecomposition ad_riesz_all(const ComplexMatrix& a,
                                   const ToleranceConfig& cfg) {
    // The spectrum of ad(A) is contained in sigma(A) - sigma(A), so the
    // clusters of ad(A) are known in advance: the distinct differences of
    // A's clusters, with multiplicity sum m_alpha * m_beta. Assigning the
    // computed eigenvalues of the superoperator to the nearest difference
    // is far more robust than blind clustering: defective superoperator
    // eigenvalues scatter like eps^(1/index), which blind clustering at
    // any sane radius would shatter into garbage clusters.
    const SpectralDecomposition dec_a = riesz_decomposition(a, cfg);
    const double scale = 2.0 * operator_norm(a);
    const double radius = cfg.cluster_tol * (1.0 + scale);

    // Distinct differences with their expected multiplicities.
    std::vector<cplx> diff_values;
    for (const auto& alpha : dec_a.clusters)
        for (const auto& beta : dec_a.clusters)
            diff_values.push_back(alpha.lambda - beta.lambda);
    const auto diff_groups = cluster_points(diff_values, radius);
    if (diff_groups.size() > 1) {
        const double gap = intercluster_gap(diff_values, diff_groups);
        if (gap <= 2.0 * radius)
            throw ClusterAmbiguity(
                "ad_riesz: spectral differences separated by " +
                std::to_string(gap) + " <= 2 * " + std::to_string(radius));
    }
    const std::size_t k = dec_a.clusters.size();
    std::vector<cplx> reps;
    std::vector<int> expected_mult;
    for (const auto& g : diff_groups) {
        reps.push_back(group_mean(diff_values, g));
        int mult = 0;
        for (int flat : g) {
            const auto alpha = static_cast<std::size_t>(flat) / k;
            const auto beta = static_cast<std::size_t>(flat) % k;
            mult += dec_a.clusters[alpha].multiplicity *
                    dec_a.clusters[beta].multiplicity;
        }
        expected_mult.push_back(mult);
    }

    const ComplexMatrix ad = ad_matrix(a);
    const lapack::Schur sc = lapack::schur(ad);
    std::vector<std::vector<int>> groups(diff_groups.size());
    for (int i = 0; i < ad.dim(); ++i) {
        std::size_t nearest = 0;
        double best = std::abs(sc.w[static_cast<std::size_t>(i)] - reps[0]);
        for (std::size_t c = 1; c < reps.size(); ++c) {
            const double d = std::abs(sc.w[static_cast<std::size_t>(i)] - reps[c]);
            if (d < best) {
                best = d;
                nearest = c;
            }
        }
        groups[nearest].push_back(i);
    }
    for (std::size_t c = 0; c < groups.size(); ++c)
        if (static_cast<int>(groups[c].size()) != expected_mult[c])
            throw ClusterAmbiguity(
                "ad_riesz: superoperator eigenvalue counts do not match the "
                "multiplicities of the spectral differences; adjust "
                "tolerances");
    return assemble_projections(ad, scale, sc, groups, reps, cfg);
}

double ad_cluster_radius(const ComplexMatrix& a, const ToleranceConfig& cfg) {
    return cfg.cluster_tol * (1.0 + 2.0 * operator_norm(a));
}

ComplexMatrix ad_riesz(const ComplexMatrix& a, cplx lambda,
                       const ToleranceConfig& cfg) {
    const SpectralDecomposition dec = ad_riesz_all(a, cfg);
    return locate_ad_cluster(dec, lambda, ad_cluster_radius(a, cfg))
        .projection;
}

ComplexMatrix adproj_formula_from(const SpectralDecomposition& dec,
                                  cplx lambda, double radius) {
    const int nn = dec.matrix_dim * dec.matrix_dim;
    ComplexMatrix sum(nn);
    bool hit = false;
    for (const auto& alpha : dec.clusters)
        for (const auto& beta : dec.clusters) {
            if (std::abs(alpha.lambda - beta.lambda - lambda) > radius)
                continue;
            hit = true;
            // L(P_alpha) R(P_beta): B -> P_alpha B P_beta.
            sum += kron_cs(beta.projection.transpose(), alpha.projection);
        }
    if (!hit)
        throw InvalidArgument(
            "lambda is not a spectral difference of A within cluster_tol");
    return sum;
}

ComplexMatrix adproj_formula(const ComplexMatrix& a, cplx lambda,
                             const ToleranceConfig& cfg) {
    const double radius = cfg.cluster_tol * (1.0 + operator_norm(a));
    const SpectralDecomposition dec = riesz_decomposition(a, cfg);
    return adproj_formula_from(dec, lambda, radius);
}

MatrixSpace spectral_manifold(const ComplexMatrix& a, cplx lambda,
                              const ToleranceConfig& cfg) {
    const int n = a.dim();
    const SpectralDecomposition dec = ad_riesz_all(a, cfg);
    const double radius = ad_cluster_radius(a, cfg);
    const SpectralCluster& cluster = locate_ad_cluster(dec, lambda, radius);

    // Left singular vectors of the projection with sigma above the rank
    // cutoff span its range; an idempotent has singular values >= 1 on the
    // range, so the gap is structural.
    const lapack::Svd svd = lapack::svd(cluster.projection);
    const double top = svd.s.empty() ? 0.0 : svd.s.front();
    std::vector<ComplexMatrix> mats;
    for (int j = 0; j < n * n; ++j) {
        if (svd.s[static_cast<std::size_t>(j)] <= cfg.rank_tol * top)
            break;
        ComplexMatrix m(n);
        for (int col = 0; col < n; ++col)
            for (int row = 0; row < n; ++row)
                m.at(row, col) = svd.u.at(col * n + row, j);
        mats.push_back(std::move(m));
    }
    if (static_cast<int>(mats.size()) != cluster.multiplicity)
        throw NumericalError(
            "spectral_manifold: range rank does not match multiplicity");
    return matspan(n, mats, cfg);
}

} // namespace jtri

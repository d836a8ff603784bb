#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "jtri/matrix_core.hpp"
#include "jtri/rng.hpp"
#include "jtri/spectral.hpp"

#include "oracles.hpp"

using jtri::ComplexMatrix;
using jtri::cplx;
using jtri::SpectralDecomposition;

namespace {

const jtri::ToleranceConfig cfg;

// matches a cluster by representative
const jtri::SpectralCluster& cluster_at(const SpectralDecomposition& d,
                                        cplx lambda, double tol = 1e-6) {
    for (const auto& c : d.clusters)
        if (std::abs(c.lambda - lambda) <= tol)
            return c;
    throw std::runtime_error("no such cluster");
}

} // namespace

TEST_CASE("riesz decomposition of diag(1,2)") {
    const auto a = ComplexMatrix::diagonal({cplx(1, 0), cplx(2, 0)});
    const SpectralDecomposition d = jtri::riesz_decomposition(a, cfg);
    REQUIRE(d.clusters.size() == 2);
    CHECK(jtri::approx_equal(cluster_at(d, cplx(1, 0)).projection,
                             ComplexMatrix::diagonal({cplx(1, 0), cplx(0, 0)}),
                             1e-12));
    CHECK(jtri::approx_equal(cluster_at(d, cplx(2, 0)).projection,
                             ComplexMatrix::diagonal({cplx(0, 0), cplx(1, 0)}),
                             1e-12));
}

TEST_CASE("riesz decomposition of a nilpotent is the identity projection") {
    const ComplexMatrix nil(2, {cplx(0, 0), cplx(1, 0), cplx(0, 0), cplx(0, 0)});
    const SpectralDecomposition d = jtri::riesz_decomposition(nil, cfg);
    REQUIRE(d.clusters.size() == 1);
    CHECK(d.clusters[0].multiplicity == 2);
    CHECK(std::abs(d.clusters[0].lambda) < 1e-12);
    CHECK(jtri::approx_equal(d.clusters[0].projection,
                             ComplexMatrix::identity(2), 0.0));
}

TEST_CASE("riesz decomposition of [[1,1],[0,2]] (hand-derived)") {
    const ComplexMatrix a(2, {cplx(1, 0), cplx(1, 0), cplx(0, 0), cplx(2, 0)});
    const SpectralDecomposition d = jtri::riesz_decomposition(a, cfg);
    REQUIRE(d.clusters.size() == 2);
    // P1 = [[1,-1],[0,0]], P2 = [[0,1],[0,1]]; brute force: rank-one
    // right/left eigenvector outer products
    const ComplexMatrix p1(2, {cplx(1, 0), cplx(-1, 0), cplx(0, 0), cplx(0, 0)});
    const ComplexMatrix p2(2, {cplx(0, 0), cplx(1, 0), cplx(0, 0), cplx(1, 0)});
    CHECK(jtri::approx_equal(cluster_at(d, cplx(1, 0)).projection, p1, 1e-12));
    CHECK(jtri::approx_equal(cluster_at(d, cplx(2, 0)).projection, p2, 1e-12));
    CHECK(jtri::approx_equal(oracle::riesz_outer_product(a, {0}) +
                                 oracle::riesz_outer_product(a, {1}),
                             ComplexMatrix::identity(2), 1e-12));
}

TEST_CASE("riesz matches the outer-product oracle on random spectra") {
    jtri::Rng rng(51);
    for (int trial = 0; trial < 6; ++trial) {
        const int n = 4 + trial % 3;
        // well separated eigenvalues on a shifted grid
        std::vector<cplx> eigs;
        for (int i = 0; i < n; ++i)
            eigs.emplace_back(i + 0.3 * rng.uniform01(),
                              0.5 * i + 0.2 * rng.uniform01());
        const ComplexMatrix a = oracle::plant_spectrum(
            eigs, std::vector<bool>(static_cast<std::size_t>(n), false), 10.0,
            rng);
        const SpectralDecomposition d = jtri::riesz_decomposition(a, cfg);
        REQUIRE(d.clusters.size() == static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            // locate the member index of the oracle eigensystem closest to
            // the cluster representative
            const auto sys = jtri::lapack::eigensystem(a);
            const cplx rep = d.clusters[static_cast<std::size_t>(i)].lambda;
            int best = 0;
            for (int m = 1; m < n; ++m)
                if (std::abs(sys.values[static_cast<std::size_t>(m)] - rep) <
                    std::abs(sys.values[static_cast<std::size_t>(best)] - rep))
                    best = m;
            CHECK(jtri::approx_equal(
                d.clusters[static_cast<std::size_t>(i)].projection,
                oracle::riesz_outer_product(a, {best}), 1e-7));
        }
    }
}

TEST_CASE("riesz projection range matches the kernel-power oracle on a "
          "planted Jordan block") {
    // A = J2(0.5) + diag(2): cluster at 0.5 has multiplicity 2
    ComplexMatrix a(3);
    a.at(0, 0) = cplx(0.5, 0);
    a.at(0, 1) = cplx(1, 0);
    a.at(1, 1) = cplx(0.5, 0);
    a.at(2, 2) = cplx(2, 0);
    const SpectralDecomposition d = jtri::riesz_decomposition(a, cfg);
    REQUIRE(d.clusters.size() == 2);
    const auto& c = cluster_at(d, cplx(0.5, 0));
    CHECK(c.multiplicity == 2);
    // P fixes the generalized eigenspace (e1, e2) and kills e3
    ComplexMatrix shifted = a - cplx(0.5, 0) * ComplexMatrix::identity(3);
    CHECK(oracle::kernel_dim_of_power(shifted, 2, 1e-10) == 2);
    for (int j = 0; j < 2; ++j)
        for (int i = 0; i < 3; ++i)
            CHECK(std::abs(c.projection.at(i, j) - (i == j ? 1.0 : 0.0)) <
                  1e-12);
    CHECK(std::abs(c.projection.at(0, 2)) < 1e-9); // e3 component decoupled
    CHECK(std::abs(c.projection.at(2, 2)) < 1e-12);
}

TEST_CASE("cluster ambiguity is a hard error") {
    // separation strictly between the radius and twice the radius, and
    // large enough that the matrix is not nilpotent-within-tolerance
    jtri::ToleranceConfig wide = cfg;
    wide.cluster_tol = 1e-3;
    const auto a = ComplexMatrix::diagonal({cplx(0, 0), cplx(1.5e-3, 0)});
    CHECK_THROWS_AS(jtri::riesz_decomposition(a, wide), jtri::ClusterAmbiguity);
}

TEST_CASE("near-nilpotent input is one cluster, not an ambiguity") {
    const auto a = ComplexMatrix::diagonal({cplx(0, 0), cplx(1.5e-8, 0)});
    const SpectralDecomposition d = jtri::riesz_decomposition(a, cfg);
    CHECK(d.clusters.size() == 1);
    CHECK(jtri::approx_equal(d.clusters.front().projection,
                             ComplexMatrix::identity(2), 0.0));
}

TEST_CASE("ad_matrix") {
    CHECK(jtri::ad_matrix(ComplexMatrix::identity(3)).max_abs() == 0.0);

    const auto a = ComplexMatrix::diagonal({cplx(2, 0), cplx(1, 0)});
    const auto w = jtri::spectrum(jtri::ad_matrix(a));
    REQUIRE(w.size() == 4);
    CHECK(w[0].real() == doctest::Approx(-1.0));
    CHECK(std::abs(w[1]) < 1e-12);
    CHECK(std::abs(w[2]) < 1e-12);
    CHECK(w[3].real() == doctest::Approx(1.0));

    // ad(A) vec(B) = vec([A, B]) in column-stacking convention
    jtri::Rng rng(52);
    const auto x = jtri::gaussian_matrix(3, rng);
    const auto b = jtri::gaussian_matrix(3, rng);
    const ComplexMatrix ad = jtri::ad_matrix(x);
    const ComplexMatrix br = jtri::commutator(x, b);
    for (int col = 0; col < 3; ++col)
        for (int row = 0; row < 3; ++row) {
            cplx acc(0.0, 0.0);
            for (int c2 = 0; c2 < 3; ++c2)
                for (int r2 = 0; r2 < 3; ++r2)
                    acc += ad.at(col * 3 + row, c2 * 3 + r2) * b.at(r2, c2);
            CHECK(std::abs(acc - br.at(row, col)) < 1e-12);
        }
}

TEST_CASE("ad_riesz fixtures") {
    // A = I: ad = 0, single cluster at 0, projection = identity on matrices
    CHECK(jtri::approx_equal(
        jtri::ad_riesz(ComplexMatrix::identity(2), cplx(0, 0), cfg),
        ComplexMatrix::identity(4), 0.0));

    // A = diag(2,1), lambda = 1: selector of the E12 component
    const auto a = ComplexMatrix::diagonal({cplx(2, 0), cplx(1, 0)});
    ComplexMatrix selector(4);
    selector.at(2, 2) = cplx(1, 0); // vec index of entry (0,1) = 1*2+0
    CHECK(jtri::approx_equal(jtri::ad_riesz(a, cplx(1, 0), cfg), selector,
                             1e-12));

    CHECK_THROWS_AS(jtri::ad_riesz(a, cplx(0.5, 0), cfg),
                    jtri::InvalidArgument);

    // nilpotent A: ad is nilpotent, E_0 = everything
    const ComplexMatrix nil(2, {cplx(0, 0), cplx(1, 0), cplx(0, 0), cplx(0, 0)});
    CHECK(jtri::approx_equal(jtri::ad_riesz(nil, cplx(0, 0), cfg),
                             ComplexMatrix::identity(4), 0.0));
}

TEST_CASE("adproj formula fixtures (hand-derived)") {
    const auto a = ComplexMatrix::diagonal({cplx(2, 0), cplx(1, 0)});

    ComplexMatrix selector(4);
    selector.at(2, 2) = cplx(1, 0);
    CHECK(jtri::approx_equal(jtri::adproj_formula(a, cplx(1, 0), cfg), selector,
                             1e-12));

    ComplexMatrix diag_selector(4);
    diag_selector.at(0, 0) = cplx(1, 0);
    diag_selector.at(3, 3) = cplx(1, 0);
    CHECK(jtri::approx_equal(jtri::adproj_formula(a, cplx(0, 0), cfg),
                             diag_selector, 1e-12));

    CHECK(jtri::approx_equal(
        jtri::adproj_formula(ComplexMatrix::identity(2), cplx(0, 0), cfg),
        ComplexMatrix::identity(4), 1e-12));
}

TEST_CASE("adproj identity: formula equals the ad Riesz projection") {
    jtri::Rng rng(53);
    jtri::ToleranceConfig loose = cfg;
    loose.cluster_tol = 1e-4; // planted Jordan blocks scatter ~ (eps k)^(1/3)
    for (int trial = 0; trial < 4; ++trial) {
        const int n = 4 + trial;
        std::vector<cplx> eigs;
        std::vector<bool> chain(static_cast<std::size_t>(n), false);
        for (int i = 0; i < n; ++i)
            eigs.emplace_back(0.5 * i, (i % 2) ? 0.5 : 0.0);
        if (trial % 2 == 1) { // plant one 2-block
            eigs[1] = eigs[0];
            chain[0] = true;
        }
        const ComplexMatrix a = oracle::plant_spectrum(eigs, chain, 5.0, rng);
        const SpectralDecomposition ad_dec = jtri::ad_riesz_all(a, loose);
        const SpectralDecomposition a_dec = jtri::riesz_decomposition(a, loose);
        const double radius =
            loose.cluster_tol * (1.0 + jtri::operator_norm(a));
        ComplexMatrix sum(n * n);
        for (const auto& c : ad_dec.clusters) {
            const ComplexMatrix f =
                jtri::adproj_formula_from(a_dec, c.lambda, radius);
            CHECK((f - c.projection).max_abs() < 1e-7 * n * n);
            sum += c.projection;
        }
        // resolution of identity on matrix space
        CHECK(jtri::approx_equal(sum, ComplexMatrix::identity(n * n), 1e-8));
    }
}

TEST_CASE("spectrum of ad(A) sits inside sigma(A) - sigma(A)") {
    jtri::Rng rng(54);
    for (int trial = 0; trial < 5; ++trial) {
        const int n = 3 + trial % 4;
        const ComplexMatrix a = jtri::gaussian_matrix(n, rng);
        const auto sa = jtri::spectrum(a);
        for (const cplx& mu : jtri::spectrum(jtri::ad_matrix(a))) {
            double best = 1e300;
            for (const cplx& x : sa)
                for (const cplx& y : sa)
                    best = std::min(best, std::abs(x - y - mu));
            CHECK(best < 1e-6 * (1.0 + jtri::operator_norm(a)));
        }
    }
}

TEST_CASE("spectral manifolds") {
    const auto a = ComplexMatrix::diagonal({cplx(2, 0), cplx(1, 0)});
    const jtri::MatrixSpace m1 = jtri::spectral_manifold(a, cplx(1, 0), cfg);
    CHECK(m1.dim() == 1);
    CHECK(jtri::matspace_member(ComplexMatrix::unit(2, 0, 1), m1, cfg));

    const ComplexMatrix nil(2, {cplx(0, 0), cplx(1, 0), cplx(0, 0), cplx(0, 0)});
    CHECK(jtri::spectral_manifold(nil, cplx(0, 0), cfg).dim() == 4);

    const auto a3 =
        ComplexMatrix::diagonal({cplx(1, 0), cplx(2, 0), cplx(4, 0)});
    const jtri::MatrixSpace m3 = jtri::spectral_manifold(a3, cplx(3, 0), cfg);
    CHECK(m3.dim() == 1);
    CHECK(jtri::matspace_member(ComplexMatrix::unit(3, 2, 0), m3, cfg));
}

TEST_CASE("finrank shadow: nonzero-lambda manifolds consist of nilpotents") {
    jtri::Rng rng(55);
    jtri::ToleranceConfig loose = cfg;
    loose.cluster_tol = 1e-6;
    // difference-distinct (Sidon) eigenvalues so each nonzero manifold is
    // a single P_alpha B P_beta slot and squares to zero
    const std::vector<int> sidon{0, 1, 3, 7, 12};
    for (int trial = 0; trial < 3; ++trial) {
        std::vector<cplx> eigs;
        for (int v : sidon)
            eigs.emplace_back(0.4 * v, 0.0);
        const ComplexMatrix a = oracle::plant_spectrum(
            eigs, std::vector<bool>(eigs.size(), false), 5.0, rng);
        const SpectralDecomposition ad_dec = jtri::ad_riesz_all(a, loose);
        for (const auto& c : ad_dec.clusters) {
            if (std::abs(c.lambda) < 1e-6)
                continue;
            const jtri::MatrixSpace manifold =
                jtri::spectral_manifold(a, c.lambda, loose);
            for (const ComplexMatrix& b : manifold.basis())
                CHECK(jtri::is_nilpotent(b, loose));
            ComplexMatrix combo(a.dim());
            for (const ComplexMatrix& b : manifold.basis())
                combo += rng.complex_gaussian() * b;
            if (combo.frobenius_norm() > 0)
                CHECK(jtri::is_nilpotent(combo, loose));
        }
    }
}

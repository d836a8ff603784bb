#include <doctest.h>

#include <cmath>
#include <limits>

#include "jtri/matrix_core.hpp"
#include "jtri/rng.hpp"

#include "oracles.hpp"

using jtri::ComplexMatrix;
using jtri::cplx;

namespace {
const double inf = std::numeric_limits<double>::infinity();
}

TEST_CASE("anticommutator") {
    const auto e12_2 = ComplexMatrix::unit(2, 0, 1);
    CHECK(jtri::anticommutator(e12_2, e12_2).frobenius_norm() == 0.0);

    const auto e12 = ComplexMatrix::unit(3, 0, 1);
    const auto e23 = ComplexMatrix::unit(3, 1, 2);
    const auto e13 = ComplexMatrix::unit(3, 0, 2);
    // direct multiplication oracle: E12 E23 = E13, E23 E12 = 0
    const auto expect = oracle::naive_mul(e12, e23) + oracle::naive_mul(e23, e12);
    CHECK(jtri::approx_equal(expect, e13, 0.0));
    CHECK(jtri::approx_equal(jtri::anticommutator(e12, e23), e13, 1e-15));

    jtri::Rng rng(21);
    const auto m = jtri::gaussian_matrix(4, rng);
    CHECK(jtri::approx_equal(
        jtri::anticommutator(ComplexMatrix::identity(4), m),
        cplx(2.0, 0.0) * m, 1e-15));

    CHECK_THROWS_AS(jtri::anticommutator(e12_2, e13), jtri::DimensionMismatch);
}

TEST_CASE("commutator") {
    jtri::Rng rng(22);
    const auto a = jtri::gaussian_matrix(5, rng);
    CHECK(jtri::commutator(a, a).frobenius_norm() < 1e-14);

    const auto e12 = ComplexMatrix::unit(2, 0, 1);
    const auto e21 = ComplexMatrix::unit(2, 1, 0);
    const auto diag = ComplexMatrix::diagonal({cplx(1, 0), cplx(-1, 0)});
    CHECK(jtri::approx_equal(jtri::commutator(e12, e21), diag, 0.0));

    CHECK(jtri::commutator(ComplexMatrix::identity(5), a).frobenius_norm() <
          1e-14);
}

TEST_CASE("trace") {
    CHECK(jtri::trace(ComplexMatrix::unit(2, 0, 1)) == cplx(0.0, 0.0));
    CHECK(jtri::trace(ComplexMatrix::diagonal({cplx(1, 1), cplx(2, 0)})) ==
          cplx(3.0, 1.0));

    jtri::Rng rng(23);
    const auto a = jtri::gaussian_matrix(6, rng);
    const auto b = jtri::gaussian_matrix(6, rng);
    CHECK(std::abs(jtri::trace(a * b) - jtri::trace(b * a)) < 1e-8);
}

TEST_CASE("schatten norms") {
    const auto d34 = ComplexMatrix::diagonal({cplx(3, 0), cplx(4, 0)});
    CHECK(jtri::schatten_norm(d34, 1.0) == doctest::Approx(7.0).epsilon(1e-12));
    CHECK(jtri::schatten_norm(d34, 2.0) == doctest::Approx(5.0).epsilon(1e-12));
    CHECK(jtri::schatten_norm(d34, inf) == doctest::Approx(4.0).epsilon(1e-12));

    jtri::Rng rng(24);
    const auto u = jtri::random_unitary(6, rng);
    CHECK(jtri::schatten_norm(u, inf) == doctest::Approx(1.0).epsilon(1e-12));

    const auto a = jtri::gaussian_matrix(6, rng);
    CHECK(jtri::schatten_norm(a, inf) <=
          jtri::schatten_norm(a, 1.0) * (1.0 + 1e-14));

    CHECK_THROWS_AS(jtri::schatten_norm(a, 0.5), jtri::InvalidArgument);
}

TEST_CASE("spectrum") {
    const ComplexMatrix nil(2, {cplx(0, 0), cplx(1, 0), cplx(0, 0), cplx(0, 0)});
    for (const cplx& w : jtri::spectrum(nil))
        CHECK(std::abs(w) == 0.0);

    const ComplexMatrix invol(2,
                              {cplx(0, 0), cplx(1, 0), cplx(1, 0), cplx(0, 0)});
    const auto w_invol = jtri::spectrum(invol);
    CHECK(w_invol[0].real() == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(w_invol[1].real() == doctest::Approx(1.0).epsilon(1e-12));

    // companion matrix of x^2 - x - 1; roots (1 +- sqrt 5)/2
    const ComplexMatrix comp(2,
                             {cplx(0, 0), cplx(1, 0), cplx(1, 0), cplx(1, 0)});
    const auto w = jtri::spectrum(comp);
    CHECK(w[0].real() == doctest::Approx(-0.61803398874989485).epsilon(1e-12));
    CHECK(w[1].real() == doctest::Approx(1.6180339887498949).epsilon(1e-12));

    jtri::Rng rng(25);
    const auto a = jtri::gaussian_matrix(7, rng);
    cplx sum(0.0, 0.0);
    for (const cplx& lam : jtri::spectrum(a))
        sum += lam;
    CHECK(std::abs(sum - jtri::trace(a)) < 1e-8);
}

TEST_CASE("is_nilpotent") {
    const jtri::ToleranceConfig cfg;
    CHECK(jtri::is_nilpotent(ComplexMatrix::unit(2, 0, 1), cfg));
    CHECK_FALSE(jtri::is_nilpotent(
        ComplexMatrix::diagonal({cplx(0, 0), cplx(1e-3, 0)}), cfg));

    ComplexMatrix jordan3(3);
    jordan3.at(0, 1) = cplx(1, 0);
    jordan3.at(1, 2) = cplx(1, 0);
    CHECK(jtri::is_nilpotent(jordan3, cfg));

    const ComplexMatrix swap2(2,
                              {cplx(0, 0), cplx(1, 0), cplx(1, 0), cplx(0, 0)});
    CHECK_FALSE(jtri::is_nilpotent(swap2, cfg));

    // conjugated dense nilpotent: still recognized
    jtri::Rng rng(26);
    const auto s = jtri::conditioned_similarity(6, 10.0, rng);
    const auto g =
        s * jtri::strictly_upper_gaussian(6, rng) * jtri::lapack::inverse(s);
    CHECK(jtri::is_nilpotent(g, cfg));
    CHECK(std::abs(jtri::trace(g)) < 1e-10 * (1.0 + g.frobenius_norm()));
}

TEST_CASE("is_nilpotent ambiguity is a loud error") {
    // cyclic shift with an 1e-6 corner: C^8 = 1e-6 * I exactly, so the
    // power test accepts while the eigenvalues sit at 1e-6^(1/8) ~ 0.18.
    const int n = 8;
    ComplexMatrix c(n);
    for (int i = 0; i + 1 < n; ++i)
        c.at(i, i + 1) = cplx(1, 0);
    c.at(n - 1, 0) = cplx(1e-6, 0);
    CHECK_THROWS_AS(jtri::is_nilpotent(c, jtri::ToleranceConfig{}),
                    jtri::AmbiguousNilpotency);
}

TEST_CASE("norm inequality properties on random samples") {
    jtri::Rng rng(27);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 2 + trial % 7;
        const auto a = jtri::gaussian_matrix(n, rng);
        const auto b = jtri::gaussian_matrix(n, rng);
        const double slack = 1.0 + 1e-13;
        CHECK(jtri::schatten_norm(a, inf) <= jtri::schatten_norm(a, 1.0) * slack);
        CHECK(jtri::trace_norm(a * b) <=
              jtri::schatten_norm(b, inf) * jtri::trace_norm(a) * slack);
        CHECK(jtri::trace_norm(b * a) <=
              jtri::schatten_norm(b, inf) * jtri::trace_norm(a) * slack);
        // Hoelder word bound at p = q = 2
        CHECK(jtri::trace_norm(a * b) <=
              jtri::schatten_norm(a, 2.0) * jtri::schatten_norm(b, 2.0) * slack);
    }
}

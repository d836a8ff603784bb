#include <doctest.h>

#include <cmath>

#include "jtri/identities.hpp"
#include "jtri/instance.hpp"
#include "jtri/matrix_core.hpp"
#include "jtri/rng.hpp"

#include "oracles.hpp"

using jtri::AlgebraBasis;
using jtri::ComplexMatrix;
using jtri::cplx;
using jtri::IdentityReport;

namespace {
const jtri::ToleranceConfig cfg;
}

TEST_CASE("jordan identities: degenerate and identity inputs") {
    const ComplexMatrix z(3);
    IdentityReport r0 = jtri::check_jordan_identities(z, z, z, z);
    for (const auto& c : r0.checks)
        CHECK(c.residual == 0.0);

    const ComplexMatrix i3 = ComplexMatrix::identity(3);
    IdentityReport r1 = jtri::check_jordan_identities(i3, i3, i3, i3);
    for (const auto& c : r1.checks)
        CHECK(c.residual == 0.0);
    CHECK(r1.all_pass());
}

TEST_CASE("jordan identities hold on random quadruples (universal)") {
    jtri::Rng rng(42);
    for (int trial = 0; trial < 24; ++trial) {
        const int n = 2 + trial % 7;
        const auto a = jtri::gaussian_matrix(n, rng);
        const auto b = jtri::gaussian_matrix(n, rng);
        const auto c = jtri::gaussian_matrix(n, rng);
        const auto d = jtri::gaussian_matrix(n, rng);
        const IdentityReport r = jtri::check_jordan_identities(a, b, c, d);
        CHECK(r.all_pass());
        CHECK(r.worst().residual < 1e-12);
    }
}

TEST_CASE("trace words on strictly upper Jordan algebras") {
    const auto e12 = ComplexMatrix::unit(3, 0, 1);
    const auto e23 = ComplexMatrix::unit(3, 1, 2);
    const AlgebraBasis j =
        jtri::jordan_closure(jtri::make_generator_set({e12, e23}), cfg);
    const IdentityReport r = jtri::check_trace_words(j, cfg);
    CHECK(r.all_pass());
    CHECK(r.worst().residual == 0.0); // products of matrix units are exact

    AlgebraBasis j1;
    j1.kind = jtri::AlgebraKind::jordan;
    j1.space = jtri::matspan(2, {ComplexMatrix::unit(2, 0, 1)}, cfg);
    CHECK(jtri::check_trace_words(j1, cfg).all_pass());
}

TEST_CASE("trace words refuse non-nilpotent hypotheses") {
    AlgebraBasis bad;
    bad.kind = jtri::AlgebraKind::jordan;
    bad.space = jtri::matspan(
        2, {ComplexMatrix::diagonal({cplx(1, 0), cplx(0, 0)})}, cfg);
    CHECK_THROWS_AS(jtri::check_trace_words(bad, cfg), jtri::HypothesisError);

    // documented negative control: hypotheses matter
    const auto e12 = ComplexMatrix::unit(2, 0, 1);
    const auto e21 = ComplexMatrix::unit(2, 1, 0);
    CHECK(jtri::trace(e12 * e21) == cplx(1.0, 0.0));
}

TEST_CASE("materialized ideal trace pairing") {
    const auto e12 = ComplexMatrix::unit(3, 0, 1);
    const auto e23 = ComplexMatrix::unit(3, 1, 2);
    const AlgebraBasis j =
        jtri::jordan_closure(jtri::make_generator_set({e12, e23}), cfg);
    const IdentityReport r = jtri::check_ideal_trace_pairing(j, cfg);
    CHECK(r.all_pass());
}

TEST_CASE("cartan_T fixtures") {
    const ComplexMatrix nil(2, {cplx(0, 0), cplx(1, 0), cplx(0, 0), cplx(0, 0)});
    CHECK(jtri::cartan_T(nil, cfg).max_abs() == 0.0);

    const auto a = ComplexMatrix::diagonal({cplx(1, 1), cplx(0, 0)});
    const ComplexMatrix t = jtri::cartan_T(a, cfg);
    CHECK(jtri::approx_equal(
        t, ComplexMatrix::diagonal({cplx(1, -1), cplx(0, 0)}), 1e-12));
    CHECK(std::abs(jtri::trace(t * a) - cplx(2.0, 0.0)) < 1e-12);

    const ComplexMatrix m(2, {cplx(1, 0), cplx(1, 0), cplx(0, 0), cplx(2, 0)});
    const ComplexMatrix tm = jtri::cartan_T(m, cfg);
    CHECK(std::abs(jtri::trace(tm * m) - cplx(5.0, 0.0)) < 1e-10);
    // T = conj(1) P_1 + conj(2) P_2 with the hand-derived projections
    const ComplexMatrix p1(2, {cplx(1, 0), cplx(-1, 0), cplx(0, 0), cplx(0, 0)});
    const ComplexMatrix p2(2, {cplx(0, 0), cplx(1, 0), cplx(0, 0), cplx(1, 0)});
    CHECK(jtri::approx_equal(tm, p1 + cplx(2, 0) * p2, 1e-10));
}

TEST_CASE("cartan_T trace matches sum of |lambda|^2 on random matrices") {
    jtri::Rng rng(43);
    for (int trial = 0; trial < 5; ++trial) {
        const int n = 3 + trial;
        std::vector<cplx> eigs;
        for (int i = 0; i < n; ++i)
            eigs.emplace_back(0.7 * i - 1.0, 0.3 * (i % 3));
        const ComplexMatrix a = oracle::plant_spectrum(
            eigs, std::vector<bool>(eigs.size(), false), 8.0, rng);
        const ComplexMatrix t = jtri::cartan_T(a, cfg);
        double expect = 0.0;
        for (const cplx& lam : eigs)
            expect += std::norm(lam);
        CHECK(std::abs(jtri::trace(t * a) - expect) <
              1e-8 * (1.0 + a.frobenius_norm() * a.frobenius_norm()));
    }
}

TEST_CASE("cartan criterion: strictly upper passes, sl-type is a "
          "hypothesis violation") {
    AlgebraBasis strict3;
    strict3.kind = jtri::AlgebraKind::lie;
    strict3.space = jtri::matspan(
        3, {ComplexMatrix::unit(3, 0, 1), ComplexMatrix::unit(3, 1, 2),
            ComplexMatrix::unit(3, 0, 2)},
        cfg);
    const IdentityReport good = jtri::cartan_criterion(strict3, cfg);
    CHECK(good.all_pass());

    AlgebraBasis sl2;
    sl2.kind = jtri::AlgebraKind::lie;
    sl2.space = jtri::matspan(
        2, {ComplexMatrix::unit(2, 0, 1), ComplexMatrix::unit(2, 1, 0),
            ComplexMatrix::diagonal({cplx(1, 0), cplx(-1, 0)})},
        cfg);
    const IdentityReport bad = jtri::cartan_criterion(sl2, cfg);
    CHECK_FALSE(bad.checks.front().pass);
    CHECK(bad.checks.front().residual == 1.0); // tr(E12 E21) = 1 exactly
    CHECK(bad.checks.back().name.find("skipped") != std::string::npos);

    AlgebraBasis abelian;
    abelian.kind = jtri::AlgebraKind::lie;
    abelian.space = jtri::matspan(2, {ComplexMatrix::unit(2, 0, 1)}, cfg);
    CHECK(jtri::cartan_criterion(abelian, cfg).all_pass());
}

TEST_CASE("norm inequalities") {
    const auto a = ComplexMatrix::diagonal({cplx(3, 0), cplx(4, 0)});
    const IdentityReport r1 =
        jtri::check_norm_inequalities(a, ComplexMatrix::identity(2));
    CHECK(r1.all_pass());

    // equality case ||AB||_tr = ||A||_2 ||B||_2 for A = B = I
    const auto eye = ComplexMatrix::identity(2);
    const IdentityReport r2 = jtri::check_norm_inequalities(eye, eye);
    CHECK(r2.all_pass());

    jtri::Rng rng(7);
    for (int trial = 0; trial < 10; ++trial) {
        const auto x = jtri::gaussian_matrix(8, rng);
        const auto y = jtri::gaussian_matrix(8, rng);
        CHECK(jtri::check_norm_inequalities(x, y).all_pass());
    }
}

TEST_CASE("trace words pass on hidden-model closures") {
    const jtri::InstanceFile inst = jtri::make_hidden_instance(3, 6, 3, 30.0);
    const AlgebraBasis j =
        jtri::jordan_closure(jtri::to_generator_set(inst), cfg);
    const IdentityReport r = jtri::check_trace_words(j, cfg);
    CHECK(r.all_pass());
    const IdentityReport ri = jtri::check_ideal_trace_pairing(j, cfg);
    CHECK(ri.all_pass());
}

#include <doctest.h>

#include "jtri/algebra.hpp"
#include "jtri/instance.hpp"
#include "jtri/matrix_core.hpp"
#include "jtri/rng.hpp"

#include "oracles.hpp"

using jtri::AlgebraBasis;
using jtri::AlgebraKind;
using jtri::ComplexMatrix;
using jtri::cplx;

namespace {

const jtri::ToleranceConfig cfg;

jtri::GeneratorSet gens(std::vector<ComplexMatrix> ms) {
    return jtri::make_generator_set(std::move(ms));
}

AlgebraBasis lie_space(int dim, std::vector<ComplexMatrix> basis) {
    AlgebraBasis b;
    b.kind = AlgebraKind::lie;
    b.space = jtri::matspan(dim, basis, cfg);
    return b;
}

} // namespace

TEST_CASE("jordan_closure") {
    const auto e12 = ComplexMatrix::unit(3, 0, 1);
    const auto e23 = ComplexMatrix::unit(3, 1, 2);
    const auto e13 = ComplexMatrix::unit(3, 0, 2);

    CHECK(jtri::jordan_closure(gens({ComplexMatrix::unit(2, 0, 1)}), cfg)
              .space.dim() == 1);
    CHECK(jtri::jordan_closure(gens({ComplexMatrix::identity(4)}), cfg)
              .space.dim() == 1);

    // {E12, E23} = E13 and everything further vanishes
    const AlgebraBasis j = jtri::jordan_closure(gens({e12, e23}), cfg);
    CHECK(j.space.dim() == 3);
    CHECK(jtri::matspace_member(e13, j.space, cfg));
    // generation log is non-decreasing and ends stable
    for (std::size_t i = 1; i < j.generation_log.size(); ++i)
        CHECK(j.generation_log[i].second >= j.generation_log[i - 1].second);
    CHECK(j.generation_log.back().second ==
          j.generation_log[j.generation_log.size() - 2].second);
}

TEST_CASE("jordan closure contains powers of its members") {
    jtri::Rng rng(41);
    const auto g1 = jtri::strictly_upper_gaussian(4, rng);
    const auto g2 = jtri::strictly_upper_gaussian(4, rng);
    const AlgebraBasis j = jtri::jordan_closure(gens({g1, g2}), cfg);
    for (int trial = 0; trial < 5; ++trial) {
        ComplexMatrix member(4);
        for (const ComplexMatrix& b : j.space.basis())
            member += rng.complex_gaussian() * b;
        CHECK(jtri::matspace_member(member * member, j.space, cfg));
    }
}

TEST_CASE("lie_from_jordan") {
    const auto e12 = ComplexMatrix::unit(3, 0, 1);
    const auto e23 = ComplexMatrix::unit(3, 1, 2);
    const auto e13 = ComplexMatrix::unit(3, 0, 2);

    AlgebraBasis j1;
    j1.kind = AlgebraKind::jordan;
    j1.space = jtri::matspan(2, {ComplexMatrix::unit(2, 0, 1)}, cfg);
    CHECK(jtri::lie_from_jordan(j1, cfg).space.dim() == 1);

    AlgebraBasis j3;
    j3.kind = AlgebraKind::jordan;
    j3.space = jtri::matspan(3, {e12, e23, e13}, cfg);
    const AlgebraBasis l3 = jtri::lie_from_jordan(j3, cfg);
    CHECK(l3.space.dim() == 3); // [E12,E23] = E13 already present
    CHECK(l3.kind == AlgebraKind::lie);

    // dim-4 Jordan algebra whose Lie closure needs the bracket elements
    ComplexMatrix g1(4);
    g1.at(0, 1) = cplx(1, 0);
    g1.at(2, 3) = cplx(1, 0);
    const auto g2 = ComplexMatrix::unit(4, 1, 2);
    const AlgebraBasis j4 = jtri::jordan_closure(gens({g1, g2}), cfg);
    const AlgebraBasis l4 = jtri::lie_from_jordan(j4, cfg);
    // closure under commutators, verified pairwise
    for (std::size_t a = 0; a < l4.space.basis().size(); ++a)
        for (std::size_t b = a + 1; b < l4.space.basis().size(); ++b)
            CHECK(jtri::matspace_member(
                jtri::commutator(l4.space.basis()[a], l4.space.basis()[b]),
                l4.space, cfg));
}

TEST_CASE("lie_ideal_generated") {
    const auto e12 = ComplexMatrix::unit(3, 0, 1);
    const auto e23 = ComplexMatrix::unit(3, 1, 2);
    const auto e13 = ComplexMatrix::unit(3, 0, 2);
    const AlgebraBasis l = lie_space(3, {e12, e23, e13});

    // center: [E12, E13] = [E23, E13] = 0 by direct multiplication
    CHECK(oracle::naive_mul(e12, e13).frobenius_norm() == 0.0);
    CHECK(oracle::naive_mul(e13, e12).frobenius_norm() == 0.0);
    const AlgebraBasis center = jtri::lie_ideal_generated(l, {e13}, cfg);
    CHECK(center.space.dim() == 1);

    // [E23, E12] = -E13 pulls E13 into the ideal of E12
    const AlgebraBasis ideal = jtri::lie_ideal_generated(l, {e12}, cfg);
    CHECK(ideal.space.dim() == 2);
    CHECK(jtri::matspace_member(e13, ideal.space, cfg));
    CHECK(jtri::matspace_member(e12, ideal.space, cfg));

    // abelian algebra: the ideal of {B} is span{B}
    const AlgebraBasis abelian = lie_space(3, {e13});
    CHECK(jtri::lie_ideal_generated(abelian, {e13}, cfg).space.dim() == 1);

    // members outside L are rejected
    CHECK_THROWS_AS(jtri::lie_ideal_generated(l, {ComplexMatrix::unit(3, 1, 0)},
                                              cfg),
                    jtri::HypothesisError);

    // bracket-stability under the full basis of L
    for (const ComplexMatrix& b : l.space.basis())
        for (const ComplexMatrix& x : ideal.space.basis())
            CHECK(jtri::matspace_member(jtri::commutator(b, x), ideal.space,
                                        cfg));
}

TEST_CASE("derived_algebra") {
    const AlgebraBasis abelian = lie_space(3, {ComplexMatrix::unit(3, 0, 2)});
    CHECK(jtri::derived_algebra(abelian, cfg).space.dim() == 0);

    const AlgebraBasis strict3 =
        lie_space(3, {ComplexMatrix::unit(3, 0, 1), ComplexMatrix::unit(3, 1, 2),
                      ComplexMatrix::unit(3, 0, 2)});
    const AlgebraBasis d1 = jtri::derived_algebra(strict3, cfg);
    CHECK(d1.space.dim() == 1);
    CHECK(jtri::matspace_member(ComplexMatrix::unit(3, 0, 2), d1.space, cfg));

    // strictly upper 4x4: derived dims 6 -> 3 -> 0, strictly decreasing
    std::vector<ComplexMatrix> upper4;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            upper4.push_back(ComplexMatrix::unit(4, i, j));
    const AlgebraBasis strict4 = lie_space(4, upper4);
    const AlgebraBasis d4_1 = jtri::derived_algebra(strict4, cfg);
    const AlgebraBasis d4_2 = jtri::derived_algebra(d4_1, cfg);
    CHECK(strict4.space.dim() == 6);
    CHECK(d4_1.space.dim() == 3);
    CHECK(d4_2.space.dim() == 0);
}

TEST_CASE("associative_closure") {
    const auto e12 = ComplexMatrix::unit(3, 0, 1);
    const auto e23 = ComplexMatrix::unit(3, 1, 2);
    CHECK(jtri::associative_closure(gens({ComplexMatrix::unit(2, 0, 1)}), cfg)
              .space.dim() == 1);
    CHECK(jtri::associative_closure(gens({e12, e23}), cfg).space.dim() == 3);

    const auto e12_2 = ComplexMatrix::unit(2, 0, 1);
    const auto e21_2 = ComplexMatrix::unit(2, 1, 0);
    const AlgebraBasis full = jtri::associative_closure(gens({e12_2, e21_2}), cfg);
    CHECK(full.space.dim() == 4);
    CHECK(jtri::matspace_member(ComplexMatrix::unit(2, 0, 0), full.space, cfg));
    CHECK(jtri::matspace_member(ComplexMatrix::unit(2, 1, 1), full.space, cfg));
}

TEST_CASE("is_engel and lower_central_series") {
    const AlgebraBasis abelian = lie_space(3, {ComplexMatrix::unit(3, 0, 2)});
    CHECK(jtri::is_engel(abelian, cfg));
    const auto series_a = jtri::lower_central_series(abelian, cfg);
    CHECK(series_a.size() == 2);
    CHECK(series_a[0].dim() == 1);
    CHECK(series_a[1].dim() == 0);

    const AlgebraBasis strict3 =
        lie_space(3, {ComplexMatrix::unit(3, 0, 1), ComplexMatrix::unit(3, 1, 2),
                      ComplexMatrix::unit(3, 0, 2)});
    CHECK(jtri::is_engel(strict3, cfg));
    const auto series_s = jtri::lower_central_series(strict3, cfg);
    std::vector<int> dims;
    for (const auto& m : series_s)
        dims.push_back(m.dim());
    CHECK(dims == std::vector<int>{3, 1, 0});

    // 2x2 traceless: [L, L] = L, stabilizes nonzero
    const AlgebraBasis traceless =
        lie_space(2, {ComplexMatrix::diagonal({cplx(1, 0), cplx(-1, 0)}),
                      ComplexMatrix::unit(2, 0, 1), ComplexMatrix::unit(2, 1, 0)});
    CHECK_FALSE(jtri::is_engel(traceless, cfg));
    const auto series_t = jtri::lower_central_series(traceless, cfg);
    CHECK(series_t.size() == 2);
    CHECK(series_t[0].dim() == 3);
    CHECK(series_t[1].dim() == 3);
}

TEST_CASE("hidden-triangularization model properties") {
    const jtri::InstanceFile inst = jtri::make_hidden_instance(7, 5, 2, 10.0);
    const jtri::GeneratorSet g = jtri::to_generator_set(inst);

    const AlgebraBasis assoc = jtri::associative_closure(g, cfg);
    for (const ComplexMatrix& b : assoc.space.basis())
        CHECK(jtri::is_nilpotent(b, cfg));

    const AlgebraBasis jordan = jtri::jordan_closure(g, cfg);
    const AlgebraBasis lie = jtri::lie_from_jordan(jordan, cfg);
    CHECK(jtri::is_engel(lie, cfg));

    // main-theorem collapse: odd commutators of members stay in J
    jtri::Rng rng(42);
    auto pick = [&]() { return g.gens[rng.uniform_int(0, 1)]; };
    for (int trial = 0; trial < 4; ++trial) {
        const ComplexMatrix three =
            jtri::commutator(pick(), jtri::commutator(pick(), pick()));
        CHECK(jtri::matspace_member(three, jordan.space, cfg));
        const ComplexMatrix five = jtri::commutator(
            pick(), jtri::commutator(pick(), three));
        CHECK(jtri::matspace_member(five, jordan.space, cfg));
    }
}

#include "jtri/algebra.hpp"

#include <algorithm>
#include <cmath>

#include "jtri/kernels.hpp"

namespace jtri {

namespace {

enum class PairProduct { anticommutator, commutator, associative };

// Pair index lists for one closure round over a basis of size d.
std::vector<std::pair<int, int>> round_pairs(int d, PairProduct kind) {
    std::vector<std::pair<int, int>> pairs;
    switch (kind) {
    case PairProduct::anticommutator:
        for (int i = 0; i < d; ++i)
            for (int j = i; j < d; ++j)
                pairs.emplace_back(i, j);
        break;
    case PairProduct::commutator:
        for (int i = 0; i < d; ++i)
            for (int j = i + 1; j < d; ++j)
                pairs.emplace_back(i, j);
        break;
    case PairProduct::associative:
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
                pairs.emplace_back(i, j);
        break;
    }
    return pairs;
}

ComplexMatrix apply_product(const ComplexMatrix& a, const ComplexMatrix& b,
                            PairProduct kind) {
    switch (kind) {
    case PairProduct::anticommutator:
        return anticommutator(a, b);
    case PairProduct::commutator:
        return commutator(a, b);
    case PairProduct::associative:
    default:
        return a * b;
    }
}

// Products for a block of pairs, parallel across pairs.
std::vector<ComplexMatrix> block_products(
    const std::vector<ComplexMatrix>& basis,
    const std::vector<std::pair<int, int>>& pairs, std::size_t lo,
    std::size_t hi, PairProduct kind) {
    std::vector<ComplexMatrix> out(hi - lo);
    const auto count = static_cast<std::ptrdiff_t>(hi - lo);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t t = 0; t < count; ++t) {
        const auto& [i, j] = pairs[lo + static_cast<std::size_t>(t)];
        out[static_cast<std::size_t>(t)] =
            apply_product(basis[static_cast<std::size_t>(i)],
                          basis[static_cast<std::size_t>(j)], kind);
    }
    return out;
}

// Batched two-pass deflation of candidates against the current orthonormal
// basis; returns indices of candidates with residual > rank_tol * ||cand||.
// Purely a conservative pre-filter: survivors still run through the exact
// sequential MGS in matspace_extend.
std::vector<std::size_t> independent_candidates(
    const std::vector<ComplexMatrix>& cands, const MatrixSpace& space,
    double rank_tol) {
    std::vector<std::size_t> keep;
    const int d = space.dim();
    const std::size_t m = cands.size();
    if (m == 0)
        return keep;
    if (d == 0 || m < 16) {
        for (std::size_t i = 0; i < m; ++i)
            keep.push_back(i);
        return keep;
    }
    const int n = space.ambient_dim();
    const std::size_t len = static_cast<std::size_t>(n) * n;

    std::vector<cplx> flat_b(static_cast<std::size_t>(d) * len);
    for (int i = 0; i < d; ++i)
        std::copy(space.basis()[static_cast<std::size_t>(i)].entries().begin(),
                  space.basis()[static_cast<std::size_t>(i)].entries().end(),
                  flat_b.begin() + static_cast<std::size_t>(i) * len);

    std::vector<cplx> flat_r(m * len);
    std::vector<double> orig(m);
    for (std::size_t i = 0; i < m; ++i) {
        std::copy(cands[i].entries().begin(), cands[i].entries().end(),
                  flat_r.begin() + i * len);
        orig[i] = cands[i].frobenius_norm();
    }

    std::vector<cplx> coeff(m * static_cast<std::size_t>(d));
    for (int pass = 0; pass < 2; ++pass) {
        kernels::gemm_adj_b(static_cast<int>(m), static_cast<int>(len), d,
                            flat_r.data(), flat_b.data(), coeff.data());
        kernels::gemm_accum(static_cast<int>(m), d, static_cast<int>(len),
                            cplx(-1.0, 0.0), coeff.data(), flat_b.data(),
                            flat_r.data());
    }

    for (std::size_t i = 0; i < m; ++i) {
        double s = 0.0;
        const cplx* row = flat_r.data() + i * len;
        for (std::size_t l = 0; l < len; ++l)
            s += std::norm(row[l]);
        if (std::sqrt(s) > rank_tol * orig[i])
            keep.push_back(i);
    }
    return keep;
}

// Candidate chunk size for closure rounds, bounding scratch memory.
constexpr std::size_t kChunk = 2048;

// A product whose norm is below roundoff scale ||B_i|| ||B_j|| is a
// structural zero blurred by rounding; spanning it would inject a noise
// direction into the closure.
bool product_is_zero(const ComplexMatrix& prod, const ComplexMatrix& a,
                     const ComplexMatrix& b, double rank_tol) {
    return prod.frobenius_norm() <=
           rank_tol * a.frobenius_norm() * b.frobenius_norm();
}

// One breadth-first closure round: all pair products over the current
// basis, appended via filter + MGS. Returns the number of new elements.
int closure_round(MatrixSpace& space, PairProduct kind,
                  const ToleranceConfig& cfg) {
    const auto pairs = round_pairs(space.dim(), kind);
    int added = 0;
    for (std::size_t lo = 0; lo < pairs.size(); lo += kChunk) {
        const std::size_t hi = std::min(pairs.size(), lo + kChunk);
        auto prods = block_products(space.basis(), pairs, lo, hi, kind);
        std::vector<ComplexMatrix> nonzero;
        nonzero.reserve(prods.size());
        for (std::size_t t = 0; t < prods.size(); ++t) {
            const auto& [i, j] = pairs[lo + t];
            if (product_is_zero(prods[t],
                                space.basis()[static_cast<std::size_t>(i)],
                                space.basis()[static_cast<std::size_t>(j)],
                                cfg.rank_tol))
                continue;
            nonzero.push_back(std::move(prods[t]));
        }
        auto keep = independent_candidates(nonzero, space, cfg.rank_tol);
        std::vector<ComplexMatrix> survivors;
        survivors.reserve(keep.size());
        for (std::size_t idx : keep)
            survivors.push_back(std::move(nonzero[idx]));
        added += matspace_extend(space, survivors, cfg);
    }
    return added;
}

AlgebraBasis close_under(const GeneratorSet& g, PairProduct kind,
                         AlgebraKind out_kind, const ToleranceConfig& cfg) {
    AlgebraBasis result;
    result.kind = out_kind;
    result.space = matspan(g.dim, g.gens, cfg);
    result.generation_log.emplace_back(0, result.space.dim());
    const int cap = g.dim * g.dim + 1;
    for (int round = 1;; ++round) {
        if (round > cap)
            throw NumericalError("closure did not stabilize within dim^2 + 1 "
                                 "rounds");
        const int added = closure_round(result.space, kind, cfg);
        result.generation_log.emplace_back(round, result.space.dim());
        if (added == 0)
            break;
    }
    return result;
}

} // namespace

GeneratorSet make_generator_set(std::vector<ComplexMatrix> gens,
                                std::string label) {
    if (gens.empty())
        throw InvalidArgument("generator set must be nonempty");
    const int dim = gens.front().dim();
    for (const ComplexMatrix& g : gens)
        if (g.dim() != dim)
            throw DimensionMismatch("generators must share one dimension");
    return GeneratorSet{dim, std::move(gens), std::move(label)};
}

const char* to_string(AlgebraKind kind) {
    switch (kind) {
    case AlgebraKind::jordan:
        return "jordan";
    case AlgebraKind::lie:
        return "lie";
    case AlgebraKind::associative:
        return "associative";
    case AlgebraKind::ideal:
    default:
        return "ideal";
    }
}

AlgebraKind algebra_kind_from_string(const std::string& s) {
    if (s == "jordan")
        return AlgebraKind::jordan;
    if (s == "lie")
        return AlgebraKind::lie;
    if (s == "associative" || s == "assoc")
        return AlgebraKind::associative;
    if (s == "ideal")
        return AlgebraKind::ideal;
    throw InvalidArgument("unknown algebra kind: " + s);
}

AlgebraBasis jordan_closure(const GeneratorSet& g, const ToleranceConfig& cfg) {
    return close_under(g, PairProduct::anticommutator, AlgebraKind::jordan,
                       cfg);
}

AlgebraBasis associative_closure(const GeneratorSet& g,
                                 const ToleranceConfig& cfg) {
    return close_under(g, PairProduct::associative, AlgebraKind::associative,
                       cfg);
}

AlgebraBasis lie_from_jordan(const AlgebraBasis& j, const ToleranceConfig& cfg) {
    if (j.kind != AlgebraKind::jordan)
        throw InvalidArgument("lie_from_jordan expects a jordan-kind basis");
    AlgebraBasis result;
    result.kind = AlgebraKind::lie;
    result.space = j.space;
    result.generation_log.emplace_back(0, result.space.dim());
    const int added = closure_round(result.space, PairProduct::commutator, cfg);
    (void)added;
    result.generation_log.emplace_back(1, result.space.dim());

    // span(J + [J,J]) is commutator-closed as a theorem; the numerical
    // audit failing means tolerances broke down, not mathematics.
    const auto& basis = result.space.basis();
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t k = i + 1; k < basis.size(); ++k) {
            const ComplexMatrix br = commutator(basis[i], basis[k]);
            if (matspace_defect(br, result.space) >
                cfg.residual_tol * (1.0 + br.frobenius_norm()))
                throw NumericalError(
                    "lie_from_jordan: commutator closure verification failed");
        }
    return result;
}

AlgebraBasis lie_ideal_generated(const AlgebraBasis& l,
                                 const std::vector<ComplexMatrix>& s,
                                 const ToleranceConfig& cfg) {
    if (l.kind != AlgebraKind::lie && l.kind != AlgebraKind::ideal)
        throw InvalidArgument("lie_ideal_generated expects a lie/ideal basis");
    for (const ComplexMatrix& m : s)
        if (!matspace_member(m, l.space, cfg))
            throw HypothesisError(
                "lie_ideal_generated: a generator lies outside L");

    AlgebraBasis result;
    result.kind = AlgebraKind::ideal;
    result.space = matspan(l.space.ambient_dim(), s, cfg);
    result.generation_log.emplace_back(0, result.space.dim());

    std::vector<ComplexMatrix> frontier = result.space.basis();
    int round = 0;
    while (!frontier.empty()) {
        ++round;
        if (round > l.space.ambient_dim() * l.space.ambient_dim() + 1)
            throw NumericalError("ideal generation did not stabilize");
        std::vector<ComplexMatrix> brackets;
        brackets.reserve(l.space.basis().size() * frontier.size());
        for (const ComplexMatrix& b : l.space.basis())
            for (const ComplexMatrix& x : frontier) {
                ComplexMatrix br = commutator(b, x);
                if (product_is_zero(br, b, x, cfg.rank_tol))
                    continue;
                brackets.push_back(std::move(br));
            }
        const int before = result.space.dim();
        auto keep = independent_candidates(brackets, result.space, cfg.rank_tol);
        std::vector<ComplexMatrix> survivors;
        for (std::size_t idx : keep)
            survivors.push_back(std::move(brackets[idx]));
        matspace_extend(result.space, survivors, cfg);
        result.generation_log.emplace_back(round, result.space.dim());
        frontier.assign(result.space.basis().begin() + before,
                        result.space.basis().end());
    }
    return result;
}

AlgebraBasis derived_algebra(const AlgebraBasis& l, const ToleranceConfig& cfg) {
    if (l.kind != AlgebraKind::lie && l.kind != AlgebraKind::ideal)
        throw InvalidArgument("derived_algebra expects a lie/ideal basis");
    const auto& basis = l.space.basis();
    std::vector<ComplexMatrix> brackets;
    brackets.reserve(basis.size() * basis.size() / 2);
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j) {
            ComplexMatrix br = commutator(basis[i], basis[j]);
            if (product_is_zero(br, basis[i], basis[j], cfg.rank_tol))
                continue;
            brackets.push_back(std::move(br));
        }
    AlgebraBasis result;
    result.kind = AlgebraKind::ideal;
    result.space = matspan(l.space.ambient_dim(), brackets, cfg);
    result.generation_log.emplace_back(0, result.space.dim());
    return result;
}

std::vector<MatrixSpace> lower_central_series(const AlgebraBasis& l,
                                              const ToleranceConfig& cfg) {
    if (l.kind != AlgebraKind::lie && l.kind != AlgebraKind::ideal)
        throw InvalidArgument("lower_central_series expects a lie/ideal basis");
    std::vector<MatrixSpace> series{l.space};
    while (true) {
        const MatrixSpace& current = series.back();
        std::vector<ComplexMatrix> brackets;
        brackets.reserve(l.space.basis().size() * current.basis().size());
        for (const ComplexMatrix& b : l.space.basis())
            for (const ComplexMatrix& c : current.basis()) {
                ComplexMatrix br = commutator(b, c);
                if (product_is_zero(br, b, c, cfg.rank_tol))
                    continue;
                brackets.push_back(std::move(br));
            }
        MatrixSpace next = matspan(l.space.ambient_dim(), brackets, cfg);
        const int prev_dim = current.dim();
        series.push_back(std::move(next));
        if (series.back().dim() == 0 || series.back().dim() == prev_dim)
            break;
    }
    return series;
}

bool is_engel(const AlgebraBasis& l, const ToleranceConfig& cfg) {
    return lower_central_series(l, cfg).back().dim() == 0;
}

} // namespace jtri

#include "jtri/instance.hpp"

#include <cmath>
#include <string>

#include "jtri/rng.hpp"

namespace jtri {

namespace {

using lcplx = std::complex<long double>;

struct LMat {
    int n = 0;
    std::vector<lcplx> e;

    lcplx& at(int i, int j) { return e[static_cast<std::size_t>(i) * n + j]; }
    const lcplx& at(int i, int j) const {
        return e[static_cast<std::size_t>(i) * n + j];
    }
};

LMat lift(const ComplexMatrix& m) {
    LMat out;
    out.n = m.dim();
    out.e.reserve(m.entries().size());
    for (const cplx& z : m.entries())
        out.e.emplace_back(z.real(), z.imag());
    return out;
}

ComplexMatrix to_double(const LMat& m) {
    ComplexMatrix out(m.n);
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j)
            out.at(i, j) = cplx(static_cast<double>(m.at(i, j).real()),
                                static_cast<double>(m.at(i, j).imag()));
    return out;
}

LMat lmul(const LMat& a, const LMat& b) {
    LMat c;
    c.n = a.n;
    c.e.assign(a.e.size(), lcplx(0.0L, 0.0L));
    for (int i = 0; i < a.n; ++i)
        for (int l = 0; l < a.n; ++l) {
            const lcplx f = a.at(i, l);
            if (f == lcplx(0.0L, 0.0L))
                continue;
            for (int j = 0; j < a.n; ++j)
                c.at(i, j) += f * b.at(l, j);
        }
    return c;
}

// Gauss-Jordan with partial pivoting, long double.
LMat linverse(const LMat& a) {
    const int n = a.n;
    LMat work = a;
    LMat inv;
    inv.n = n;
    inv.e.assign(a.e.size(), lcplx(0.0L, 0.0L));
    for (int i = 0; i < n; ++i)
        inv.at(i, i) = lcplx(1.0L, 0.0L);
    for (int col = 0; col < n; ++col) {
        int pivot = col;
        long double best = std::abs(work.at(col, col));
        for (int r = col + 1; r < n; ++r)
            if (std::abs(work.at(r, col)) > best) {
                best = std::abs(work.at(r, col));
                pivot = r;
            }
        if (best == 0.0L)
            throw NumericalError("instance conjugator is singular");
        if (pivot != col)
            for (int j = 0; j < n; ++j) {
                std::swap(work.at(pivot, j), work.at(col, j));
                std::swap(inv.at(pivot, j), inv.at(col, j));
            }
        const lcplx d = work.at(col, col);
        for (int j = 0; j < n; ++j) {
            work.at(col, j) /= d;
            inv.at(col, j) /= d;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col)
                continue;
            const lcplx f = work.at(r, col);
            if (f == lcplx(0.0L, 0.0L))
                continue;
            for (int j = 0; j < n; ++j) {
                work.at(r, j) -= f * work.at(col, j);
                inv.at(r, j) -= f * inv.at(col, j);
            }
        }
    }
    return inv;
}

// Relative Frobenius mass of the strict-lower-plus-diagonal part.
long double lower_mass(const LMat& m) {
    long double low = 0.0L, all = 0.0L;
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j) {
            const long double sq = std::norm(m.at(i, j));
            all += sq;
            if (j <= i)
                low += sq;
        }
    return std::sqrt(low) / (1.0L + std::sqrt(all));
}

LMat lower_diag_part(const LMat& m) {
    LMat out;
    out.n = m.n;
    out.e.assign(m.e.size(), lcplx(0.0L, 0.0L));
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j <= i; ++j)
            out.at(i, j) = m.at(i, j);
    return out;
}

} // namespace

double hidden_conjugation_residual(const InstanceFile& instance) {
    if (!instance.metadata.hidden_conjugator)
        throw InvalidArgument("instance carries no hidden conjugator");
    const LMat s = lift(*instance.metadata.hidden_conjugator);
    const LMat s_inv = linverse(s);
    long double worst = 0.0L;
    for (const ComplexMatrix& g : instance.generators)
        worst = std::max(worst, lower_mass(lmul(lmul(s_inv, lift(g)), s)));
    return static_cast<double>(worst);
}

InstanceFile make_hidden_instance(std::uint64_t seed, int n, int k,
                                  double cond_cap) {
    if (n < 2)
        throw InvalidArgument("make_hidden_instance: n must be >= 2");
    if (k < 1)
        throw InvalidArgument("make_hidden_instance: k must be >= 1");
    if (cond_cap < 1.0)
        throw InvalidArgument("make_hidden_instance: cond_cap must be >= 1");

    Rng rng(seed);
    std::vector<ComplexMatrix> uppers;
    uppers.reserve(static_cast<std::size_t>(k));
    for (int t = 0; t < k; ++t)
        uppers.push_back(strictly_upper_gaussian(n, rng));
    const ComplexMatrix s = conditioned_similarity(n, cond_cap, rng);

    const LMat s_l = lift(s);
    const LMat s_inv_l = linverse(s_l);

    InstanceFile out;
    out.dim = n;
    out.metadata.seed = seed;
    out.metadata.model = "hidden-upper";
    out.metadata.hidden_conjugator = s;
    out.metadata.label = "seed=" + std::to_string(seed) +
                         " n=" + std::to_string(n) + " k=" + std::to_string(k) +
                         " cond_cap=" + std::to_string(cond_cap);

    constexpr long double target = 2.5e-13L;
    for (const ComplexMatrix& u : uppers) {
        // Conjugate in long double, then refine the double-rounded result
        // until its exact conjugation residual is safely under the audit.
        LMat g_l = lmul(lmul(s_l, lift(u)), s_inv_l);
        ComplexMatrix g = to_double(g_l);
        bool ok = false;
        for (int iter = 0; iter < 8; ++iter) {
            const LMat round_trip = lmul(lmul(s_inv_l, lift(g)), s_l);
            if (lower_mass(round_trip) <= target) {
                ok = true;
                break;
            }
            const LMat correction =
                lmul(lmul(s_l, lower_diag_part(round_trip)), s_inv_l);
            g_l = lift(g);
            for (std::size_t i = 0; i < g_l.e.size(); ++i)
                g_l.e[i] -= correction.e[i];
            g = to_double(g_l);
        }
        if (!ok)
            throw NumericalError(
                "make_hidden_instance: conjugation refinement did not reach "
                "the 1e-12 creation audit (condition cap too aggressive)");
        out.generators.push_back(std::move(g));
    }

    if (hidden_conjugation_residual(out) > 1e-12)
        throw NumericalError("make_hidden_instance: creation audit failed");
    return out;
}

GeneratorSet to_generator_set(const InstanceFile& instance) {
    return make_generator_set(instance.generators,
                              instance.metadata.label.empty()
                                  ? instance.metadata.model
                                  : instance.metadata.label);
}

} // namespace jtri

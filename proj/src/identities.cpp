#include "jtri/identities.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <random>

#include "jtri/kernels.hpp"
#include "jtri/lapack_backend.hpp"
#include "jtri/matrix_core.hpp"
#include "jtri/spectral.hpp"

namespace jtri {

void IdentityReport::add(std::string name, double residual, double threshold) {
    checks.push_back(
        {std::move(name), residual, threshold, residual <= threshold});
}

bool IdentityReport::all_pass() const {
    for (const IdentityCheck& c : checks)
        if (!c.pass)
            return false;
    return true;
}

const IdentityCheck& IdentityReport::worst() const {
    if (checks.empty())
        throw InvalidArgument("empty report has no worst entry");
    std::size_t w = 0;
    for (std::size_t i = 1; i < checks.size(); ++i)
        if (checks[i].residual > checks[w].residual)
            w = i;
    return checks[w];
}

IdentityReport check_jordan_identities(const ComplexMatrix& a,
                                       const ComplexMatrix& b,
                                       const ComplexMatrix& c,
                                       const ComplexMatrix& d) {
    require_same_dim(a, b, "check_jordan_identities");
    require_same_dim(a, c, "check_jordan_identities");
    require_same_dim(a, d, "check_jordan_identities");

    const double m = std::max(
        {a.frobenius_norm(), b.frobenius_norm(), c.frobenius_norm(),
         d.frobenius_norm()});
    auto scale = [m](int degree) { return std::pow(1.0 + m, degree); };

    IdentityReport report;

    { // 2ABA = {{A,B},A} - {A^2,B}
        const ComplexMatrix lhs = cplx(2.0, 0.0) * (a * b * a);
        const ComplexMatrix rhs =
            anticommutator(anticommutator(a, b), a) - anticommutator(a * a, b);
        report.add("2ABA = {{A,B},A} - {A^2,B}",
                   (lhs - rhs).frobenius_norm() / scale(3),
                   jordan_identity_tol);
    }
    { // 2(ABC + CBA) = {C,{B,A}} + {A,{B,C}} - {B,{C,A}}
        const ComplexMatrix lhs = cplx(2.0, 0.0) * (a * b * c + c * b * a);
        const ComplexMatrix rhs = anticommutator(c, anticommutator(b, a)) +
                                  anticommutator(a, anticommutator(b, c)) -
                                  anticommutator(b, anticommutator(c, a));
        report.add("2(ABC+CBA) = {C,{B,A}} + {A,{B,C}} - {B,{C,A}}",
                   (lhs - rhs).frobenius_norm() / scale(3),
                   jordan_identity_tol);
    }
    { // (ABC - CBA)^2 = (ABC + CBA)^2 - 2(ABC^2BA + CBA^2BC)
        const ComplexMatrix abc = a * b * c;
        const ComplexMatrix cba = c * b * a;
        const ComplexMatrix diff = abc - cba;
        const ComplexMatrix sum = abc + cba;
        const ComplexMatrix lhs = diff * diff;
        const ComplexMatrix rhs =
            sum * sum - cplx(2.0, 0.0) * (a * b * (c * c) * b * a +
                                          c * b * (a * a) * b * c);
        report.add("(ABC-CBA)^2 = (ABC+CBA)^2 - 2(ABC^2BA + CBA^2BC)",
                   (lhs - rhs).frobenius_norm() / scale(6),
                   jordan_identity_tol);
    }
    { // ABCD + BCDA = {A,B}CD + BC{A,D} - B{A,C}D
        const ComplexMatrix lhs = a * b * c * d + b * c * d * a;
        const ComplexMatrix rhs = anticommutator(a, b) * c * d +
                                  b * c * anticommutator(a, d) -
                                  b * anticommutator(a, c) * d;
        report.add("ABCD + BCDA = {A,B}CD + BC{A,D} - B{A,C}D",
                   (lhs - rhs).frobenius_norm() / scale(4),
                   jordan_identity_tol);
    }
    return report;
}

namespace {

constexpr int word_exhaustive_cap = 6;
constexpr int word_sample_count = 10000;
constexpr std::uint64_t word_sample_seed = 0x776f7264u; // fixed, documented

// All words of the given length over d letters, or a seeded uniform sample
// when the exhaustive count would be too large.
std::vector<std::vector<int>> enumerate_words(int d, int length) {
    std::vector<std::vector<int>> words;
    if (d <= word_exhaustive_cap) {
        std::vector<int> w(static_cast<std::size_t>(length), 0);
        while (true) {
            words.push_back(w);
            int pos = length - 1;
            while (pos >= 0 && ++w[static_cast<std::size_t>(pos)] == d) {
                w[static_cast<std::size_t>(pos)] = 0;
                --pos;
            }
            if (pos < 0)
                break;
        }
        return words;
    }
    std::mt19937_64 gen(word_sample_seed + static_cast<std::uint64_t>(length));
    words.reserve(word_sample_count);
    for (int s = 0; s < word_sample_count; ++s) {
        std::vector<int> w(static_cast<std::size_t>(length));
        for (int& letter : w)
            letter = static_cast<int>(gen() % static_cast<std::uint64_t>(d));
        words.push_back(std::move(w));
    }
    return words;
}

std::string word_name(const std::vector<int>& w) {
    std::string s = "[";
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i)
            s += ",";
        s += std::to_string(w[i]);
    }
    return s + "]";
}

} // namespace

IdentityReport check_trace_words(const AlgebraBasis& j,
                                 const ToleranceConfig& cfg) {
    if (j.kind != AlgebraKind::jordan)
        throw InvalidArgument("check_trace_words expects a jordan-kind basis");
    const auto& basis = j.space.basis();
    if (basis.empty())
        throw InvalidArgument("check_trace_words: empty algebra");
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (!is_nilpotent(basis[i], cfg))
            throw HypothesisError(
                "check_trace_words: basis element " + std::to_string(i) +
                " is not nilpotent; the trace-word lemma does not apply");

    const int d = static_cast<int>(basis.size());
    const int n = j.space.ambient_dim();
    std::vector<double> norms(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i)
        norms[static_cast<std::size_t>(i)] =
            basis[static_cast<std::size_t>(i)].frobenius_norm();

    IdentityReport report;
    for (int length = 1; length <= 4; ++length) {
        const auto words = enumerate_words(d, length);
        std::vector<double> rel(words.size());
        const auto count = static_cast<std::ptrdiff_t>(words.size());
#pragma omp parallel for schedule(static)
        for (std::ptrdiff_t t = 0; t < count; ++t) {
            const auto& w = words[static_cast<std::size_t>(t)];
            cplx tr;
            if (length == 1) {
                tr = trace(basis[static_cast<std::size_t>(w[0])]);
            } else {
                ComplexMatrix prod = basis[static_cast<std::size_t>(w[0])];
                for (int p = 1; p + 1 < length; ++p)
                    prod = prod * basis[static_cast<std::size_t>(
                                      w[static_cast<std::size_t>(p)])];
                tr = kernels::trace_of_product(
                    n, prod.data(),
                    basis[static_cast<std::size_t>(
                              w[static_cast<std::size_t>(length - 1)])]
                        .data());
            }
            double scale = 1.0;
            for (int p = 0; p < length; ++p)
                scale *= norms[static_cast<std::size_t>(
                    w[static_cast<std::size_t>(p)])];
            rel[static_cast<std::size_t>(t)] =
                scale > 0.0 ? std::abs(tr) / scale : std::abs(tr);
        }
        std::size_t worst = 0;
        for (std::size_t i = 1; i < rel.size(); ++i)
            if (rel[i] > rel[worst])
                worst = i;
        report.add("trace words length " + std::to_string(length) + " (" +
                       std::to_string(words.size()) + " words, worst " +
                       word_name(words[worst]) + ")",
                   rel[worst], cfg.residual_tol);
    }
    return report;
}

IdentityReport check_ideal_trace_pairing(const AlgebraBasis& j,
                                         const ToleranceConfig& cfg) {
    const AlgebraBasis l = lie_from_jordan(j, cfg);
    const AlgebraBasis ideal = lie_ideal_generated(l, j.space.basis(), cfg);
    const auto& basis = ideal.space.basis();
    double worst = 0.0;
    const int n = ideal.space.ambient_dim();
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t k = i; k < basis.size(); ++k)
            worst = std::max(worst,
                             std::abs(kernels::trace_of_product(
                                 n, basis[i].data(), basis[k].data())));
    IdentityReport report;
    report.add("ideal trace pairing (dim I = " +
                   std::to_string(ideal.space.dim()) + ")",
               worst, cfg.residual_tol);
    return report;
}

ComplexMatrix cartan_T(const ComplexMatrix& a, const ToleranceConfig& cfg) {
    const SpectralDecomposition dec = riesz_decomposition(a, cfg);
    const int n = a.dim();
    ComplexMatrix t(n);
    double expected_trace = 0.0;
    for (const auto& c : dec.clusters) {
        t += std::conj(c.lambda) * c.projection;
        expected_trace += c.multiplicity * std::norm(c.lambda);
    }
    const double scale = std::pow(1.0 + a.frobenius_norm(), 2);
    if ((t * a - a * t).frobenius_norm() > cfg.residual_tol * scale)
        throw NumericalError("cartan_T: T does not commute with A");
    if (std::abs(trace(t * a) - expected_trace) > cfg.residual_tol * scale)
        throw NumericalError(
            "cartan_T: tr(TA) does not match sum of |lambda|^2");
    return t;
}

IdentityReport cartan_criterion(const AlgebraBasis& l,
                                const ToleranceConfig& cfg) {
    if (l.kind != AlgebraKind::lie && l.kind != AlgebraKind::ideal)
        throw InvalidArgument("cartan_criterion expects a lie/ideal basis");
    const auto& basis = l.space.basis();
    const int n = l.space.ambient_dim();

    IdentityReport report;
    double pairing = 0.0;
    double scale = 1.0;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        scale = std::max(scale, basis[i].frobenius_norm() *
                                    basis[i].frobenius_norm());
        for (std::size_t k = i; k < basis.size(); ++k)
            pairing = std::max(pairing,
                               std::abs(kernels::trace_of_product(
                                   n, basis[i].data(), basis[k].data())));
    }
    report.add("trace-pairing hypothesis tr(AB) = 0 on L", pairing,
               cfg.residual_tol * scale);
    if (!report.checks.back().pass) {
        report.add("derived-algebra nilpotency (skipped: hypothesis violated)",
                   0.0, 0.0);
        return report;
    }

    const AlgebraBasis derived = derived_algebra(l, cfg);
    std::vector<ComplexMatrix> probes = derived.space.basis();
    if (!probes.empty()) {
        std::mt19937_64 gen(0x636172746eu); // fixed probe seed
        auto gauss = [&gen]() {
            constexpr double two_pi = 6.283185307179586476925286766559;
            const double u1 =
                (static_cast<double>(gen() >> 11) + 1.0) * 0x1p-53;
            const double u2 = static_cast<double>(gen() >> 11) * 0x1p-53;
            return std::sqrt(-2.0 * std::log(u1)) * std::cos(two_pi * u2);
        };
        for (int probe = 0; probe < 10; ++probe) {
            ComplexMatrix m(n);
            for (const ComplexMatrix& b : derived.space.basis()) {
                const cplx coeff(gauss(), gauss());
                m += coeff * b;
            }
            probes.push_back(std::move(m));
        }
    }
    double worst = 0.0;
    bool all_nilpotent = true;
    for (const ComplexMatrix& m : probes) {
        double rho = 0.0;
        for (const cplx& w : lapack::eigenvalues(m))
            rho = std::max(rho, std::abs(w));
        const double rel = rho / (1.0 + operator_norm(m));
        worst = std::max(worst, rel);
        all_nilpotent = all_nilpotent && is_nilpotent(m, cfg);
    }
    report.add("derived algebra consists of nilpotents (dim = " +
                   std::to_string(derived.space.dim()) + ")",
               worst, nilpotency_eigenvalue_gate(n, cfg));
    if (!all_nilpotent && report.checks.back().pass)
        throw NumericalError("cartan_criterion: inconsistent nilpotency audit");
    return report;
}

IdentityReport check_norm_inequalities(const ComplexMatrix& a,
                                       const ComplexMatrix& b) {
    require_same_dim(a, b, "check_norm_inequalities");
    constexpr double eps = std::numeric_limits<double>::epsilon();

    const double op_a = operator_norm(a);
    const double op_b = operator_norm(b);
    const double tr_a = trace_norm(a);
    const double hs_a = schatten_norm(a, 2.0);
    const double hs_b = schatten_norm(b, 2.0);
    const ComplexMatrix ab = a * b;
    const ComplexMatrix ba = b * a;

    IdentityReport report;
    auto add = [&report](const char* name, double lhs, double rhs) {
        const double scale = std::max(1.0, rhs);
        report.add(name, std::max(0.0, lhs - rhs), 10.0 * eps * scale);
    };
    add("||A|| <= ||A||_tr", op_a, tr_a);
    add("||AB|| <= ||B|| ||A||_tr", operator_norm(ab), op_b * tr_a);
    add("||BA|| <= ||B|| ||A||_tr", operator_norm(ba), op_b * tr_a);
    add("||AB||_tr <= ||B|| ||A||_tr", trace_norm(ab), op_b * tr_a);
    add("||BA||_tr <= ||B|| ||A||_tr", trace_norm(ba), op_b * tr_a);
    add("||AB||_tr <= ||A||_2 ||B||_2", trace_norm(ab), hs_a * hs_b);
    return report;
}

} // namespace jtri

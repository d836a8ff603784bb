#include "jtri/triangularize.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "jtri/kernels.hpp"
#include "jtri/lapack_backend.hpp"
#include "jtri/matrix_core.hpp"
#include "jtri/spectral.hpp"

namespace jtri {

std::vector<int> SubspaceChain::dims() const {
    std::vector<int> d;
    d.reserve(links.size());
    for (const Subspace& s : links)
        d.push_back(s.dim());
    return d;
}

bool SubspaceChain::is_maximal() const {
    if (static_cast<int>(links.size()) != ambient_dim + 1)
        return false;
    for (std::size_t i = 0; i < links.size(); ++i)
        if (links[i].dim() != static_cast<int>(i))
            return false;
    return true;
}

namespace {

// Images of every basis vector of `s` under every basis element of the
// algebra; their span is the next link down.
Subspace algebra_image(const MatrixSpace& alg, const Subspace& s,
                       const ToleranceConfig& cfg) {
    const int n = alg.ambient_dim();
    std::vector<Vec> images;
    images.reserve(alg.basis().size() * s.basis().size());
    for (const ComplexMatrix& b : alg.basis()) {
        // Images below roundoff scale ||B|| ||x|| are mathematical zeros.
        const double floor = cfg.rank_tol * b.frobenius_norm();
        for (const Vec& x : s.basis()) {
            Vec y(static_cast<std::size_t>(n), cplx(0.0, 0.0));
            double norm_sq = 0.0;
            for (int i = 0; i < n; ++i) {
                cplx acc(0.0, 0.0);
                for (int j = 0; j < n; ++j)
                    acc += b.at(i, j) * x[static_cast<std::size_t>(j)];
                y[static_cast<std::size_t>(i)] = acc;
                norm_sq += std::norm(acc);
            }
            if (std::sqrt(norm_sq) <= floor)
                continue;
            images.push_back(std::move(y));
        }
    }
    return span(n, images, cfg);
}

void audit_links_invariant(const SubspaceChain& chain, const GeneratorSet& g,
                           const ToleranceConfig& cfg, const char* who) {
    for (const Subspace& link : chain.links) {
        if (link.is_zero() || link.is_full())
            continue;
        for (const ComplexMatrix& gen : g.gens) {
            const Subspace img = subspace_image(gen, link, cfg);
            if (subspace_defect(link, img) >
                cfg.residual_tol * (1.0 + gen.frobenius_norm()))
                throw NumericalError(std::string(who) +
                                     ": link lost invariance");
        }
    }
}

} // namespace

SubspaceChain radical_chain(const GeneratorSet& g, const ToleranceConfig& cfg) {
    for (std::size_t i = 0; i < g.gens.size(); ++i)
        if (!is_nilpotent(g.gens[i], cfg))
            throw NotNilpotent("radical_chain: generator " + std::to_string(i) +
                               " is not nilpotent");

    const AlgebraBasis alg = associative_closure(g, cfg);
    const int n = g.dim;

    std::vector<Subspace> descending{Subspace::full(n)};
    while (!descending.back().is_zero()) {
        Subspace next = algebra_image(alg.space, descending.back(), cfg);
        if (next.dim() >= descending.back().dim()) {
            std::vector<int> dims;
            for (const Subspace& s : descending)
                dims.push_back(s.dim());
            throw ChainStall(
                "radical_chain: dimensions stalled at " +
                    std::to_string(next.dim()) +
                    " (generators are nilpotent but their associative "
                    "algebra is not)",
                std::move(dims), descending.back());
        }
        descending.push_back(std::move(next));
    }

    SubspaceChain chain;
    chain.ambient_dim = n;
    chain.links.assign(descending.rbegin(), descending.rend());
    audit_links_invariant(chain, g, cfg, "radical_chain");
    return chain;
}

SubspaceChain refine_to_maximal(const SubspaceChain& chain,
                                const GeneratorSet& g,
                                const ToleranceConfig& cfg) {
    const int n = chain.ambient_dim;
    if (chain.links.empty() || !chain.links.front().is_zero() ||
        !chain.links.back().is_full())
        throw InvalidArgument("refine_to_maximal: chain must run from 0 to "
                              "the full space");
    if (chain.is_maximal())
        return chain;

    SubspaceChain refined;
    refined.ambient_dim = n;
    refined.links.push_back(chain.links.front());

    for (std::size_t k = 0; k + 1 < chain.links.size(); ++k) {
        const Subspace& lower = chain.links[k];
        const Subspace& upper = chain.links[k + 1];
        const int gap = upper.dim() - lower.dim();
        if (gap < 1)
            throw InvalidArgument("refine_to_maximal: chain not strictly "
                                  "increasing");
        if (gap > 1) {
            // Refinement inside the gap is only invariant when every
            // generator annihilates the gap quotient (maps upper into
            // lower); audit that before inserting anything.
            for (const ComplexMatrix& gen : g.gens) {
                const Subspace img = subspace_image(gen, upper, cfg);
                if (subspace_defect(lower, img) >
                    cfg.residual_tol * (1.0 + gen.frobenius_norm()))
                    throw HypothesisError(
                        "refine_to_maximal: a generator acts nonzero on a "
                        "gap quotient; refinement would break invariance");
            }
        }

        // Lexicographically first orthonormal completion: project the
        // standard basis vectors onto the gap (inside upper, orthogonal
        // to lower) and keep survivors in order.
        std::vector<Vec> gap_basis;
        for (int e = 0; e < n && static_cast<int>(gap_basis.size()) < gap;
             ++e) {
            Vec v(static_cast<std::size_t>(n), cplx(0.0, 0.0));
            // Projection of e onto upper.
            for (const Vec& u : upper.basis()) {
                const cplx c = std::conj(u[static_cast<std::size_t>(e)]);
                for (int i = 0; i < n; ++i)
                    v[static_cast<std::size_t>(i)] += c * u[static_cast<std::size_t>(i)];
            }
            // Deflate against lower and previously kept gap vectors.
            for (int pass = 0; pass < 2; ++pass) {
                for (const Vec& q : lower.basis()) {
                    const cplx c = kernels::dot_conj(q.size(), q.data(), v.data());
                    for (std::size_t i = 0; i < v.size(); ++i)
                        v[i] -= c * q[i];
                }
                for (const Vec& q : gap_basis) {
                    const cplx c = kernels::dot_conj(q.size(), q.data(), v.data());
                    for (std::size_t i = 0; i < v.size(); ++i)
                        v[i] -= c * q[i];
                }
            }
            double norm = 0.0;
            for (const cplx& z : v)
                norm += std::norm(z);
            norm = std::sqrt(norm);
            if (norm <= std::sqrt(cfg.rank_tol))
                continue;
            for (cplx& z : v)
                z /= norm;
            gap_basis.push_back(std::move(v));
        }
        if (static_cast<int>(gap_basis.size()) != gap)
            throw NumericalError("refine_to_maximal: gap completion failed");

        for (int t = 0; t < gap; ++t) {
            std::vector<Vec> vecs = refined.links.back().basis();
            vecs.push_back(gap_basis[static_cast<std::size_t>(t)]);
            refined.links.push_back(span(n, vecs, cfg));
        }
    }

    if (!refined.is_maximal())
        throw NumericalError("refine_to_maximal: result not maximal");
    audit_links_invariant(refined, g, cfg, "refine_to_maximal");
    return refined;
}

ComplexMatrix conjugator_from_chain(const SubspaceChain& chain) {
    if (!chain.is_maximal())
        throw InvalidArgument("conjugator_from_chain: chain must be maximal");
    const int n = chain.ambient_dim;
    ComplexMatrix s(n);
    std::vector<Vec> columns;
    for (int k = 1; k <= n; ++k) {
        // The one new direction of link k against the previous columns.
        Vec picked;
        double best = -1.0;
        for (const Vec& candidate : chain.links[static_cast<std::size_t>(k)].basis()) {
            Vec v = candidate;
            for (int pass = 0; pass < 2; ++pass)
                for (const Vec& q : columns) {
                    const cplx c = kernels::dot_conj(q.size(), q.data(), v.data());
                    for (std::size_t i = 0; i < v.size(); ++i)
                        v[i] -= c * q[i];
                }
            double norm = 0.0;
            for (const cplx& z : v)
                norm += std::norm(z);
            norm = std::sqrt(norm);
            if (norm > best) {
                best = norm;
                picked = std::move(v);
            }
        }
        if (best <= 0.0)
            throw NumericalError("conjugator_from_chain: degenerate link");
        for (cplx& z : picked)
            z /= best;
        columns.push_back(std::move(picked));
    }
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i)
            s.at(i, j) = columns[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
    return s;
}

TriangularizationCertificate triangularize(const GeneratorSet& g,
                                           const ToleranceConfig& cfg) {
    const SubspaceChain rough = radical_chain(g, cfg);
    SubspaceChain maximal = refine_to_maximal(rough, g, cfg);
    ComplexMatrix s = conjugator_from_chain(maximal);
    const ComplexMatrix s_adj = s.adjoint();

    double residual = 0.0;
    for (const ComplexMatrix& gen : g.gens) {
        const ComplexMatrix t = s_adj * gen * s;
        double mass = 0.0;
        for (int i = 0; i < t.dim(); ++i)
            for (int j = 0; j <= i; ++j)
                mass = std::max(mass, std::abs(t.at(i, j)));
        residual = std::max(residual, mass / (1.0 + operator_norm(gen)));
    }
    if (residual > cfg.residual_tol)
        throw ResidualExceeded(
            "triangularize: strict-upper residual " + std::to_string(residual) +
            " exceeds tolerance; structural chain was found");
    return {std::move(maximal), std::move(s), residual};
}

namespace {

// Dickson criterion, char 0: the radical of a matrix algebra is the
// nullspace of its trace form. Returns a basis of rad as matrices.
std::vector<ComplexMatrix> algebra_radical(const MatrixSpace& alg,
                                           const ToleranceConfig& cfg) {
    const int d = alg.dim();
    const int n = alg.ambient_dim();
    if (d == 0)
        return {};
    // Gram of the (symmetric bilinear) trace form in the orthonormal basis.
    ComplexMatrix gram(d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            gram.at(i, j) = kernels::trace_of_product(
                n, alg.basis()[static_cast<std::size_t>(i)].data(),
                alg.basis()[static_cast<std::size_t>(j)].data());
    const lapack::Svd svd = lapack::svd(gram);
    const double top = svd.s.empty() ? 0.0 : svd.s.front();
    std::vector<ComplexMatrix> rad;
    for (int c = 0; c < d; ++c) {
        if (svd.s[static_cast<std::size_t>(c)] > cfg.rank_tol * std::max(top, 1.0))
            continue;
        // Right singular vector -> coefficient vector -> matrix.
        ComplexMatrix m(n);
        for (int b = 0; b < d; ++b) {
            const cplx coeff = std::conj(svd.vh.at(c, b));
            m += coeff * alg.basis()[static_cast<std::size_t>(b)];
        }
        rad.push_back(std::move(m));
    }
    return rad;
}

// Orthonormal basis of {v : Mv = 0} at an absolute singular-value
// threshold.
std::vector<Vec> svd_nullspace(const ComplexMatrix& m, double tau) {
    const lapack::Svd svd = lapack::svd(m);
    const int n = m.dim();
    std::vector<Vec> null_vectors;
    for (int r = 0; r < n; ++r) {
        if (svd.s[static_cast<std::size_t>(r)] > tau)
            continue;
        Vec v(static_cast<std::size_t>(n));
        for (int c = 0; c < n; ++c)
            v[static_cast<std::size_t>(c)] = std::conj(svd.vh.at(r, c));
        null_vectors.push_back(std::move(v));
    }
    return null_vectors;
}

// Commutant of the generators as matrices: the nullspace of
// N = sum ad(g)^H ad(g), since Nv = 0 iff every ad(g) kills v.
std::vector<ComplexMatrix> commutant_basis(const GeneratorSet& g,
                                           const ToleranceConfig& cfg) {
    const int n = g.dim;
    ComplexMatrix normal(n * n);
    for (const ComplexMatrix& gen : g.gens) {
        const ComplexMatrix ad = ad_matrix(gen);
        normal += ad.adjoint() * ad;
    }
    const double top = operator_norm(normal);
    std::vector<ComplexMatrix> out;
    for (const Vec& v : svd_nullspace(normal, cfg.rank_tol * std::max(top, 1.0))) {
        ComplexMatrix c(n);
        for (int col = 0; col < n; ++col)
            for (int row = 0; row < n; ++row)
                c.at(row, col) = v[static_cast<std::size_t>(col * n + row)];
        out.push_back(std::move(c));
    }
    return out;
}

bool witness_ok(const Subspace& w, const GeneratorSet& g,
                const ToleranceConfig& cfg) {
    if (w.dim() <= 0 || w.dim() >= g.dim)
        return false;
    for (const ComplexMatrix& gen : g.gens)
        if (subspace_defect(w, subspace_image(gen, w, cfg)) >
            cfg.residual_tol * (1.0 + gen.frobenius_norm()))
            return false;
    return true;
}

} // namespace

std::optional<Subspace> find_invariant_subspace(const GeneratorSet& g,
                                                const ToleranceConfig& cfg) {
    const int n = g.dim;

    bool all_zero = true;
    for (const ComplexMatrix& gen : g.gens)
        all_zero = all_zero && gen.frobenius_norm() == 0.0;
    if (all_zero) {
        if (n < 2)
            return std::nullopt;
        Vec e1(static_cast<std::size_t>(n), cplx(0.0, 0.0));
        e1[0] = cplx(1.0, 0.0);
        return span(n, {e1}, cfg);
    }

    bool all_nilpotent = true;
    for (const ComplexMatrix& gen : g.gens) {
        try {
            all_nilpotent = all_nilpotent && is_nilpotent(gen, cfg);
        } catch (const AmbiguousNilpotency&) {
            all_nilpotent = false;
        }
        if (!all_nilpotent)
            break;
    }
    if (all_nilpotent) {
        try {
            const SubspaceChain chain = radical_chain(g, cfg);
            const Subspace& first = chain.links[1];
            if (!first.is_full() && witness_ok(first, g, cfg))
                return first;
        } catch (const ChainStall&) {
            // elementwise nilpotent but the algebra is not; fall through
        }
    }

    const AlgebraBasis alg = associative_closure(g, cfg);
    if (alg.space.dim() == n * n)
        return std::nullopt; // Burnside: the closure is everything

    // Joint kernel of the closure: nullspace of sum B^H B.
    {
        ComplexMatrix normal(n);
        for (const ComplexMatrix& b : alg.space.basis())
            normal += b.adjoint() * b;
        const double top = operator_norm(normal);
        const auto null_vectors =
            svd_nullspace(normal, cfg.rank_tol * std::max(top, 1.0));
        if (!null_vectors.empty()) {
            const Subspace k = span(n, null_vectors, cfg);
            if (witness_ok(k, g, cfg))
                return k;
        }
    }

    // Range of the closure.
    {
        const Subspace r = algebra_image(alg.space, Subspace::full(n), cfg);
        if (witness_ok(r, g, cfg))
            return r;
    }

    // Radical of the closure: rad * X is invariant, nonzero and proper.
    {
        const auto rad = algebra_radical(alg.space, cfg);
        if (!rad.empty()) {
            std::vector<Vec> images;
            for (const ComplexMatrix& r : rad) {
                const double floor = cfg.rank_tol * r.frobenius_norm();
                for (int j = 0; j < n; ++j) {
                    Vec v(static_cast<std::size_t>(n));
                    double norm_sq = 0.0;
                    for (int i = 0; i < n; ++i) {
                        v[static_cast<std::size_t>(i)] = r.at(i, j);
                        norm_sq += std::norm(r.at(i, j));
                    }
                    if (std::sqrt(norm_sq) <= floor)
                        continue;
                    images.push_back(std::move(v));
                }
            }
            const Subspace w = span(n, images, cfg);
            if (witness_ok(w, g, cfg))
                return w;
        }
    }

    // Unital semisimple proper closure: the commutant exceeds the scalars;
    // any eigenspace of a non-scalar commuting element is invariant.
    {
        const auto comm = commutant_basis(g, cfg);
        const ComplexMatrix id = ComplexMatrix::identity(n);
        ComplexMatrix best(n);
        double best_norm = 0.0;
        for (const ComplexMatrix& c : comm) {
            ComplexMatrix deflated = c;
            deflated -= (trace(c) / static_cast<double>(n)) * id;
            const double norm = deflated.frobenius_norm();
            if (norm > best_norm) {
                best_norm = norm;
                best = std::move(deflated);
            }
        }
        if (best_norm > cfg.rank_tol) {
            const double radius =
                cfg.cluster_tol * (1.0 + best.frobenius_norm());
            const std::vector<cplx> eigs = lapack::eigenvalues(best);
            const auto groups = cluster_points(eigs, radius);
            for (const auto& group : groups) {
                cplx rep(0.0, 0.0);
                for (int idx : group)
                    rep += eigs[static_cast<std::size_t>(idx)];
                rep /= static_cast<double>(group.size());
                ComplexMatrix shifted = best;
                shifted -= rep * id;
                const auto kernel = svd_nullspace(
                    shifted, radius * std::sqrt(static_cast<double>(n)));
                if (kernel.empty())
                    continue;
                const Subspace w = span(n, kernel, cfg);
                if (witness_ok(w, g, cfg))
                    return w;
            }
        }
    }

    throw NumericalError(
        "find_invariant_subspace: the closure is proper so a witness exists, "
        "but every constructive route failed; adjust tolerances");
}

} // namespace jtri

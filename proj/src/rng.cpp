#include "jtri/rng.hpp"

#include <cmath>

#include "jtri/kernels.hpp"

namespace jtri {

int Rng::uniform_int(int lo, int hi) {
    if (hi < lo)
        throw InvalidArgument("uniform_int: empty range");
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t r;
    do {
        r = next_u64();
    } while (r >= limit);
    return lo + static_cast<int>(r % span);
}

ComplexMatrix gaussian_matrix(int n, Rng& rng) {
    ComplexMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m.at(i, j) = rng.complex_gaussian();
    return m;
}

ComplexMatrix strictly_upper_gaussian(int n, Rng& rng) {
    ComplexMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            m.at(i, j) = rng.complex_gaussian();
    return m;
}

ComplexMatrix random_unitary(int n, Rng& rng) {
    const ComplexMatrix g = gaussian_matrix(n, rng);
    ComplexMatrix q(n);
    // Column MGS; a Gaussian matrix is almost surely full rank, and the
    // positive-real R diagonal makes the factor Haar distributed.
    for (int j = 0; j < n; ++j) {
        std::vector<cplx> v(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            v[static_cast<std::size_t>(i)] = g.at(i, j);
        for (int pass = 0; pass < 2; ++pass)
            for (int p = 0; p < j; ++p) {
                cplx c(0.0, 0.0);
                for (int i = 0; i < n; ++i)
                    c += std::conj(q.at(i, p)) * v[static_cast<std::size_t>(i)];
                for (int i = 0; i < n; ++i)
                    v[static_cast<std::size_t>(i)] -= c * q.at(i, p);
            }
        double norm = 0.0;
        for (const cplx& z : v)
            norm += std::norm(z);
        norm = std::sqrt(norm);
        if (norm == 0.0)
            throw NumericalError("random_unitary: degenerate draw");
        for (int i = 0; i < n; ++i)
            q.at(i, j) = v[static_cast<std::size_t>(i)] / norm;
    }
    return q;
}

ComplexMatrix conditioned_similarity(int n, double cond_cap, Rng& rng) {
    if (cond_cap < 1.0)
        throw InvalidArgument("conditioned_similarity: cond_cap must be >= 1");
    const ComplexMatrix u = random_unitary(n, rng);
    const ComplexMatrix v = random_unitary(n, rng);
    const double half_log = 0.5 * std::log(cond_cap);
    ComplexMatrix scaled = v.adjoint();
    for (int i = 0; i < n; ++i) {
        const double sigma =
            std::exp((2.0 * rng.uniform01() - 1.0) * half_log);
        for (int j = 0; j < n; ++j)
            scaled.at(i, j) *= sigma;
    }
    return u * scaled;
}

} // namespace jtri

#pragma once

#include <cstdint>
#include <random>

#include "jtri/complex_matrix.hpp"

namespace jtri {

/// Deterministic random source: mt19937_64 with fixed derivations so that
/// fixtures are portable across platforms and library versions. Uniforms
/// take the top 53 bits; gaussians are Box-Muller on two fresh uniforms
/// (no cached spare). Standard-library distributions are never used:
/// their output is implementation-defined.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    /// Uniform in (0, 1].
    double uniform01() {
        return (static_cast<double>(gen_() >> 11) + 1.0) * 0x1p-53;
    }

    /// Standard normal via Box-Muller.
    double gaussian() {
        constexpr double two_pi = 6.283185307179586476925286766559;
        const double u1 = uniform01();
        const double u2 = (static_cast<double>(gen_() >> 11)) * 0x1p-53;
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(two_pi * u2);
    }

    /// Standard complex normal, E|z|^2 = 1.
    cplx complex_gaussian() {
        const double re = gaussian();
        const double im = gaussian();
        return cplx(re * 0.70710678118654752440, im * 0.70710678118654752440);
    }

    /// Uniform integer in [lo, hi].
    int uniform_int(int lo, int hi);

private:
    std::mt19937_64 gen_;
};

/// n x n matrix of standard complex normals.
ComplexMatrix gaussian_matrix(int n, Rng& rng);

/// Strictly upper triangular with standard complex normal entries.
ComplexMatrix strictly_upper_gaussian(int n, Rng& rng);

/// Haar-ish unitary: modified Gram-Schmidt QR of a Gaussian matrix with
/// positive real diagonal of R.
ComplexMatrix random_unitary(int n, Rng& rng);

/// U diag(sigma) V^H with sigma log-uniform in [cap^-1/2, cap^1/2]:
/// condition number at most cond_cap, exactly unitary at cond_cap = 1.
ComplexMatrix conditioned_similarity(int n, double cond_cap, Rng& rng);

} // namespace jtri

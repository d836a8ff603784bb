#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "jtri/algebra.hpp"
#include "jtri/complex_matrix.hpp"

namespace jtri {

struct InstanceMetadata {
    std::uint64_t seed = 0;
    std::string model;
    std::optional<ComplexMatrix> hidden_conjugator;
    std::string label;
};

/// On-disk problem instance. When hidden_conjugator is present it is
/// invertible and conjugates every generator to strictly upper triangular
/// form within 1e-12 (relative), guaranteed at creation: the conjugator is
/// the instance's own correctness oracle.
struct InstanceFile {
    int schema_version = 1;
    int dim = 0;
    std::vector<ComplexMatrix> generators;
    InstanceMetadata metadata;
};

/// Relative strict-lower-plus-diagonal mass of S^-1 G S, maximized over
/// generators, evaluated in long-double arithmetic.
double hidden_conjugation_residual(const InstanceFile& instance);

/// k strictly-upper complex-normal matrices conjugated by a random
/// similarity with condition number <= cond_cap (unitary at 1). The
/// conjugation runs in long-double arithmetic with iterative strict-upper
/// refinement so the stored double-precision instance passes the 1e-12
/// creation audit; failure to converge throws NumericalError.
InstanceFile make_hidden_instance(std::uint64_t seed, int n, int k,
                                  double cond_cap);

GeneratorSet to_generator_set(const InstanceFile& instance);

} // namespace jtri

#pragma once

#include <optional>
#include <vector>

#include "jtri/algebra.hpp"
#include "jtri/config.hpp"
#include "jtri/subspace.hpp"

namespace jtri {

/// Strictly increasing chain of subspaces from 0 to the full space.
struct SubspaceChain {
    int ambient_dim = 0;
    std::vector<Subspace> links; // ascending; first zero, last full

    std::vector<int> dims() const;
    /// Maximal iff the dimensions are exactly 0, 1, ..., ambient_dim.
    bool is_maximal() const;
};

/// The chain iteration stopped strictly above zero: every generator is
/// nilpotent but the associative algebra they generate is not a nilpotent
/// algebra. Carries the stalled link as counterexample material.
class ChainStall : public HypothesisError {
public:
    ChainStall(std::string message, std::vector<int> dims, Subspace stalled_link)
        : HypothesisError(std::move(message)), dims_so_far(std::move(dims)),
          stalled(std::move(stalled_link)) {}

    std::vector<int> dims_so_far;
    Subspace stalled;
};

/// The descending chain X, AX, A^2 X, ..., 0 of the associative closure A
/// of the generators, returned ascending. Every link is invariant under
/// every generator, and each generator maps each link into the next one
/// down. Throws NotNilpotent when a generator fails is_nilpotent,
/// ChainStall when the dimensions stop decreasing before zero.
SubspaceChain radical_chain(const GeneratorSet& g, const ToleranceConfig& cfg);

/// Fill every gap of dimension > 1 with intermediate subspaces (the
/// lexicographically first orthonormal completion inside each gap). Any
/// completion works because the generators act as zero on the gap
/// quotients; that precondition is audited and its violation throws
/// HypothesisError.
SubspaceChain refine_to_maximal(const SubspaceChain& chain,
                                const GeneratorSet& g,
                                const ToleranceConfig& cfg);

/// Unitary S whose first k columns form an orthonormal basis of link k for
/// every k. Requires a maximal chain.
ComplexMatrix conjugator_from_chain(const SubspaceChain& chain);

struct TriangularizationCertificate {
    SubspaceChain chain;      // maximal
    ComplexMatrix conjugator; // unitary
    double residual = 0.0;    // max strict-lower-plus-diagonal mass, relative
};

/// radical_chain -> refine_to_maximal -> conjugator, plus the audit that
/// every conjugated generator is strictly upper triangular:
/// residual = max over generators of max_{i >= j} |(S^H g S)_{ij}| / (1 + ||g||).
/// Throws ResidualExceeded when the audit fails after structural success.
TriangularizationCertificate triangularize(const GeneratorSet& g,
                                           const ToleranceConfig& cfg);

/// A common nontrivial invariant subspace, or nullopt (NotReducible)
/// exactly when the associative closure is the full matrix algebra
/// (Burnside). Unlike triangularize this accepts arbitrary generators:
/// nilpotent sets go through the radical chain; otherwise the witness is
/// found through the closure's joint kernel, its range, the radical of
/// the algebra, or an eigenspace of a non-scalar commutant element.
std::optional<Subspace> find_invariant_subspace(const GeneratorSet& g,
                                                const ToleranceConfig& cfg);

} // namespace jtri

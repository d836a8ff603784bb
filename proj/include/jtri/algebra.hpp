#pragma once

#include <string>
#include <utility>
#include <vector>

#include "jtri/config.hpp"
#include "jtri/subspace.hpp"

namespace jtri {

/// Finite generating set of square matrices of one dimension.
struct GeneratorSet {
    int dim = 0;
    std::vector<ComplexMatrix> gens;
    std::string label;
};

/// Validates uniform dimensions and non-emptiness.
GeneratorSet make_generator_set(std::vector<ComplexMatrix> gens,
                                std::string label = {});

enum class AlgebraKind { jordan, lie, associative, ideal };

const char* to_string(AlgebraKind kind);
AlgebraKind algebra_kind_from_string(const std::string& s);

/// A matrix space closed under the product named by `kind`, together with
/// the (round, dimension) history of the closure iteration that built it.
struct AlgebraBasis {
    MatrixSpace space;
    AlgebraKind kind = AlgebraKind::jordan;
    std::vector<std::pair<int, int>> generation_log;
};

/// Smallest matrix space containing the generators and closed under the
/// anticommutator {A,B} = AB + BA. Breadth-first rounds over all basis
/// pairs; terminates because the dimension is bounded by dim^2.
AlgebraBasis jordan_closure(const GeneratorSet& g, const ToleranceConfig& cfg);

/// The Lie algebra generated by a Jordan algebra: span(J + [J, J]). The
/// result is verified closed under commutators on all basis pairs (the
/// identity [A,[B,C]] = {{A,B},C} - {{A,C},B} guarantees this
/// mathematically); failure of the numerical check throws NumericalError.
AlgebraBasis lie_from_jordan(const AlgebraBasis& j, const ToleranceConfig& cfg);

/// Smallest subspace of L containing S and stable under [L, .]; brackets
/// are taken against L's fixed basis only (sufficient by bilinearity).
/// Throws HypothesisError when some member of S lies outside L.
AlgebraBasis lie_ideal_generated(const AlgebraBasis& l,
                                 const std::vector<ComplexMatrix>& s,
                                 const ToleranceConfig& cfg);

/// Span of all pairwise brackets of basis elements of L.
AlgebraBasis derived_algebra(const AlgebraBasis& l, const ToleranceConfig& cfg);

/// Smallest matrix space containing the generators and closed under
/// ordinary multiplication (no unit adjoined).
AlgebraBasis associative_closure(const GeneratorSet& g,
                                 const ToleranceConfig& cfg);

/// Descending lower central series L, [L,L], [L,[L,L]], ... until the
/// dimension stabilizes or reaches zero (the stabilized term is included).
std::vector<MatrixSpace> lower_central_series(const AlgebraBasis& l,
                                              const ToleranceConfig& cfg);

/// Engel property, decided by the lower central series: in finite
/// dimension L is Engel iff the series reaches zero (Engel's theorem).
bool is_engel(const AlgebraBasis& l, const ToleranceConfig& cfg);

} // namespace jtri

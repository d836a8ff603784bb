#pragma once

#include <string>
#include <vector>

#include "jtri/algebra.hpp"
#include "jtri/complex_matrix.hpp"
#include "jtri/config.hpp"

namespace jtri {

struct IdentityCheck {
    std::string name;
    double residual = 0.0;
    double threshold = 0.0;
    bool pass = false;
};

struct IdentityReport {
    std::vector<IdentityCheck> checks;

    void add(std::string name, double residual, double threshold);
    bool all_pass() const;
    /// The max-residual entry.
    const IdentityCheck& worst() const;
};

/// Universal threshold for the four Jordan identities: these hold for all
/// matrices, so the relative residual is pure roundoff.
inline constexpr double jordan_identity_tol = 1e-12;

/// Residuals of the four universal identities
///   2ABA = {{A,B},A} - {A^2,B}
///   2(ABC+CBA) = {C,{B,A}} + {A,{B,C}} - {B,{C,A}}
///   (ABC-CBA)^2 = (ABC+CBA)^2 - 2(ABC^2BA + CBA^2BC)
///   ABCD + BCDA = {A,B}CD + BC{A,D} - B{A,C}D
/// reported relative to (1 + max ||.||_F)^degree.
IdentityReport check_jordan_identities(const ComplexMatrix& a,
                                       const ComplexMatrix& b,
                                       const ComplexMatrix& c,
                                       const ComplexMatrix& d);

/// |tr(w)| for every word of length 1..4 in the basis of a Jordan algebra
/// of nilpotent matrices, relative to the product of the factors' norms.
/// Exhaustive up to basis size 6, seeded uniform sampling of 10^4 words
/// per length above that. Refuses (HypothesisError) when a basis element
/// fails is_nilpotent: the lemma's conclusion can genuinely fail then.
IdentityReport check_trace_words(const AlgebraBasis& j,
                                 const ToleranceConfig& cfg);

/// Materializes L = lie(J) and the Lie ideal I of L generated by J, then
/// audits max |tr(B_i B_j)| over I's basis pairs.
IdentityReport check_ideal_trace_pairing(const AlgebraBasis& j,
                                         const ToleranceConfig& cfg);

/// T = sum over spectral clusters of conj(lambda) P_lambda. Audited:
/// T commutes with A and tr(TA) = sum mult |lambda|^2 within
/// residual_tol scaling; violations throw NumericalError.
ComplexMatrix cartan_T(const ComplexMatrix& a, const ToleranceConfig& cfg);

/// Two-phase audit of the trace-form criterion. Phase 1: hypothesis
/// max |tr(B_i B_j)| over basis pairs of L. Phase 2 (only when the
/// hypothesis holds): every basis element of the derived algebra and 10
/// seeded random combinations pass is_nilpotent. A failed hypothesis is a
/// reported verdict, not an error, so negative controls are expressible.
IdentityReport cartan_criterion(const AlgebraBasis& l,
                                const ToleranceConfig& cfg);

/// Slack audit of the norm inequalities
///   ||A|| <= ||A||_tr
///   ||AB||, ||BA|| <= ||B|| ||A||_tr      (operator norm)
///   ||AB||_tr, ||BA||_tr <= ||B|| ||A||_tr
///   ||AB||_tr <= ||A||_2 ||B||_2          (Hoelder, p = q = 2)
/// reported as max(0, violation) against 10 * machine-epsilon * scale.
IdentityReport check_norm_inequalities(const ComplexMatrix& a,
                                       const ComplexMatrix& b);

} // namespace jtri

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "leonard/diagram.hpp"
#include "leonard/spectral.hpp"

namespace leonard {

/// Outcome of the normalizing test for one eigenvalue.
struct NormalizingVerdict {
    bool normalizing = false;
    std::optional<int> first_vanishing; // index of the first zero cosine
    std::vector<Scalar> cosines;
};

/// True iff every cosine u_i(theta) is nonzero; equivalently a feasible basis
/// with constant row sum theta exists. Cross-checked against the monic
/// sequence of the normalized basis.
NormalizingVerdict is_normalizing(const BipartiteSystem& sys, const SpectralData& sp,
                                  const Scalar& theta);

/// Witness for the three-term recurrence on theta*: a beta making
/// theta*_{i-1} - beta theta*_i + theta*_{i+1} independent of i. For d < 3 the
/// condition is vacuous and the conventional witness beta = 0 is flagged.
struct BetaWitness {
    Scalar beta;
    bool vacuous = false;
};

std::optional<BetaWitness> beta_recurrence(const std::vector<Scalar>& theta_star);

enum class CheckStatus { Holds, Fails, NotApplicable };

std::string to_string(CheckStatus s);

/// One named identity check: exact equality only, with "not applicable"
/// (hypotheses unmet) kept distinct from a genuine failure.
struct IdentityReport {
    std::string name;
    CheckStatus status = CheckStatus::Holds;
    std::string detail;
    std::optional<Scalar> value; // common constant / computed quantity
    std::optional<int> index;    // first offending index, when any
};

/// Verifies that (seq_{i-2} - seq_{i+1}) / (seq_{i-1} - seq_i) is constant
/// over its admissible range and reports the constant. Consecutive entries
/// must be distinct.
IdentityReport ttr_ratio_check(const std::vector<Scalar>& seq);

/// The shifted-difference ratio checks on theta*: when the three-step ratio
/// is constant up to i, the telescoped two-parameter form must be constant
/// with the same value, and the cross-ratio identity must hold. Requires
/// 3 <= i <= d and mutually distinct theta*.
std::vector<IdentityReport> check_frac_equivalence(const std::vector<Scalar>& theta_star, int i);

/// Identity suite available when, under the given eigenvalue ordering, vertex
/// 0 of the diagram is adjacent to vertex 1 and nothing else.
std::vector<IdentityReport> verify_leaf_identities(const BipartiteSystem& sys,
                                                   const SpectralData& sp,
                                                   const std::vector<int>& ordering);

/// Identity suite available when (0, 1) is a tail of the diagram with vertex 1
/// also adjacent to vertex 2, theta* mutually distinct, and d >= 3.
std::vector<IdentityReport> verify_tail_identities(const BipartiteSystem& sys,
                                                   const SpectralData& sp,
                                                   const std::vector<int>& ordering);

/// Identity suite for certified orderings (a path traversal of the diagram):
/// spectrum antisymmetry, the zero-eigenvalue parity rule, the adjacent
/// eigenvalue relation and the matching three-term ratio constants.
std::vector<IdentityReport> verify_bipartite_ls_identities(const BipartiteSystem& sys,
                                                           const SpectralData& sp,
                                                           const std::vector<int>& ordering);

/// Structured witnesses for a failed condition.
struct PairWitness {
    std::optional<int> first_vanishing_cosine;          // normalizing failure
    std::optional<std::pair<int, int>> duplicate_dual;  // distinctness failure
};

/// Per ordered pair (i, j) of eigenvalue indices: the three conditions of the
/// characterization, the Q-polynomial verdict, and the recurrence witness
/// when the verdict is positive. The equivalence of the two sides is asserted
/// every time it is computed.
struct ConditionReport {
    int i = 0;
    int j = 0;
    bool cond_normalizing = false;
    bool cond_tail = false;
    bool cond_distinct_dual = false;
    bool qpoly = false;
    std::optional<BetaWitness> beta;
    PairWitness witness;
};

std::vector<ConditionReport> main_theorem_check(const BipartiteSystem& sys);

/// Bundled certification output for callers that need the decomposition and
/// diagram alongside the per-pair reports.
struct Certification {
    SpectralData sp;
    Diagram delta;
    std::vector<ConditionReport> pairs;
    std::vector<std::vector<int>> orderings; // path traversals of the diagram
};

Certification certify(const BipartiteSystem& sys);

/// Recovers the full eigenvalue sequence from theta* and one nonzero value
/// theta_j, propagating the adjacent-eigenvalue relation in both directions
/// and bridging the even-d midpoint by antisymmetry. The result is checked
/// against both defining identities.
std::vector<Scalar> reconstruct_theta(const std::vector<Scalar>& theta_star, int j,
                                      const Scalar& theta_j);

/// Exhaustive small-case oracle: decides whether (A, A*) is a Leonard pair by
/// decomposing both matrices and scanning every ordering of each idempotent
/// family against the tridiagonal sandwich conditions. Requires d + 1 <= 7.
struct LeonardVerdict {
    bool leonard = false;
    std::string reason; // set when leonard is false
    std::optional<std::pair<std::vector<int>, std::vector<int>>> witness; // (sigma, tau)
};

LeonardVerdict brute_force_leonard(const Matrix& a, const Matrix& a_star);

} // namespace leonard

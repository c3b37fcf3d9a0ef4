#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "leonard/poly.hpp"
#include "leonard/system.hpp"

namespace leonard {

/// Eigenvalues of A with their rank-1 primitive idempotents and the derived
/// dual trace data. The ordering of theta/E is whatever was requested; the
/// decomposition itself starts in canonical field order.
struct SpectralData {
    std::vector<Scalar> theta;   // mutually distinct
    std::vector<Matrix> E;       // E_i = prod_{j != i} (A - theta_j I)/(theta_i - theta_j)
    std::vector<Scalar> a_star;  // a*_i = tr(E_i A*)
    /// (b*_0 c*_1, b*_1 c*_2) as traces of idempotent sandwiches; present only
    /// when the diagram edges 0-1 and 1-2 exist under this ordering.
    std::optional<std::pair<Scalar, Scalar>> dual_products;
};

/// Splits A into primitive idempotents. Eigenvalues come in canonical field
/// order (rationals descending, GF(p) ascending). Throws
/// NotMultiplicityFreeError when the characteristic polynomial does not have
/// d+1 distinct roots in the field.
SpectralData eigendecompose(const BipartiteSystem& sys);

/// Recomputes a*_i = tr(E_i A*) and asserts E_i A* E_i = a*_i E_i entrywise.
std::vector<Scalar> dual_a(const SpectralData& sp, const BipartiteSystem& sys);

/// tr(E_i A* E_j A*); equals b*_0 c*_1 when (i, j) = (0, 1) in a dual feasible
/// labelling, and is independent of that basis choice.
Scalar dual_product_trace(const SpectralData& sp, const BipartiteSystem& sys, int i, int j);

/// Relabels the decomposition: entry k of the result is entry perm[k] of sp.
/// Dual products are recomputed for the new labelling.
SpectralData reorder(const SpectralData& sp, const std::vector<int>& perm,
                     const BipartiteSystem& sys);

/// Feasible-basis change (conjugation by diag of the cosine sequence) giving A
/// constant row sum theta. Requires theta to be a normalizing eigenvalue: all
/// cosines nonzero.
BipartiteSystem row_sum_basis(const BipartiteSystem& sys, const Scalar& theta);

} // namespace leonard

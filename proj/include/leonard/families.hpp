#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "leonard/system.hpp"

namespace leonard {

/// The standard bipartite family: b_i = d - i, c_i = i, theta*_i = d - 2i.
/// Over GF(p) the construction requires p > d and pairwise distinct
/// eigenvalues d - 2i mod p; otherwise the field is too small.
BipartiteSystem krawtchouk(int d, const FieldSpec& field);

/// Structure-preserving and adversarial transforms for property tests.
struct DuplicateThetaStar {
    int src = 0;
    int dst = 1;
};
struct PermuteThetaStar {
    std::vector<int> perm;
};
struct AffineThetaStar {
    Scalar s; // nonzero
    Scalar t;
};
struct RescaleBasisMutation {
    std::vector<Scalar> beta; // nonzero entries, length d
};
/// Acts on eigenvalue labels only; the system itself is unchanged. Use
/// spectral reorder with the same permutation to observe the relabelling.
struct ShuffleEigenOrder {
    std::vector<int> perm;
};

using Mutation = std::variant<DuplicateThetaStar, PermuteThetaStar, AffineThetaStar,
                              RescaleBasisMutation, ShuffleEigenOrder>;

BipartiteSystem apply_mutation(const BipartiteSystem& sys, const Mutation& m);

/// Uniform nonzero b, c and distinct-by-retry theta* over GF(p); bit-identical
/// output for a fixed seed. Rational fields are rejected.
BipartiteSystem random_system(int d, const FieldSpec& field, std::uint64_t seed);

} // namespace leonard

#pragma once

#include <utility>
#include <vector>

#include "leonard/spectral.hpp"

namespace leonard {

/// Undirected loop-free graph on the eigenspace indices 0..d; vertices i, j
/// are adjacent exactly when E_i A* E_j is nonzero.
class Diagram {
public:
    static Diagram from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int n() const { return n_; }
    bool adjacent(int i, int j) const;
    int degree(int i) const;
    std::vector<int> neighbors(int i) const;
    std::vector<std::pair<int, int>> edges() const; // sorted, first < second

    bool operator==(const Diagram& o) const { return n_ == o.n_ && adj_ == o.adj_; }

private:
    explicit Diagram(int n);
    void check(int i) const;

    int n_;
    std::vector<bool> adj_; // n x n, symmetric, zero diagonal
};

/// Edge (i, j) iff E_i A* E_j != 0. The symmetric zero pattern is verified on
/// both sides; a mismatch is an internal error.
Diagram build_delta(const SpectralData& sp, const BipartiteSystem& sys);

/// degree(i) <= 1.
bool is_leaf(const Diagram& delta, int i);

/// neighbors(i) within {j}, and j adjacent to at most one vertex besides i.
/// Read literally: an isolated i satisfies the first clause.
bool is_tail(const Diagram& delta, int i, int j);

bool is_connected(const Diagram& delta);

/// When the diagram is a path, its two traversal orders (one for a single
/// vertex); empty otherwise.
std::vector<std::vector<int>> qpoly_orderings(const Diagram& delta);

/// True iff some path traversal starts (i, j, ...).
bool is_qpoly_pair(const Diagram& delta, int i, int j);

} // namespace leonard

#include "leonard/diagram.hpp"

#include <algorithm>

namespace leonard {

Diagram::Diagram(int n) : n_(n) {
    if (n < 1)
        throw PreconditionError("diagram needs at least one vertex");
    adj_.assign(static_cast<size_t>(n) * n, false);
}

Diagram Diagram::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Diagram d(n);
    for (auto [i, j] : edges) {
        d.check(i);
        d.check(j);
        if (i == j)
            throw PreconditionError("diagram has no loops");
        d.adj_[static_cast<size_t>(i) * n + j] = true;
        d.adj_[static_cast<size_t>(j) * n + i] = true;
    }
    return d;
}

void Diagram::check(int i) const {
    if (i < 0 || i >= n_)
        throw PreconditionError("diagram vertex out of range");
}

bool Diagram::adjacent(int i, int j) const {
    check(i);
    check(j);
    return adj_[static_cast<size_t>(i) * n_ + j];
}

int Diagram::degree(int i) const {
    check(i);
    int deg = 0;
    for (int j = 0; j < n_; ++j)
        deg += adj_[static_cast<size_t>(i) * n_ + j] ? 1 : 0;
    return deg;
}

std::vector<int> Diagram::neighbors(int i) const {
    check(i);
    std::vector<int> out;
    for (int j = 0; j < n_; ++j)
        if (adj_[static_cast<size_t>(i) * n_ + j])
            out.push_back(j);
    return out;
}

std::vector<std::pair<int, int>> Diagram::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
            if (adj_[static_cast<size_t>(i) * n_ + j])
                out.emplace_back(i, j);
    return out;
}

Diagram build_delta(const SpectralData& sp, const BipartiteSystem& sys) {
    const int n = static_cast<int>(sp.E.size());
    const Matrix a_star = sys.a_star_matrix();
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            bool ij = !(sp.E[static_cast<size_t>(i)] * a_star * sp.E[static_cast<size_t>(j)])
                           .is_zero();
            bool ji = !(sp.E[static_cast<size_t>(j)] * a_star * sp.E[static_cast<size_t>(i)])
                           .is_zero();
            if (ij != ji)
                throw InternalError("asymmetric zero pattern between E_" + std::to_string(i) +
                                    " and E_" + std::to_string(j));
            if (ij)
                edges.emplace_back(i, j);
        }
    return Diagram::from_edges(n, edges);
}

bool is_leaf(const Diagram& delta, int i) { return delta.degree(i) <= 1; }

bool is_tail(const Diagram& delta, int i, int j) {
    if (i == j)
        throw PreconditionError("tail requires two distinct vertices");
    for (int v : delta.neighbors(i))
        if (v != j)
            return false;
    int other = 0;
    for (int v : delta.neighbors(j))
        if (v != i)
            ++other;
    return other <= 1;
}

bool is_connected(const Diagram& delta) {
    const int n = delta.n();
    std::vector<bool> seen(static_cast<size_t>(n), false);
    std::vector<int> stack{0};
    seen[0] = true;
    int count = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        ++count;
        for (int w : delta.neighbors(v))
            if (!seen[static_cast<size_t>(w)]) {
                seen[static_cast<size_t>(w)] = true;
                stack.push_back(w);
            }
    }
    return count == n;
}

std::vector<std::vector<int>> qpoly_orderings(const Diagram& delta) {
    const int n = delta.n();
    if (n == 1)
        return {{0}};
    int edge_count = static_cast<int>(delta.edges().size());
    if (edge_count != n - 1)
        return {};
    std::vector<int> endpoints;
    for (int v = 0; v < n; ++v) {
        int deg = delta.degree(v);
        if (deg > 2)
            return {};
        if (deg == 1)
            endpoints.push_back(v);
        if (deg == 0)
            return {};
    }
    if (endpoints.size() != 2)
        return {};
    // Walk from one endpoint; with n-1 edges and the degree profile above the
    // walk covers everything exactly when the graph is a path.
    std::vector<int> walk{endpoints.front()};
    int prev = -1;
    int cur = endpoints.front();
    while (static_cast<int>(walk.size()) < n) {
        int next = -1;
        for (int w : delta.neighbors(cur))
            if (w != prev)
                next = w;
        if (next < 0)
            return {}; // ran out early: disconnected remainder
        walk.push_back(next);
        prev = cur;
        cur = next;
    }
    std::vector<int> rev(walk.rbegin(), walk.rend());
    return {walk, rev};
}

bool is_qpoly_pair(const Diagram& delta, int i, int j) {
    if (i == j)
        throw PreconditionError("ordered pair requires two distinct vertices");
    for (const std::vector<int>& ord : qpoly_orderings(delta))
        if (ord.size() >= 2 && ord[0] == i && ord[1] == j)
            return true;
    return false;
}

} // namespace leonard

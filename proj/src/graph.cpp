#include "ramseypack/graph.hpp"

#include <cassert>
#include <stdexcept>

namespace ramseypack {

Graph::Graph(int n) : n_(n), adj_(n, Bitset(n)) {
    if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
}

Graph Graph::complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

bool Graph::has_edge(int u, int v) const {
    assert(u >= 0 && u < n_ && v >= 0 && v < n_);
    if (u == v) return false;
    return adj_[u].test(v);
}

void Graph::add_edge(int u, int v) {
    assert(u >= 0 && u < n_ && v >= 0 && v < n_);
    if (u == v) throw std::invalid_argument("Graph: loop edge");
    if (adj_[u].test(v)) return;
    adj_[u].set(v);
    adj_[v].set(u);
    ++m_;
}

void Graph::remove_edge(int u, int v) {
    assert(u >= 0 && u < n_ && v >= 0 && v < n_);
    if (u == v || !adj_[u].test(v)) return;
    adj_[u].reset(v);
    adj_[v].reset(u);
    --m_;
}

int Graph::min_degree() const {
    if (n_ == 0) return 0;
    int d = n_;
    for (int v = 0; v < n_; ++v) d = std::min(d, degree(v));
    return d;
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
}

Graph Graph::complement() const {
    Graph g(n_);
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (!adj_[u].test(v)) g.add_edge(u, v);
    return g;
}

Graph Graph::induced(const std::vector<int>& vertices) const {
    Graph g(int(vertices.size()));
    for (size_t i = 0; i < vertices.size(); ++i) {
        for (size_t j = i + 1; j < vertices.size(); ++j) {
            if (has_edge(vertices[i], vertices[j])) g.add_edge(int(i), int(j));
        }
    }
    return g;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(size_t(m_));
    for (int u = 0; u < n_; ++u) {
        adj_[u].for_each([&](int v) {
            if (v > u) out.emplace_back(u, v);
        });
    }
    return out;
}

bool Graph::check_invariants() const {
    long long degsum = 0;
    for (int v = 0; v < n_; ++v) {
        if (adj_[v].test(v)) return false;
        degsum += degree(v);
        for (int u = 0; u < n_; ++u)
            if (adj_[v].test(u) != adj_[u].test(v)) return false;
    }
    return degsum == 2 * m_;
}

} // namespace ramseypack

#ifndef RAMSEYPACK_GRAPH_HPP
#define RAMSEYPACK_GRAPH_HPP

#include <utility>
#include <vector>

#include "ramseypack/bitset.hpp"

namespace ramseypack {

/// Loop-free undirected graph on vertices 0..n-1 with bitset adjacency rows.
/// Adjacency stays symmetric and irreflexive through every mutation; the
/// cached edge count always equals half the degree sum.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    static Graph complete(int n);

    int vertex_count() const { return n_; }
    long long edge_count() const { return m_; }

    bool has_edge(int u, int v) const;
    void add_edge(int u, int v);    // no-op if present
    void remove_edge(int u, int v); // no-op if absent

    const Bitset& neighbours(int v) const { return adj_[v]; }
    int degree(int v) const { return adj_[v].count(); }
    int min_degree() const;
    int max_degree() const;

    Graph complement() const;

    // Induced subgraph on the given vertices; vertex i of the result is
    // vertices[i]. The caller keeps the vector as the index map.
    Graph induced(const std::vector<int>& vertices) const;

    // Edges as (u, v) with u < v, lexicographically sorted.
    std::vector<std::pair<int, int>> edges() const;

    // Recomputes invariants from scratch; used by tests and after I/O.
    bool check_invariants() const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.adj_ == b.adj_;
    }

private:
    int n_ = 0;
    long long m_ = 0;
    std::vector<Bitset> adj_;
};

} // namespace ramseypack

#endif

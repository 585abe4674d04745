// Naive reference implementations used as independent oracles in tests.
// Everything here enumerates exhaustively and shares no code with the
// library's branch-and-bound / backtracking paths.
#ifndef RAMSEYPACK_TESTS_ORACLES_HPP
#define RAMSEYPACK_TESTS_ORACLES_HPP

#include <optional>
#include <vector>

#include "ramseypack/pattern.hpp"
#include "ramseypack/rng.hpp"

namespace rp_test {

using ramseypack::ColourPattern;
using ramseypack::Graph;
using ramseypack::VertexColouring;

inline bool is_clique(const Graph& g, const std::vector<int>& vs) {
    for (size_t i = 0; i < vs.size(); ++i)
        for (size_t j = i + 1; j < vs.size(); ++j)
            if (!g.has_edge(vs[i], vs[j])) return false;
    return true;
}

// all k-subsets of 0..n-1, invoking f(subset); f returns true to stop
template <typename F>
bool for_each_subset_of_size(int n, int k, F&& f) {
    std::vector<int> idx(size_t(k), 0);
    for (int i = 0; i < k; ++i) idx[size_t(i)] = i;
    if (k > n) return false;
    if (k == 0) return f(idx);
    for (;;) {
        if (f(idx)) return true;
        int i = k - 1;
        while (i >= 0 && idx[size_t(i)] == n - k + i) --i;
        if (i < 0) return false;
        ++idx[size_t(i)];
        for (int j = i + 1; j < k; ++j) idx[size_t(j)] = idx[size_t(j - 1)] + 1;
    }
}

inline bool naive_has_clique(const Graph& g, int k) {
    if (k > g.vertex_count()) return false;
    return for_each_subset_of_size(g.vertex_count(), k,
                                   [&](const std::vector<int>& vs) { return is_clique(g, vs); });
}

// alpha_k by scanning all 2^n subsets (n <= ~20)
inline int naive_k_independence(const Graph& g, int k) {
    int n = g.vertex_count();
    int best = 0;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> vs;
        for (int v = 0; v < n; ++v)
            if (mask & (1u << v)) vs.push_back(v);
        if (int(vs.size()) <= best) continue;
        Graph sub = g.induced(vs);
        if (!naive_has_clique(sub, k)) best = int(vs.size());
    }
    return best;
}

inline bool naive_has_strongly_mono(const ColourPattern& p, const VertexColouring& c, int k) {
    for (int colour = 1; colour <= p.layer_count(); ++colour) {
        std::vector<int> cls = c.colour_class(colour);
        if (int(cls.size()) < k) continue;
        Graph sub = p.layer(colour).induced(cls);
        if (naive_has_clique(sub, k)) return true;
    }
    return false;
}

// enumerates all r^n colourings; returns an escape if one exists
inline std::optional<VertexColouring> naive_find_escape(const ColourPattern& p, int k) {
    int n = p.vertex_count();
    int r = p.layer_count();
    VertexColouring c;
    c.colour.assign(size_t(n), 1);
    for (;;) {
        if (!naive_has_strongly_mono(p, c, k)) return c;
        int i = 0;
        while (i < n && c.colour[size_t(i)] == r) c.colour[size_t(i++)] = 1;
        if (i == n) return std::nullopt;
        ++c.colour[size_t(i)];
    }
}

inline bool naive_forces(const ColourPattern& p, int k) {
    return !naive_find_escape(p, k).has_value();
}

inline bool naive_triangle_free(const Graph& g) {
    int n = g.vertex_count();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                if (g.has_edge(a, b) && g.has_edge(a, c) && g.has_edge(b, c)) return false;
    return true;
}

// ---- small generators ----

inline Graph cycle(int n) {
    Graph g(n);
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

inline Graph path(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

// balanced complete multipartite graph on n vertices with `parts` parts
inline Graph turan(int n, int parts) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (u % parts != v % parts) g.add_edge(u, v);
    return g;
}

inline Graph random_graph(int n, double p, ramseypack::Substream& rng) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.bernoulli(p)) g.add_edge(u, v);
    return g;
}

// random pattern: every potential edge goes to one of {absent, 1..r}
inline ColourPattern random_pattern(int n, int r, ramseypack::Substream& rng) {
    ColourPattern p(n, r);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            int c = int(rng.below(uint64_t(r) + 1));
            if (c > 0) p.add_edge(c, u, v);
        }
    return p;
}

} // namespace rp_test

#endif

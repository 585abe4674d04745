#include "ramseypack/independence.hpp"

#include <algorithm>
#include <stdexcept>

#include "ramseypack/clique.hpp"

namespace ramseypack {

namespace {

// Inclusion/exclusion search for k >= 3. A vertex may join the chosen set
// unless it completes a K_k, i.e. unless its chosen neighbourhood contains a
// K_{k-1}.
struct KIndepSearcher {
    const Graph& g;
    int n, k;
    uint64_t budget;
    uint64_t nodes = 0;
    bool budget_hit = false;
    std::vector<int> chosen;
    Bitset chosen_mask;
    std::vector<int> best;

    KIndepSearcher(const Graph& graph, int kk, uint64_t node_budget)
        : g(graph), n(graph.vertex_count()), k(kk), budget(node_budget), chosen_mask(n) {}

    bool completes_clique(int v) const {
        Bitset inter = chosen_mask;
        inter &= g.neighbours(v);
        if (inter.count() < k - 1) return false;
        Graph sub = g.induced(inter.to_vector());
        return find_clique(sub, k - 1).has_value();
    }

    void rec(int idx) {
        if (++nodes > budget) {
            budget_hit = true;
            return;
        }
        if (int(chosen.size()) > int(best.size())) best = chosen;
        if (idx == n) return;
        if (int(chosen.size()) + (n - idx) <= int(best.size())) return; // cannot improve

        // include idx when legal, then exclude
        if (!completes_clique(idx)) {
            chosen.push_back(idx);
            chosen_mask.set(idx);
            rec(idx + 1);
            chosen.pop_back();
            chosen_mask.reset(idx);
            if (budget_hit) return;
        }
        rec(idx + 1);
    }
};

} // namespace

KIndependenceResult k_independence_number(const Graph& g, int k, uint64_t node_budget) {
    if (k < 2) throw std::invalid_argument("k_independence_number: k must be >= 2");
    KIndependenceResult res;
    if (k == 2) {
        Graph co = g.complement();
        bool exact = true;
        CliqueSearchStats stats;
        res.witness = max_clique(co, node_budget, exact, &stats);
        res.size = int(res.witness.size());
        res.exact = exact;
        res.nodes = stats.nodes;
        return res;
    }
    KIndepSearcher s(g, k, node_budget);
    s.rec(0);
    res.witness = s.best;
    res.size = int(s.best.size());
    res.exact = !s.budget_hit;
    res.nodes = s.nodes;
    std::sort(res.witness.begin(), res.witness.end());
    return res;
}

} // namespace ramseypack

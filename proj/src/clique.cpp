#include "ramseypack/clique.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace ramseypack {

namespace {

struct CliqueSearcher {
    const Graph& g;
    int n;
    std::vector<int> order;       // vertices by descending degree
    std::vector<int> rank;        // order position of each vertex
    std::vector<Bitset> adj_ord;  // adjacency in order-space
    std::vector<int> current;     // order-space vertices of the growing clique
    std::vector<int> best;
    uint64_t nodes = 0;
    uint64_t budget;
    bool budget_hit = false;
    int target; // stop as soon as a clique of this size is found; 0 = maximise

    // scratch for the colouring bound
    std::vector<Bitset> colour_classes;

    CliqueSearcher(const Graph& graph, int target_size, uint64_t node_budget)
        : g(graph), n(graph.vertex_count()), budget(node_budget), target(target_size) {
        order.resize(n);
        for (int v = 0; v < n; ++v) order[v] = v;
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return g.degree(a) > g.degree(b); });
        rank.resize(n);
        for (int i = 0; i < n; ++i) rank[order[i]] = i;
        adj_ord.assign(size_t(n), Bitset(n));
        for (int i = 0; i < n; ++i) {
            g.neighbours(order[i]).for_each([&](int w) { adj_ord[i].set(rank[w]); });
        }
    }

    // Greedy colouring of the candidate set; the class count bounds the
    // largest clique inside it.
    int colour_bound(const Bitset& cand, int limit) {
        colour_classes.clear();
        int classes = 0;
        bool bailed = false;
        cand.for_each([&](int v) {
            if (bailed) return;
            for (int c = 0; c < classes; ++c) {
                if (!colour_classes[size_t(c)].intersects(adj_ord[v])) {
                    colour_classes[size_t(c)].set(v);
                    return;
                }
            }
            if (classes == int(colour_classes.size()))
                colour_classes.emplace_back(n);
            colour_classes[size_t(classes)].clear();
            colour_classes[size_t(classes)].set(v);
            ++classes;
            if (classes >= limit) bailed = true; // bound can no longer prune
        });
        return classes;
    }

    bool expand(const Bitset& cand) {
        if (++nodes > budget) {
            budget_hit = true;
            return false;
        }
        if (target > 0 && int(current.size()) == target) {
            best = current;
            return true;
        }
        if (target == 0 && current.size() > best.size()) best = current;

        int need = target > 0 ? target : int(best.size()) + 1;
        int room = need - int(current.size());
        int cand_size = cand.count();
        if (cand_size < room) return false;
        if (cand_size >= 8 && colour_bound(cand, room) < room) return false;

        Bitset rest = cand;
        std::vector<int> members = cand.to_vector();
        Bitset next(n);
        for (int v : members) {
            if (target == 0) {
                // re-derive the requirement; the incumbent may have grown
                room = int(best.size()) + 1 - int(current.size());
            }
            if (rest.count() < room) return false;
            rest.reset(v);
            current.push_back(v);
            Bitset::and_into(next, rest, adj_ord[v]);
            if (expand(next)) return true;
            current.pop_back();
            if (budget_hit) return false;
        }
        return false;
    }

    std::vector<int> run() {
        Bitset all(n);
        for (int i = 0; i < n; ++i) all.set(i);
        expand(all);
        std::vector<int> out;
        out.reserve(best.size());
        for (int i : best) out.push_back(order[size_t(i)]);
        std::sort(out.begin(), out.end());
        return out;
    }
};

} // namespace

std::optional<std::vector<int>> find_clique(const Graph& g, int k, CliqueSearchStats* stats) {
    if (k < 1) throw std::invalid_argument("find_clique: k must be >= 1");
    if (k > g.vertex_count()) return std::nullopt;
    CliqueSearcher s(g, k, std::numeric_limits<uint64_t>::max());
    std::vector<int> found = s.run();
    if (stats) stats->nodes += s.nodes;
    if (int(found.size()) == k) return found;
    return std::nullopt;
}

std::vector<int> max_clique(const Graph& g, uint64_t node_budget, bool& exact,
                            CliqueSearchStats* stats) {
    CliqueSearcher s(g, 0, node_budget);
    std::vector<int> found = s.run();
    if (stats) stats->nodes += s.nodes;
    exact = !s.budget_hit;
    return found;
}

} // namespace ramseypack

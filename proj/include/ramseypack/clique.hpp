#ifndef RAMSEYPACK_CLIQUE_HPP
#define RAMSEYPACK_CLIQUE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "ramseypack/graph.hpp"

namespace ramseypack {

struct CliqueSearchStats {
    uint64_t nodes = 0;
};

/// Exact K_k decision: returns k pairwise adjacent vertices if the graph
/// contains a k-clique, otherwise nothing. Branch-and-bound on bitset
/// candidate sets, vertices explored in descending-degree order, pruned by a
/// greedy-colouring upper bound. k > n simply returns nothing.
std::optional<std::vector<int>> find_clique(const Graph& g, int k,
                                            CliqueSearchStats* stats = nullptr);

/// Size and witness of a maximum clique, exact. Same search core with the
/// bound driven by the incumbent.
std::vector<int> max_clique(const Graph& g, uint64_t node_budget, bool& exact,
                            CliqueSearchStats* stats = nullptr);

} // namespace ramseypack

#endif

#ifndef RAMSEYPACK_INDEPENDENCE_HPP
#define RAMSEYPACK_INDEPENDENCE_HPP

#include <cstdint>
#include <vector>

#include "ramseypack/graph.hpp"

namespace ramseypack {

/// Result of a k-independence computation. `exact` is false when the node
/// budget ran out, in which case `size`/`witness` are the best K_k-free set
/// found so far (a valid lower bound, never silently wrong).
struct KIndependenceResult {
    int size = 0;
    std::vector<int> witness;
    bool exact = true;
    uint64_t nodes = 0;
};

/// Largest vertex set containing no K_k (k >= 2). k = 2 is the independence
/// number, solved as a maximum clique of the complement; k >= 3 runs a
/// dedicated branch-and-bound over inclusion decisions.
KIndependenceResult k_independence_number(const Graph& g, int k,
                                          uint64_t node_budget = UINT64_C(1) << 62);

} // namespace ramseypack

#endif

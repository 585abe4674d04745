#ifndef RAMSEYPACK_FORCING_HPP
#define RAMSEYPACK_FORCING_HPP

#include <cstdint>
#include <optional>

#include "ramseypack/independence.hpp"
#include "ramseypack/pattern.hpp"

namespace ramseypack {

/// Searches, per colour c, the subgraph of layer c induced on colour class c
/// for a K_k. Colours are tried in ascending order, so the witness is
/// deterministic.
std::optional<CliqueWitness> find_strongly_mono_clique(const ColourPattern& p,
                                                       const VertexColouring& c, int k);

struct ForcingVerdict {
    bool forces = false;
    std::optional<VertexColouring> escape; // set iff !forces
    uint64_t nodes = 0;
};

/// Decides whether every [r]-colouring of the vertices produces a strongly
/// monochromatic K_k. Backtracking over vertex assignments; a branch dies as
/// soon as the new vertex completes a strongly monochromatic K_k, a surviving
/// leaf is an escape. Exponential in n; meant for small patterns.
ForcingVerdict pattern_forces(const ColourPattern& p, int k);

/// Lemma-style escape: colour every vertex with the first layer where its
/// degree is at most k-2. Returns nothing if some vertex has degree >= k-1
/// in every layer. A returned colouring is always verified escape-clean.
std::optional<VertexColouring> greedy_escape_colouring(const ColourPattern& p, int k);

struct PeelResult {
    ColourPattern remainder;    // layers 1..r-1 induced on V \ I
    std::vector<int> removed;   // I, ascending
    std::vector<int> kept;      // index map: vertex i of remainder = kept[i]
    bool independent_set_exact = true;
    uint64_t nodes = 0;
};

/// Removes a maximum (or, under budget, best-found maximal) K_k-free set of
/// the last layer and restricts the remaining layers to the other vertices.
PeelResult peel(const ColourPattern& p, int k, uint64_t node_budget = UINT64_C(1) << 62);

} // namespace ramseypack

#endif

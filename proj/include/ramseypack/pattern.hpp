#ifndef RAMSEYPACK_PATTERN_HPP
#define RAMSEYPACK_PATTERN_HPP

#include <optional>
#include <vector>

#include "ramseypack/graph.hpp"

namespace ramseypack {

/// Total vertex colouring with colours 1..r.
struct VertexColouring {
    std::vector<int> colour; // colour[v] in 1..r

    int size() const { return int(colour.size()); }
    std::vector<int> colour_class(int c) const {
        std::vector<int> out;
        for (int v = 0; v < int(colour.size()); ++v)
            if (colour[v] == c) out.push_back(v);
        return out;
    }
};

/// A k-clique certificate. When `layer` is set the vertices form a clique in
/// that layer and (for strongly monochromatic witnesses) all carry that
/// colour.
struct CliqueWitness {
    std::vector<int> vertices;
    std::optional<int> layer; // colour index 1..r
};

/// r pairwise edge-disjoint graphs on one vertex set. Layers are addressed
/// by colour 1..r. Edge-disjointness is maintained incrementally: add_edge
/// refuses an edge already owned by any layer.
class ColourPattern {
public:
    ColourPattern(int n, int r);
    explicit ColourPattern(std::vector<Graph> layers); // validates disjointness

    int vertex_count() const { return n_; }
    int layer_count() const { return int(layers_.size()); }

    const Graph& layer(int colour) const { return layers_.at(size_t(colour - 1)); }

    bool has_edge_anywhere(int u, int v) const;
    void add_edge(int colour, int u, int v);

    Graph union_graph() const;
    bool edge_disjoint() const; // full pairwise re-check

    // Layers 1..r induced on `keep` (in order); vertex i of the result is
    // keep[i].
    ColourPattern induced(const std::vector<int>& keep) const;

    // Pattern with the last layer dropped (vertex set unchanged).
    ColourPattern drop_last_layer() const;

private:
    int n_ = 0;
    std::vector<Graph> layers_;
};

} // namespace ramseypack

#endif

#include "ramseypack/pattern.hpp"

#include <stdexcept>

namespace ramseypack {

ColourPattern::ColourPattern(int n, int r) : n_(n), layers_(size_t(r), Graph(n)) {
    if (r < 1) throw std::invalid_argument("ColourPattern: r must be >= 1");
    if (n < 0) throw std::invalid_argument("ColourPattern: negative n");
}

ColourPattern::ColourPattern(std::vector<Graph> layers) : layers_(std::move(layers)) {
    if (layers_.empty()) throw std::invalid_argument("ColourPattern: r must be >= 1");
    n_ = layers_[0].vertex_count();
    for (const Graph& g : layers_)
        if (g.vertex_count() != n_)
            throw std::invalid_argument("ColourPattern: layers disagree on n");
    if (!edge_disjoint())
        throw std::invalid_argument("ColourPattern: layers share an edge");
}

bool ColourPattern::has_edge_anywhere(int u, int v) const {
    for (const Graph& g : layers_)
        if (g.has_edge(u, v)) return true;
    return false;
}

void ColourPattern::add_edge(int colour, int u, int v) {
    if (colour < 1 || colour > layer_count())
        throw std::invalid_argument("ColourPattern: colour out of range");
    if (has_edge_anywhere(u, v))
        throw std::invalid_argument("ColourPattern: edge already present in a layer");
    layers_[size_t(colour - 1)].add_edge(u, v);
}

Graph ColourPattern::union_graph() const {
    Graph g(n_);
    for (const Graph& layer : layers_)
        for (auto [u, v] : layer.edges()) g.add_edge(u, v);
    return g;
}

bool ColourPattern::edge_disjoint() const {
    for (size_t i = 0; i < layers_.size(); ++i)
        for (size_t j = i + 1; j < layers_.size(); ++j)
            for (int v = 0; v < n_; ++v)
                if (layers_[i].neighbours(v).intersects(layers_[j].neighbours(v)))
                    return false;
    return true;
}

ColourPattern ColourPattern::induced(const std::vector<int>& keep) const {
    std::vector<Graph> sub;
    sub.reserve(layers_.size());
    for (const Graph& g : layers_) sub.push_back(g.induced(keep));
    return ColourPattern(std::move(sub));
}

ColourPattern ColourPattern::drop_last_layer() const {
    if (layers_.size() < 2)
        throw std::invalid_argument("ColourPattern: cannot drop the only layer");
    std::vector<Graph> sub(layers_.begin(), layers_.end() - 1);
    return ColourPattern(std::move(sub));
}

} // namespace ramseypack

#include "ramseypack/forcing.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "ramseypack/clique.hpp"

namespace ramseypack {

std::optional<CliqueWitness> find_strongly_mono_clique(const ColourPattern& p,
                                                       const VertexColouring& c, int k) {
    if (c.size() != p.vertex_count())
        throw std::invalid_argument("find_strongly_mono_clique: colouring size mismatch");
    int r = p.layer_count();
    for (int v = 0; v < c.size(); ++v)
        if (c.colour[size_t(v)] < 1 || c.colour[size_t(v)] > r)
            throw std::invalid_argument("find_strongly_mono_clique: colour out of range");

    for (int colour = 1; colour <= r; ++colour) {
        std::vector<int> cls = c.colour_class(colour);
        if (int(cls.size()) < k) continue;
        Graph sub = p.layer(colour).induced(cls);
        if (auto found = find_clique(sub, k)) {
            CliqueWitness w;
            w.layer = colour;
            for (int i : *found) w.vertices.push_back(cls[size_t(i)]);
            std::sort(w.vertices.begin(), w.vertices.end());
            return w;
        }
    }
    return std::nullopt;
}

namespace {

struct ForcingSearcher {
    const ColourPattern& p;
    int n, r, k;
    std::vector<int> colour;           // 0 = unassigned, else 1..r
    std::vector<Bitset> class_mask;    // per colour, assigned vertices of that colour
    uint64_t nodes = 0;

    ForcingSearcher(const ColourPattern& pattern, int kk)
        : p(pattern), n(pattern.vertex_count()), r(pattern.layer_count()), k(kk),
          colour(size_t(n), 0), class_mask(size_t(r + 1), Bitset(n)) {}

    // Does assigning colour c to v complete a strongly monochromatic K_k?
    // Only vertices already coloured c and adjacent to v in layer c matter.
    bool completes(int v, int c) const {
        if (k == 1) return true; // a single vertex is a strongly mono K_1
        Bitset cand = class_mask[size_t(c)];
        cand &= p.layer(c).neighbours(v);
        if (cand.count() < k - 1) return false;
        Graph sub = p.layer(c).induced(cand.to_vector());
        return find_clique(sub, k - 1).has_value();
    }

    // true iff every completion of the partial colouring is forced (no escape)
    bool forced_from(int v) {
        ++nodes;
        if (v == n) return false; // complete escape colouring reached
        for (int c = 1; c <= r; ++c) {
            if (completes(v, c)) continue;
            colour[size_t(v)] = c;
            class_mask[size_t(c)].set(v);
            bool sub_forced = forced_from(v + 1);
            class_mask[size_t(c)].reset(v);
            if (!sub_forced) return false; // escape found below; colour[v] kept
            colour[size_t(v)] = 0;
        }
        return true;
    }
};

} // namespace

ForcingVerdict pattern_forces(const ColourPattern& p, int k) {
    if (k < 1) throw std::invalid_argument("pattern_forces: k must be >= 1");
    ForcingSearcher s(p, k);
    ForcingVerdict verdict;
    verdict.forces = s.forced_from(0);
    verdict.nodes = s.nodes;
    if (!verdict.forces) {
        VertexColouring esc;
        esc.colour = s.colour;
        assert(!find_strongly_mono_clique(p, esc, k).has_value());
        verdict.escape = std::move(esc);
    }
    return verdict;
}

std::optional<VertexColouring> greedy_escape_colouring(const ColourPattern& p, int k) {
    int n = p.vertex_count();
    int r = p.layer_count();
    VertexColouring out;
    out.colour.assign(size_t(n), 0);
    for (int v = 0; v < n; ++v) {
        int pick = 0;
        for (int c = 1; c <= r; ++c) {
            if (p.layer(c).degree(v) <= k - 2) {
                pick = c; // smallest layer index wins
                break;
            }
        }
        if (pick == 0) return std::nullopt;
        out.colour[size_t(v)] = pick;
    }
    // Low degree in the chosen layer makes a strongly mono K_k impossible.
    assert(!find_strongly_mono_clique(p, out, k).has_value());
    return out;
}

PeelResult peel(const ColourPattern& p, int k, uint64_t node_budget) {
    if (p.layer_count() < 2) throw std::invalid_argument("peel: needs r >= 2");
    const Graph& last = p.layer(p.layer_count());
    KIndependenceResult indep = k_independence_number(last, k, node_budget);

    Bitset removed_mask(p.vertex_count());
    for (int v : indep.witness) removed_mask.set(v);
    std::vector<int> kept;
    for (int v = 0; v < p.vertex_count(); ++v)
        if (!removed_mask.test(v)) kept.push_back(v);

    PeelResult res{p.drop_last_layer().induced(kept), indep.witness, kept,
                   indep.exact, indep.nodes};
    std::sort(res.removed.begin(), res.removed.end());
    return res;
}

} // namespace ramseypack

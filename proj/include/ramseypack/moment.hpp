#ifndef RAMSEYPACK_MOMENT_HPP
#define RAMSEYPACK_MOMENT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ramseypack/field.hpp"
#include "ramseypack/pattern.hpp"

namespace ramseypack {

/// One affine line with its balanced k-partition. `points` holds the line's
/// q vertex indices in partition order; part j covers the slice
/// [offsets[j], offsets[j+1]). Healthy construction uses k parts with sizes
/// floor(q/k) (the first k - (q mod k) of them) and ceil(q/k) (the rest).
struct LinePartition {
    int32_t alpha;              // slope parameter within the family
    int32_t base_y, base_z;
    std::vector<int32_t> points;
    std::vector<int32_t> part_offsets; // size parts+1, ascending, ends at q

    int parts() const { return int(part_offsets.size()) - 1; }
};

/// All partitioned lines of one incidence family (one colour layer).
struct LineFamily {
    long long lambda;
    std::vector<LinePartition> lines;
};

/// Machine-checkable verification record for an (n,r,k)-critical candidate
/// pattern. Exact checks are proofs; the subset counts are Monte-Carlo
/// evidence only and are reported raw.
struct CriticalCertificate {
    int k = 0, r = 0;
    long long q = 0, n = 0;
    uint64_t seed = 0;

    bool edge_disjoint = false;
    bool per_line_turan = false;      // every line partitioned into k balanced parts
    bool clique_free = false;         // no layer contains K_{k+1}
    std::string clique_free_method;   // how clique_free was established

    long long subsets_sampled = 0;         // summed over layers
    long long subsets_containing_clique = 0;
    std::vector<long long> per_layer_hits; // out of samples per layer
    std::optional<std::vector<int>> counterexample; // a sampled K_k-free subset
    int counterexample_layer = 0;

    double elapsed_seconds = 0;

    bool clean() const {
        return edge_disjoint && per_line_turan && clique_free &&
               subsets_sampled == subsets_containing_clique;
    }
};

/// The pattern together with the line structure that generated it.
struct MomentConstruction {
    int k = 0, r = 0;
    long long q = 0, n = 0;
    uint64_t seed = 0;
    ColourPattern pattern;
    std::vector<LineFamily> families; // families[i] generated layer i+1
};

/// Lemma-style construction: q = least prime >= k^2 r, vertex set F_q^3,
/// layer i the union of Turán graphs over the lines of L_i under independent
/// uniformly random balanced partitions (seed-deterministic per line).
/// Asserts edge-disjointness across layers and per-layer K_{k+1}-freeness
/// before returning.
MomentConstruction build_moment_pattern(int k, int r, uint64_t seed);

/// Same construction at an explicit prime q (needs q >= k and q - 1 >= r).
/// Structurally identical but without the admissibility guarantee q >= k^2 r,
/// so no criticality claim attaches; used for small-scale diagnostics.
MomentConstruction build_moment_pattern_with_q(int k, int r, long long q, uint64_t seed);

struct CliqueFreeCheck {
    bool kfree = false;        // meaningful only when structure_ok
    bool structure_ok = false; // edges tagged by lines, cliques confined
    std::string failure;
};

/// Exact K_{k+1}-freeness of one layer via its line structure: every layer
/// edge must come from exactly one line, the common neighbourhood of any
/// in-line adjacent pair must stay inside that line (so cliques cannot cross
/// lines), and then the layer is K_{k+1}-free iff no line carries more than
/// k parts. A violated structural premise reports structure_ok = false
/// (a construction bug), not a clique verdict.
CliqueFreeCheck clique_free_exact(const Graph& layer, const LineFamily& family, int k,
                                  long long q);

/// Decides whether U contains a K_k of the layer generated by `family`:
/// true iff some line has every part intersected by U.
bool subset_contains_clique(const LineFamily& family, const std::vector<int>& subset,
                            long long n);

/// Certificate-path variant: the sampled-check contract is about subsets of
/// size exactly floor(n/r), so any other size is rejected.
bool check_certificate_subset(const MomentConstruction& c, int colour,
                              const std::vector<int>& subset);

/// Draws `samples` uniform random subsets of size floor(n/r) per layer and
/// tests each for a K_k via the per-line shortcut. Exact structural checks
/// are re-run and recorded; sampling never claims more than it saw.
CriticalCertificate verify_critical_sampled(const MomentConstruction& c, long long samples,
                                            uint64_t seed);

/// q^3 (ln r / r + 1/r + ln k - (3/4) k); negative certifies the union
/// bound of the construction's failure probability is below one.
double failure_exponent(int k, int r, long long q);

// Balanced-partition sizes: k - (q mod k) parts of floor(q/k), then q mod k
// parts of ceil(q/k).
std::vector<int> balanced_part_sizes(long long q, int k);

} // namespace ramseypack

#endif

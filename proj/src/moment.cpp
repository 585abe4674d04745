#include "ramseypack/moment.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>

#include "ramseypack/clique.hpp"
#include "ramseypack/rng.hpp"

namespace ramseypack {

std::vector<int> balanced_part_sizes(long long q, int k) {
    int l1 = int(q / k);
    int big = int(q % k);
    std::vector<int> sizes;
    for (int j = 0; j < k - big; ++j) sizes.push_back(l1);
    for (int j = 0; j < big; ++j) sizes.push_back(l1 + 1);
    return sizes;
}

MomentConstruction build_moment_pattern(int k, int r, uint64_t seed) {
    if (k < 3 || r < 3)
        throw std::invalid_argument("build_moment_pattern: needs k, r >= 3");
    return build_moment_pattern_with_q(k, r, least_admissible_prime(k, r), seed);
}

MomentConstruction build_moment_pattern_with_q(int k, int r, long long q, uint64_t seed) {
    if (k < 3 || r < 1)
        throw std::invalid_argument("build_moment_pattern_with_q: needs k >= 3, r >= 1");
    if (q < k || q - 1 < r)
        throw std::invalid_argument("build_moment_pattern_with_q: q too small for k, r");
    PrimeField f(q);
    long long n = q * q * q;

    MomentConstruction out{k, r, q, n, seed, ColourPattern(int(n), r), {}};
    std::vector<int> sizes = balanced_part_sizes(q, k);
    std::vector<int32_t> offsets(size_t(k) + 1, 0);
    for (int j = 0; j < k; ++j) offsets[size_t(j + 1)] = offsets[size_t(j)] + sizes[size_t(j)];

    for (int colour = 1; colour <= r; ++colour) {
        long long lambda = colour; // the canonical first r nonzero elements
        LineFamily family;
        family.lambda = lambda;
        std::vector<AffineLine> lines = lines_for(f, lambda);
        family.lines.reserve(lines.size());

        for (size_t li = 0; li < lines.size(); ++li) {
            LinePartition lp;
            lp.alpha = int32_t(lines[li].slope.alpha);
            lp.base_y = int32_t(lines[li].base.y);
            lp.base_z = int32_t(lines[li].base.z);
            lp.points.reserve(size_t(q));
            for (const FieldPoint& p : lines[li].points(f))
                lp.points.push_back(int32_t(point_index(p, q)));
            // uniform balanced partition = uniform shuffle + fixed cut points
            Substream rng(seed, "moment-line", (uint64_t(colour) << 40) | li);
            rng.shuffle(lp.points);
            lp.part_offsets = offsets;
            family.lines.push_back(std::move(lp));
        }

        for (const LinePartition& lp : family.lines) {
            for (int a = 0; a < k; ++a) {
                for (int b = a + 1; b < k; ++b) {
                    for (int32_t ia = lp.part_offsets[size_t(a)]; ia < lp.part_offsets[size_t(a) + 1]; ++ia)
                        for (int32_t ib = lp.part_offsets[size_t(b)]; ib < lp.part_offsets[size_t(b) + 1]; ++ib)
                            out.pattern.add_edge(colour, lp.points[size_t(ia)], lp.points[size_t(ib)]);
                }
            }
        }
        out.families.push_back(std::move(family));
    }

    // postconditions: disjointness is incremental (add_edge), freeness exact
    for (int colour = 1; colour <= r; ++colour) {
        CliqueFreeCheck chk =
            clique_free_exact(out.pattern.layer(colour), out.families[size_t(colour - 1)], k, q);
        if (!chk.structure_ok || !chk.kfree)
            throw std::logic_error("build_moment_pattern: layer failed verification: " +
                                   chk.failure);
    }
    return out;
}

CliqueFreeCheck clique_free_exact(const Graph& layer, const LineFamily& family, int k,
                                  long long q) {
    CliqueFreeCheck out;
    long long n = layer.vertex_count();

    // in-line flags, reused across lines
    std::vector<uint8_t> in_line(size_t(n), 0);
    Bitset common(int(n));

    long long edges_from_lines = 0;
    int max_parts = 0;
    for (const LinePartition& lp : family.lines) {
        if ((long long)lp.points.size() != q) {
            out.failure = "line does not carry q points";
            return out;
        }
        max_parts = std::max(max_parts, lp.parts());
        for (int32_t v : lp.points) in_line[size_t(v)] = 1;

        bool ok = true;
        for (int a = 0; a < lp.parts() && ok; ++a) {
            for (int32_t ia = lp.part_offsets[size_t(a)]; ia < lp.part_offsets[size_t(a) + 1] && ok; ++ia) {
                for (int b = a + 1; b < lp.parts() && ok; ++b) {
                    for (int32_t ib = lp.part_offsets[size_t(b)]; ib < lp.part_offsets[size_t(b) + 1] && ok; ++ib) {
                        int u = lp.points[size_t(ia)], v = lp.points[size_t(ib)];
                        ++edges_from_lines;
                        if (!layer.has_edge(u, v)) {
                            out.failure = "line edge missing from layer";
                            ok = false;
                            break;
                        }
                        // cliques stay inside lines: common neighbours of an
                        // adjacent in-line pair may not leave the line
                        Bitset::and_into(common, layer.neighbours(u), layer.neighbours(v));
                        bool confined = true;
                        common.for_each([&](int w) {
                            if (!in_line[size_t(w)]) confined = false;
                        });
                        if (!confined) {
                            out.failure = "common neighbourhood of an adjacent pair leaves its line";
                            ok = false;
                        }
                    }
                }
            }
        }
        for (int32_t v : lp.points) in_line[size_t(v)] = 0;
        if (!ok) return out;
    }

    if (edges_from_lines != layer.edge_count()) {
        out.failure = "layer has an edge tagged by no line";
        return out;
    }

    out.structure_ok = true;
    out.kfree = max_parts <= k;
    if (!out.kfree) out.failure = "a line carries more than k parts";
    return out;
}

bool subset_contains_clique(const LineFamily& family, const std::vector<int>& subset,
                            long long n) {
    std::vector<uint8_t> in_subset(size_t(n), 0);
    for (int v : subset) in_subset[size_t(v)] = 1;
    for (const LinePartition& lp : family.lines) {
        bool all_hit = true;
        for (int j = 0; j < lp.parts() && all_hit; ++j) {
            bool hit = false;
            for (int32_t i = lp.part_offsets[size_t(j)]; i < lp.part_offsets[size_t(j) + 1]; ++i) {
                if (in_subset[size_t(lp.points[size_t(i)])]) {
                    hit = true;
                    break;
                }
            }
            all_hit = hit;
        }
        if (all_hit) return true;
    }
    return false;
}

bool check_certificate_subset(const MomentConstruction& c, int colour,
                              const std::vector<int>& subset) {
    if ((long long)subset.size() != c.n / c.r)
        throw std::invalid_argument("check_certificate_subset: subset size must be floor(n/r)");
    if (colour < 1 || colour > c.r)
        throw std::invalid_argument("check_certificate_subset: colour out of range");
    return subset_contains_clique(c.families[size_t(colour - 1)], subset, c.n);
}

CriticalCertificate verify_critical_sampled(const MomentConstruction& c, long long samples,
                                            uint64_t seed) {
    if (samples < 1)
        throw std::invalid_argument("verify_critical_sampled: samples must be >= 1");
    auto t0 = std::chrono::steady_clock::now();

    CriticalCertificate cert;
    cert.k = c.k;
    cert.r = c.r;
    cert.q = c.q;
    cert.n = c.n;
    cert.seed = seed;

    cert.edge_disjoint = c.pattern.edge_disjoint();

    std::vector<int> expect_sizes = balanced_part_sizes(c.q, c.k);
    cert.per_line_turan = true;
    for (const LineFamily& fam : c.families) {
        for (const LinePartition& lp : fam.lines) {
            if (lp.parts() != c.k) cert.per_line_turan = false;
            for (int j = 0; j < lp.parts() && cert.per_line_turan; ++j) {
                int size = lp.part_offsets[size_t(j) + 1] - lp.part_offsets[size_t(j)];
                if (size != expect_sizes[size_t(j)]) cert.per_line_turan = false;
            }
        }
    }

    cert.clique_free = true;
    cert.clique_free_method = "per-line Turán parts + common-neighbourhood confinement";
    for (int colour = 1; colour <= c.r; ++colour) {
        CliqueFreeCheck chk =
            clique_free_exact(c.pattern.layer(colour), c.families[size_t(colour - 1)], c.k, c.q);
        if (!chk.structure_ok || !chk.kfree) cert.clique_free = false;
    }

    long long subset_size = c.n / c.r;
    std::vector<int> scratch;
    for (int colour = 1; colour <= c.r; ++colour) {
        long long hits = 0;
        for (long long s = 0; s < samples; ++s) {
            Substream rng(seed, "moment-critical", (uint64_t(colour) << 40) | uint64_t(s));
            std::vector<int> subset =
                rng.sample_without_replacement(int(c.n), int(subset_size), scratch);
            if (subset_contains_clique(c.families[size_t(colour - 1)], subset, c.n)) {
                ++hits;
            } else if (!cert.counterexample) {
                cert.counterexample = subset;
                cert.counterexample_layer = colour;
            }
        }
        cert.per_layer_hits.push_back(hits);
        cert.subsets_sampled += samples;
        cert.subsets_containing_clique += hits;
    }

    cert.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return cert;
}

double failure_exponent(int k, int r, long long q) {
    if (k < 3 || r < 3) throw std::invalid_argument("failure_exponent: needs k, r >= 3");
    if (q < (long long)k * k * r)
        throw std::invalid_argument("failure_exponent: q below k^2 r");
    double qd = double(q);
    return qd * qd * qd *
           (std::log(double(r)) / r + 1.0 / r + std::log(double(k)) - 0.75 * k);
}

} // namespace ramseypack

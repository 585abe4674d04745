#ifndef RAMSEYPACK_RNG_HPP
#define RAMSEYPACK_RNG_HPP

#include <cstdint>
#include <string_view>
#include <vector>

namespace ramseypack {

// Deterministic substream generator. Every random decision in the project
// draws from a Substream keyed by (seed, tag, index), so results depend only
// on the inputs, never on scheduling or platform. The core step is
// splitmix64; the key is folded in with FNV-1a so distinct tags and indices
// give unrelated streams.
class Substream {
public:
    Substream(uint64_t seed, std::string_view tag, uint64_t index) {
        uint64_t h = 1469598103934665603ULL; // FNV offset basis
        auto mix_byte = [&](uint8_t b) {
            h ^= b;
            h *= 1099511628211ULL;
        };
        auto mix_u64 = [&](uint64_t v) {
            for (int i = 0; i < 8; ++i) mix_byte(uint8_t(v >> (8 * i)));
        };
        mix_u64(seed);
        for (char c : tag) mix_byte(uint8_t(c));
        mix_u64(index);
        state_ = h;
        next(); // decouple the first output from the raw hash
    }

    uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ULL;
        uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Unbiased uniform draw from [0, n), n >= 1.
    uint64_t below(uint64_t n) {
        uint64_t threshold = -n % n; // 2^64 mod n
        for (;;) {
            uint64_t v = next();
            if (v >= threshold) return v % n;
        }
    }

    // Uniform in [0, 1).
    double unit() { return double(next() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return unit() < p; }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (size_t i = v.size(); i > 1; --i) {
            size_t j = size_t(below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

    // k distinct values from [0, n), in selection order.
    std::vector<int> sample_without_replacement(int n, int k, std::vector<int>& scratch) {
        scratch.resize(n);
        for (int i = 0; i < n; ++i) scratch[i] = i;
        std::vector<int> out(k);
        for (int i = 0; i < k; ++i) {
            int j = i + int(below(uint64_t(n - i)));
            std::swap(scratch[i], scratch[j]);
            out[i] = scratch[i];
        }
        return out;
    }

private:
    uint64_t state_;
};

} // namespace ramseypack

#endif

#ifndef RAMSEYPACK_BITSET_HPP
#define RAMSEYPACK_BITSET_HPP

#include <bit>
#include <cassert>
#include <cstdint>
#include <vector>

namespace ramseypack {

// Fixed-capacity dynamic bitset. All binary operations require equal capacity.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int nbits) : nbits_(nbits), w_((nbits + 63) / 64, 0) {}

    int capacity() const { return nbits_; }

    void set(int i) {
        assert(i >= 0 && i < nbits_);
        w_[i >> 6] |= (uint64_t{1} << (i & 63));
    }
    void reset(int i) {
        assert(i >= 0 && i < nbits_);
        w_[i >> 6] &= ~(uint64_t{1} << (i & 63));
    }
    bool test(int i) const {
        assert(i >= 0 && i < nbits_);
        return (w_[i >> 6] >> (i & 63)) & 1;
    }
    void clear() { std::fill(w_.begin(), w_.end(), 0); }

    int count() const {
        int c = 0;
        for (uint64_t w : w_) c += std::popcount(w);
        return c;
    }
    bool any() const {
        for (uint64_t w : w_)
            if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    Bitset& operator&=(const Bitset& o) {
        assert(nbits_ == o.nbits_);
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    Bitset& operator|=(const Bitset& o) {
        assert(nbits_ == o.nbits_);
        for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    // this &= ~o
    Bitset& and_not(const Bitset& o) {
        assert(nbits_ == o.nbits_);
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
        return *this;
    }

    // dst = a & b without allocating; dst must have the same capacity.
    static void and_into(Bitset& dst, const Bitset& a, const Bitset& b) {
        assert(dst.nbits_ == a.nbits_ && a.nbits_ == b.nbits_);
        for (size_t i = 0; i < dst.w_.size(); ++i) dst.w_[i] = a.w_[i] & b.w_[i];
    }

    bool intersects(const Bitset& o) const {
        assert(nbits_ == o.nbits_);
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }
    int intersection_count(const Bitset& o) const {
        assert(nbits_ == o.nbits_);
        int c = 0;
        for (size_t i = 0; i < w_.size(); ++i) c += std::popcount(w_[i] & o.w_[i]);
        return c;
    }
    bool is_subset_of(const Bitset& o) const {
        assert(nbits_ == o.nbits_);
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }

    // First set bit, or -1.
    int find_first() const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i]) return int(i * 64 + std::countr_zero(w_[i]));
        return -1;
    }

    template <typename F>
    void for_each(F&& f) const {
        for (size_t i = 0; i < w_.size(); ++i) {
            uint64_t w = w_[i];
            while (w) {
                f(int(i * 64 + std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(count());
        for_each([&](int i) { out.push_back(i); });
        return out;
    }

    friend bool operator==(const Bitset& a, const Bitset& b) {
        return a.nbits_ == b.nbits_ && a.w_ == b.w_;
    }

private:
    int nbits_ = 0;
    std::vector<uint64_t> w_;
};

} // namespace ramseypack

#endif

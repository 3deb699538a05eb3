#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace mcsq {

/// Fixed-width dynamic bit vector. Used both for row contents (bits are
/// column indices) and for vertex sets (bits are row indices).
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int width) : width_(width), w_((width + 63) / 64, 0) {
        assert(width >= 0);
    }
    Bitset(int width, std::initializer_list<int> bits) : Bitset(width) {
        for (int b : bits) set(b);
    }

    static Bitset all(int width) {
        Bitset s(width);
        for (auto& w : s.w_) w = ~uint64_t{0};
        s.trim();
        return s;
    }

    int width() const { return width_; }

    void set(int i) {
        assert(i >= 0 && i < width_);
        w_[i >> 6] |= uint64_t{1} << (i & 63);
    }
    void reset(int i) {
        assert(i >= 0 && i < width_);
        w_[i >> 6] &= ~(uint64_t{1} << (i & 63));
    }
    bool test(int i) const {
        assert(i >= 0 && i < width_);
        return (w_[i >> 6] >> (i & 63)) & 1;
    }

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

    /// Lowest set bit, or -1 when empty.
    int first() const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i]) return int(i * 64) + std::countr_zero(w_[i]);
        return -1;
    }
    /// Lowest set bit >= from, or -1.
    int next(int from) const {
        if (from >= width_) return -1;
        size_t i = size_t(from) >> 6;
        uint64_t w = w_[i] & (~uint64_t{0} << (from & 63));
        while (true) {
            if (w) return int(i * 64) + std::countr_zero(w);
            if (++i == w_.size()) return -1;
            w = w_[i];
        }
    }

    Bitset operator&(const Bitset& o) const { return apply(o, [](uint64_t a, uint64_t b) { return a & b; }); }
    Bitset operator|(const Bitset& o) const { return apply(o, [](uint64_t a, uint64_t b) { return a | b; }); }
    /// Set difference (this minus o).
    Bitset operator-(const Bitset& o) const { return apply(o, [](uint64_t a, uint64_t b) { return a & ~b; }); }

    Bitset& operator&=(const Bitset& o) { return applyInPlace(o, [](uint64_t a, uint64_t b) { return a & b; }); }
    Bitset& operator|=(const Bitset& o) { return applyInPlace(o, [](uint64_t a, uint64_t b) { return a | b; }); }
    Bitset& operator-=(const Bitset& o) { return applyInPlace(o, [](uint64_t a, uint64_t b) { return a & ~b; }); }

    bool operator==(const Bitset& o) const { return width_ == o.width_ && w_ == o.w_; }
    bool operator!=(const Bitset& o) const { return !(*this == o); }

    bool intersects(const Bitset& o) const {
        assert(width_ == o.width_);
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }
    bool subset_of(const Bitset& o) const {
        assert(width_ == o.width_);
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }

    std::vector<int> indices() const {
        std::vector<int> out;
        for (int b = first(); b >= 0; b = next(b + 1)) out.push_back(b);
        return out;
    }

private:
    template <class F>
    Bitset apply(const Bitset& o, F f) const {
        assert(width_ == o.width_);
        Bitset r(width_);
        for (size_t i = 0; i < w_.size(); ++i) r.w_[i] = f(w_[i], o.w_[i]);
        return r;
    }
    template <class F>
    Bitset& applyInPlace(const Bitset& o, F f) {
        assert(width_ == o.width_);
        for (size_t i = 0; i < w_.size(); ++i) w_[i] = f(w_[i], o.w_[i]);
        return *this;
    }
    void trim() {
        if (width_ & 63) w_.back() &= (~uint64_t{0}) >> (64 - (width_ & 63));
        if (width_ == 0 && !w_.empty()) w_.clear();
    }

    int width_ = 0;
    std::vector<uint64_t> w_;
};

}  // namespace mcsq

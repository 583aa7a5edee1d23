#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <string>
#include <vector>

namespace eajr {

/// Fixed-universe vertex set backed by a bit vector. The universe size is
/// set at construction and preserved by all set operations.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int universe)
        : n_(universe), words_((universe + 63) / 64, 0) {
        assert(universe >= 0);
    }

    static VertexSet full(int universe) {
        VertexSet s(universe);
        for (int v = 0; v < universe; ++v) s.set(v);
        return s;
    }

    static VertexSet of(int universe, std::initializer_list<int> ids) {
        VertexSet s(universe);
        for (int v : ids) s.set(v);
        return s;
    }

    int universe() const { return n_; }

    bool test(int v) const {
        assert(v >= 0 && v < n_);
        return (words_[v >> 6] >> (v & 63)) & 1u;
    }
    void set(int v) {
        assert(v >= 0 && v < n_);
        words_[v >> 6] |= std::uint64_t{1} << (v & 63);
    }
    void reset(int v) {
        assert(v >= 0 && v < n_);
        words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
    }
    void assign(int v, bool on) { on ? set(v) : reset(v); }
    void flip(int v) {
        assert(v >= 0 && v < n_);
        words_[v >> 6] ^= std::uint64_t{1} << (v & 63);
    }
    void clear() { std::fill(words_.begin(), words_.end(), 0); }

    int count() const {
        int c = 0;
        for (std::uint64_t w : words_) c += std::popcount(w);
        return c;
    }
    bool any() const {
        for (std::uint64_t w : words_)
            if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    VertexSet& operator&=(const VertexSet& o) {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    VertexSet& operator|=(const VertexSet& o) {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    VertexSet& operator^=(const VertexSet& o) {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
        return *this;
    }
    /// Set difference: removes every member of o.
    VertexSet& subtract(const VertexSet& o) {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator^(VertexSet a, const VertexSet& b) { return a ^= b; }
    friend VertexSet difference(VertexSet a, const VertexSet& b) { return a.subtract(b); }

    VertexSet complement() const {
        VertexSet r(n_);
        for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = ~words_[i];
        r.trim();
        return r;
    }

    bool operator==(const VertexSet& o) const { return n_ == o.n_ && words_ == o.words_; }
    bool operator!=(const VertexSet& o) const { return !(*this == o); }

    bool intersects(const VertexSet& o) const {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }
    bool is_subset_of(const VertexSet& o) const {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }
    int count_and(const VertexSet& o) const {
        assert(n_ == o.n_);
        int c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i)
            c += std::popcount(words_[i] & o.words_[i]);
        return c;
    }
    /// |this \ o|.
    int count_minus(const VertexSet& o) const {
        assert(n_ == o.n_);
        int c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i)
            c += std::popcount(words_[i] & ~o.words_[i]);
        return c;
    }

    /// In-place a \ b, reusing this set's storage (universes must match).
    void assign_difference(const VertexSet& a, const VertexSet& b) {
        assert(a.n_ == b.n_ && n_ == a.n_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] = a.words_[i] & ~b.words_[i];
    }

    /// Lowest member at index >= from, or -1 when none.
    int next(int from = 0) const {
        if (from >= n_) return -1;
        int wi = from >> 6;
        std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (from & 63));
        while (true) {
            if (w) {
                int v = (wi << 6) + std::countr_zero(w);
                return v < n_ ? v : -1;
            }
            if (++wi >= static_cast<int>(words_.size())) return -1;
            w = words_[wi];
        }
    }

    /// Lowest member of this & o at index >= from, or -1 when none.
    int next_common(const VertexSet& o, int from = 0) const {
        assert(n_ == o.n_);
        if (from >= n_) return -1;
        int wi = from >> 6;
        std::uint64_t w = (words_[wi] & o.words_[wi]) & (~std::uint64_t{0} << (from & 63));
        while (true) {
            if (w) {
                int v = (wi << 6) + std::countr_zero(w);
                return v < n_ ? v : -1;
            }
            if (++wi >= static_cast<int>(words_.size())) return -1;
            w = words_[wi] & o.words_[wi];
        }
    }

    template <typename F>
    void for_each(F&& f) const {
        for (int v = next(0); v >= 0; v = next(v + 1)) f(v);
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(count());
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

    std::string to_string() const {
        std::string s = "{";
        bool first = true;
        for_each([&](int v) {
            if (!first) s += ",";
            s += std::to_string(v);
            first = false;
        });
        return s + "}";
    }

private:
    void trim() {
        if (n_ & 63) words_.back() &= (~std::uint64_t{0} >> (64 - (n_ & 63)));
    }

    int n_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Ordered list of distinct vertex ids.
using VertexSequence = std::vector<int>;

}  // namespace eajr

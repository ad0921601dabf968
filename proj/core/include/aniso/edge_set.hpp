#pragma once

#include <bit>
#include <cassert>
#include <compare>
#include <cstdint>
#include <vector>

namespace aniso {

/// Subset of a fixed edge-index range [0, size) as a packed bit vector.
/// This is the universal currency of the enumeration modules: even subgraphs,
/// cancelled sets, restricted edge universes are all EdgeSets over the same
/// indexing.  Sets of different sizes never mix (asserted).
class EdgeSet {
public:
    EdgeSet() = default;
    explicit EdgeSet(int size) : nbits_(size), words_((size + 63) / 64, 0) {}

    /// The full universe {0, ..., size-1}.
    static EdgeSet full(int size) {
        EdgeSet s(size);
        for (int i = 0; i < size / 64; ++i) s.words_[i] = ~0ull;
        if (size % 64) s.words_[size / 64] = (1ull << (size % 64)) - 1;
        return s;
    }

    int size() const { return nbits_; }

    bool test(int i) const {
        assert(0 <= i && i < nbits_);
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }
    void set(int i) {
        assert(0 <= i && i < nbits_);
        words_[i >> 6] |= 1ull << (i & 63);
    }
    void reset(int i) {
        assert(0 <= i && i < nbits_);
        words_[i >> 6] &= ~(1ull << (i & 63));
    }
    void flip(int i) {
        assert(0 <= i && i < nbits_);
        words_[i >> 6] ^= 1ull << (i & 63);
    }

    int count() const {
        int c = 0;
        for (uint64_t w : words_) c += std::popcount(w);
        return c;
    }
    bool any() const {
        for (uint64_t w : words_)
            if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    bool is_subset_of(const EdgeSet& o) const {
        assert(nbits_ == o.nbits_);
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }
    bool intersects(const EdgeSet& o) const {
        assert(nbits_ == o.nbits_);
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    EdgeSet& operator&=(const EdgeSet& o) {
        assert(nbits_ == o.nbits_);
        for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    EdgeSet& operator|=(const EdgeSet& o) {
        assert(nbits_ == o.nbits_);
        for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    EdgeSet& operator^=(const EdgeSet& o) {
        assert(nbits_ == o.nbits_);
        for (size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
        return *this;
    }

    friend EdgeSet operator&(EdgeSet a, const EdgeSet& b) { return a &= b; }
    friend EdgeSet operator|(EdgeSet a, const EdgeSet& b) { return a |= b; }
    friend EdgeSet operator^(EdgeSet a, const EdgeSet& b) { return a ^= b; }

    /// Set difference: elements of *this not in o.
    EdgeSet and_not(const EdgeSet& o) const {
        assert(nbits_ == o.nbits_);
        EdgeSet r(*this);
        for (size_t i = 0; i < words_.size(); ++i) r.words_[i] &= ~o.words_[i];
        return r;
    }

    bool operator==(const EdgeSet&) const = default;
    /// Lexicographic order on the packed words; suitable as a map key.
    auto operator<=>(const EdgeSet& o) const {
        assert(nbits_ == o.nbits_);
        return words_ <=> o.words_;
    }

    /// Visit set bits in ascending index order.
    template <class F>
    void for_each(F&& f) const {
        for (size_t wi = 0; wi < words_.size(); ++wi) {
            uint64_t w = words_[wi];
            while (w) {
                int b = std::countr_zero(w);
                f(int(wi * 64 + b));
                w &= w - 1;
            }
        }
    }

    std::vector<int> indices() const {
        std::vector<int> out;
        out.reserve(count());
        for_each([&](int i) { out.push_back(i); });
        return out;
    }

private:
    int nbits_ = 0;
    std::vector<uint64_t> words_;
};

} // namespace aniso

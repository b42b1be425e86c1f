#ifndef CLAW_BITSET_HPP
#define CLAW_BITSET_HPP

#include <cstdint>
#include <vector>

namespace claw {

/// Fixed-universe set of vertex indices backed by machine words.
/// All binary operations require operands over the same universe size.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int universe) : nbits_(universe), words_((universe + 63) / 64, 0) {}

    int universe() const { return nbits_; }

    void add(int i) { words_[i >> 6] |= (uint64_t{1} << (i & 63)); }
    void remove(int i) { words_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }
    bool contains(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

    int count() const {
        int c = 0;
        for (uint64_t w : words_) c += __builtin_popcountll(w);
        return c;
    }
    bool empty() const {
        for (uint64_t w : words_) if (w) return false;
        return true;
    }
    void clear() { for (auto& w : words_) w = 0; }
    void fill() {
        for (auto& w : words_) w = ~uint64_t{0};
        trim();
    }

    Bitset& operator|=(const Bitset& o) {
        for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    Bitset& operator&=(const Bitset& o) {
        for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    Bitset& operator-=(const Bitset& o) {
        for (size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }
    friend Bitset operator|(Bitset a, const Bitset& b) { a |= b; return a; }
    friend Bitset operator&(Bitset a, const Bitset& b) { a &= b; return a; }
    friend Bitset operator-(Bitset a, const Bitset& b) { a -= b; return a; }

    bool operator==(const Bitset& o) const { return words_ == o.words_; }
    bool operator!=(const Bitset& o) const { return words_ != o.words_; }

    /// Strict weak order usable as a map key.
    bool operator<(const Bitset& o) const { return words_ < o.words_; }

    bool intersects(const Bitset& o) const {
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }
    bool subset_of(const Bitset& o) const {
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }
    bool proper_subset_of(const Bitset& o) const {
        return subset_of(o) && words_ != o.words_;
    }
    int count_and(const Bitset& o) const {
        int c = 0;
        for (size_t i = 0; i < words_.size(); ++i)
            c += __builtin_popcountll(words_[i] & o.words_[i]);
        return c;
    }

    /// Smallest member, or -1 if empty.
    int first() const { return next(0); }

    /// Smallest member >= from, or -1.
    int next(int from) const {
        if (from >= nbits_) return -1;
        size_t wi = from >> 6;
        uint64_t w = words_[wi] & (~uint64_t{0} << (from & 63));
        while (true) {
            if (w) return int(wi * 64 + __builtin_ctzll(w));
            if (++wi >= words_.size()) return -1;
            w = words_[wi];
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(count());
        for (int v = first(); v >= 0; v = next(v + 1)) out.push_back(v);
        return out;
    }

    static Bitset of(int universe, const std::vector<int>& members) {
        Bitset s(universe);
        for (int v : members) s.add(v);
        return s;
    }

    size_t hash() const {
        size_t h = 1469598103934665603ull;
        for (uint64_t w : words_) {
            h ^= w;
            h *= 1099511628211ull;
        }
        return h;
    }

private:
    void trim() {
        int rem = nbits_ & 63;
        if (rem && !words_.empty()) words_.back() &= (uint64_t{1} << rem) - 1;
    }

    int nbits_ = 0;
    std::vector<uint64_t> words_;
};

#define CLAW_FOR_SET(v, s) for (int v = (s).first(); v >= 0; v = (s).next(v + 1))

} // namespace claw

#endif

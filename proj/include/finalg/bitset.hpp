#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace finalg {

// Membership set over a fixed carrier {0, ..., n-1}.  Ordering treats the set
// as one wide integer with element 0 in the least significant bit, which gives
// a deterministic sort order independent of platform and schedule.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int n) : n_(n), w_((static_cast<size_t>(n) + 63) / 64, 0) {}

    int capacity() const { return n_; }

    bool test(int i) const { return (w_[static_cast<size_t>(i) >> 6] >> (i & 63)) & 1u; }
    void set(int i) { w_[static_cast<size_t>(i) >> 6] |= uint64_t(1) << (i & 63); }
    void reset(int i) { w_[static_cast<size_t>(i) >> 6] &= ~(uint64_t(1) << (i & 63)); }

    int count() const;
    bool any() const;
    bool none() const { return !any(); }

    bool subset_of(const Bitset& o) const;
    bool intersects(const Bitset& o) const;

    Bitset operator|(const Bitset& o) const;
    Bitset operator&(const Bitset& o) const;
    Bitset minus(const Bitset& o) const;
    Bitset complement() const;

    bool operator==(const Bitset& o) const = default;

    // numeric comparison, element 0 least significant
    bool value_less(const Bitset& o) const;

    std::vector<int> elements() const;
    int first() const;  // least member, -1 when empty

    // "{0,4}" style rendering
    std::string str() const;

    size_t hash() const;

private:
    int n_ = 0;
    std::vector<uint64_t> w_;
};

struct BitsetHash {
    size_t operator()(const Bitset& b) const { return b.hash(); }
};

// (popcount, numeric value) order used everywhere a list of sets is emitted
bool canonical_less(const Bitset& a, const Bitset& b);

Bitset singleton(int n, int i);
Bitset full_set(int n);

}  // namespace finalg

#include "finalg/bitset.hpp"

#include <bit>

namespace finalg {

int Bitset::count() const {
    int c = 0;
    for (uint64_t w : w_) c += std::popcount(w);
    return c;
}

bool Bitset::any() const {
    for (uint64_t w : w_)
        if (w) return true;
    return false;
}

bool Bitset::subset_of(const Bitset& o) const {
    for (size_t i = 0; i < w_.size(); ++i)
        if (w_[i] & ~o.w_[i]) return false;
    return true;
}

bool Bitset::intersects(const Bitset& o) const {
    for (size_t i = 0; i < w_.size(); ++i)
        if (w_[i] & o.w_[i]) return true;
    return false;
}

Bitset Bitset::operator|(const Bitset& o) const {
    Bitset r(n_);
    for (size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] | o.w_[i];
    return r;
}

Bitset Bitset::operator&(const Bitset& o) const {
    Bitset r(n_);
    for (size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] & o.w_[i];
    return r;
}

Bitset Bitset::minus(const Bitset& o) const {
    Bitset r(n_);
    for (size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] & ~o.w_[i];
    return r;
}

Bitset Bitset::complement() const {
    Bitset r(n_);
    for (size_t i = 0; i < w_.size(); ++i) r.w_[i] = ~w_[i];
    // clear the tail past n_
    int rem = n_ & 63;
    if (rem != 0) r.w_.back() &= (uint64_t(1) << rem) - 1;
    return r;
}

bool Bitset::value_less(const Bitset& o) const {
    for (size_t i = w_.size(); i-- > 0;) {
        if (w_[i] != o.w_[i]) return w_[i] < o.w_[i];
    }
    return false;
}

std::vector<int> Bitset::elements() const {
    std::vector<int> out;
    out.reserve(static_cast<size_t>(count()));
    for (size_t i = 0; i < w_.size(); ++i) {
        uint64_t w = w_[i];
        while (w) {
            out.push_back(static_cast<int>(i * 64) + std::countr_zero(w));
            w &= w - 1;
        }
    }
    return out;
}

int Bitset::first() const {
    for (size_t i = 0; i < w_.size(); ++i)
        if (w_[i]) return static_cast<int>(i * 64) + std::countr_zero(w_[i]);
    return -1;
}

std::string Bitset::str() const {
    std::string s = "{";
    bool sep = false;
    for (int e : elements()) {
        if (sep) s += ",";
        s += std::to_string(e);
        sep = true;
    }
    s += "}";
    return s;
}

size_t Bitset::hash() const {
    // FNV-1a over the words
    uint64_t h = 1469598103934665603ull;
    for (uint64_t w : w_) {
        h ^= w;
        h *= 1099511628211ull;
    }
    return static_cast<size_t>(h ^ static_cast<uint64_t>(n_));
}

bool canonical_less(const Bitset& a, const Bitset& b) {
    int ca = a.count(), cb = b.count();
    if (ca != cb) return ca < cb;
    return a.value_less(b);
}

Bitset singleton(int n, int i) {
    Bitset b(n);
    b.set(i);
    return b;
}

Bitset full_set(int n) {
    Bitset b(n);
    for (int i = 0; i < n; ++i) b.set(i);
    return b;
}

}  // namespace finalg

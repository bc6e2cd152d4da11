#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "finalg/bitset.hpp"
#include "finalg/diag.hpp"

namespace finalg {

inline constexpr int kRingEnumCap = 64;
inline constexpr int kClosureIterCap = 1 << 20;

// Raw operation tables as they arrive from a file or a constructor, before any
// axiom has been checked.  ring_validate works on this form so invalid tables
// can be inspected without building a FiniteRing.
struct RingTables {
    std::string label;
    int size = 0;
    int zero = 0;
    int one = 0;
    std::vector<uint16_t> add;  // size*size, row-major
    std::vector<uint16_t> mul;
};

// Full table sweep over every ring axiom: abelian group under add (closure is
// structural, so commutativity, associativity, identity, inverses), mul
// commutative monoid, distributivity.  Returns every violation, not just the
// first.
std::vector<Diagnostic> ring_validate(const RingTables& t);

class FiniteRing;
using RingPtr = std::shared_ptr<const FiniteRing>;

// Finite commutative ring with identity, immutable once built.  Units and
// additive inverses are precomputed by brute force at construction.
class FiniteRing {
public:
    // structural checks only (ranges, table shapes, additive inverses needed
    // for the neg table); run ring_validate first for untrusted tables
    static RingPtr create(RingTables t);

    int size() const { return t_.size; }
    int zero() const { return t_.zero; }
    int one() const { return t_.one; }
    int add(int a, int b) const { return t_.add[static_cast<size_t>(a) * t_.size + b]; }
    int mul(int a, int b) const { return t_.mul[static_cast<size_t>(a) * t_.size + b]; }
    int neg(int a) const { return neg_[a]; }
    int sub(int a, int b) const { return add(a, neg_[b]); }

    bool is_unit(int a) const { return units_.test(a); }
    const Bitset& unit_mask() const { return units_; }
    // ascending element order; zero is always a nonunit when size > 1
    const std::vector<int>& nonunits() const { return nonunits_; }
    // true when every element is zero or a unit, i.e. the nonunit-quantified
    // predicates hold vacuously
    bool nonunits_trivial() const;

    const std::string& label() const { return t_.label; }
    const RingTables& tables() const { return t_; }

private:
    explicit FiniteRing(RingTables t);

    RingTables t_;
    std::vector<uint16_t> neg_;
    Bitset units_;
    std::vector<int> nonunits_;
};

RingPtr make_zmod(int n);
// row-major pairing: (a, b) -> a*|R2| + b
RingPtr ring_product(const RingPtr& r1, const RingPtr& r2);

struct Ideal {
    RingPtr ring;
    Bitset members;

    bool proper() const { return members.count() < ring->size(); }
    std::string str() const { return members.str(); }
};

bool is_ideal(const RingPtr& r, const Bitset& members);
Ideal ideal_generated(const RingPtr& r, const std::vector<int>& gens);
Ideal zero_ideal(const RingPtr& r);
Ideal unit_ideal(const RingPtr& r);
Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_product(const Ideal& a, const Ideal& b);
Ideal ideal_intersection(const Ideal& a, const Ideal& b);
// elements with some power inside the ideal
Ideal radical(const Ideal& a);

// closure of the principal ideals under pairwise sums, deduplicated on the
// membership bitset, sorted by (popcount, numeric value); rejects rings
// larger than cap
std::vector<Ideal> all_ideals(const RingPtr& r, int cap = kRingEnumCap);
std::vector<Ideal> maximal_ideals(const RingPtr& r, int cap = kRingEnumCap);
// engaged exactly when the ring is local; holds the unique maximal ideal
std::optional<Ideal> is_local(const RingPtr& r, int cap = kRingEnumCap);
Ideal jacobson_radical(const RingPtr& r, int cap = kRingEnumCap);

// witness = lexicographically least violating tuple, slots unused by the
// predicate stay -1
struct IdealPredicateResult {
    bool holds = true;
    int a = -1, b = -1, c = -1;
};

// ab in I => a in I or b in I, over all pairs; I proper
IdealPredicateResult is_prime_ideal(const Ideal& I);
// abc in I => ab in I or ac in I or bc in I, over all triples; I proper
IdealPredicateResult is_2absorbing_ideal(const Ideal& I);
// abc in I => ab in I or c in I, over nonunit triples; I proper
IdealPredicateResult is_1absorbing_prime_ideal(const Ideal& I);

}  // namespace finalg

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "finalg/ring.hpp"

using namespace finalg;

// Expected values in this file are frozen from an independent brute-force
// enumeration that works directly from the definitions.

namespace {

std::vector<std::vector<int>> member_lists(const std::vector<Ideal>& ids) {
    std::vector<std::vector<int>> out;
    for (const Ideal& i : ids) out.push_back(i.members.elements());
    return out;
}

Bitset of(int n, std::vector<int> elems) {
    Bitset b(n);
    for (int e : elems) b.set(e);
    return b;
}

}  // namespace

TEST_CASE("zmod arithmetic") {
    RingPtr z6 = make_zmod(6);
    CHECK(z6->size() == 6);
    CHECK(z6->zero() == 0);
    CHECK(z6->one() == 1);
    CHECK(z6->label() == "Z6");
    CHECK(z6->add(4, 5) == 3);
    CHECK(z6->mul(4, 5) == 2);
    CHECK(z6->neg(2) == 4);
    CHECK(z6->sub(1, 3) == 4);

    CHECK(z6->is_unit(1));
    CHECK(z6->is_unit(5));
    CHECK_FALSE(z6->is_unit(0));
    CHECK_FALSE(z6->is_unit(3));
    CHECK(z6->nonunits() == std::vector<int>{0, 2, 3, 4});
    CHECK(z6->unit_mask().elements() == std::vector<int>{1, 5});
    CHECK_FALSE(z6->nonunits_trivial());

    CHECK(make_zmod(2)->nonunits_trivial());
    CHECK(make_zmod(3)->nonunits_trivial());
    CHECK_FALSE(make_zmod(4)->nonunits_trivial());
    CHECK(make_zmod(1)->size() == 1);

    CHECK_THROWS_AS(make_zmod(0), Error);
    CHECK_THROWS_AS(make_zmod(-3), Error);
}

TEST_CASE("ring validation accepts valid tables and reports broken axioms") {
    RingTables good = make_zmod(6)->tables();
    CHECK(ring_validate(good).empty());

    SUBCASE("broken additive associativity / group structure") {
        RingTables t = good;
        t.add[1 * 6 + 1] = 3;  // 1+1 := 3
        CHECK_FALSE(ring_validate(t).empty());
    }
    SUBCASE("broken multiplicative commutativity") {
        RingTables t = good;
        t.mul[2 * 6 + 3] = 1;  // 2*3 := 1, 3*2 stays 0
        auto ds = ring_validate(t);
        REQUIRE_FALSE(ds.empty());
        bool mentions = false;
        for (const auto& d : ds) mentions = mentions || !d.render().empty();
        CHECK(mentions);
    }
    SUBCASE("broken distributivity") {
        RingTables t = good;
        t.mul[2 * 6 + 2] = 1;  // 2*2 := 1
        CHECK_FALSE(ring_validate(t).empty());
    }
    SUBCASE("wrong identity element") {
        RingTables t = good;
        t.one = 2;
        CHECK_FALSE(ring_validate(t).empty());
    }
    SUBCASE("out-of-range table entry") {
        RingTables t = good;
        t.add[0] = 9;
        CHECK_FALSE(ring_validate(t).empty());
    }
}

TEST_CASE("ring product is componentwise with row-major indexing") {
    RingPtr p = ring_product(make_zmod(2), make_zmod(3));
    CHECK(p->size() == 6);
    CHECK(p->label() == "Z2xZ3");
    // (1,2) has index 1*3+2 = 5; (1,2)+(1,2) = (0,1) = index 1
    CHECK(p->add(5, 5) == 1);
    // (1,2)*(1,2) = (1,1) = index 4
    CHECK(p->mul(5, 5) == 4);
    CHECK(p->zero() == 0);
    CHECK(p->one() == 4);  // (1,1)
    // units of Z2xZ3 are (1,1) and (1,2)
    CHECK(p->unit_mask().elements() == std::vector<int>{4, 5});
    CHECK(ring_validate(p->tables()).empty());
}

TEST_CASE("ideal generation and arithmetic in Z12") {
    RingPtr z12 = make_zmod(12);

    CHECK(ideal_generated(z12, {8}).members.elements() == std::vector<int>{0, 4, 8});
    CHECK(ideal_generated(z12, {2}).members.elements() == std::vector<int>{0, 2, 4, 6, 8, 10});
    CHECK(ideal_generated(z12, {3, 4}).members.count() == 12);  // gcd 1
    CHECK(zero_ideal(z12).members.elements() == std::vector<int>{0});
    CHECK(unit_ideal(z12).members.count() == 12);
    CHECK_FALSE(unit_ideal(z12).proper());
    CHECK(zero_ideal(z12).proper());

    Ideal i2 = ideal_generated(z12, {2});
    Ideal i3 = ideal_generated(z12, {3});
    Ideal i4 = ideal_generated(z12, {4});
    CHECK(ideal_sum(i3, i4).members.count() == 12);
    CHECK(ideal_product(i2, i2).members == i4.members);
    CHECK(ideal_product(i2, i3).members.elements() == std::vector<int>{0, 6});
    CHECK(ideal_intersection(i2, i3).members.elements() == std::vector<int>{0, 6});
    CHECK(radical(i4).members == i2.members);
    CHECK(radical(zero_ideal(z12)).members.elements() == std::vector<int>{0, 6});

    CHECK(is_ideal(z12, i4.members));
    CHECK_FALSE(is_ideal(z12, of(12, {0, 4})));       // not closed under addition
    CHECK_FALSE(is_ideal(z12, of(12, {4, 8})));       // missing zero
    CHECK_FALSE(is_ideal(z12, of(12, {0, 1, 2, 3}))); // not scalar-closed
}

TEST_CASE("ideal lattice of Z12 in canonical order") {
    RingPtr z12 = make_zmod(12);
    auto ids = member_lists(all_ideals(z12));
    std::vector<std::vector<int>> want = {
        {0},
        {0, 6},
        {0, 4, 8},
        {0, 3, 6, 9},
        {0, 2, 4, 6, 8, 10},
        {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11},
    };
    CHECK(ids == want);

    auto maxi = member_lists(maximal_ideals(z12));
    std::vector<std::vector<int>> want_max = {{0, 3, 6, 9}, {0, 2, 4, 6, 8, 10}};
    CHECK(maxi == want_max);

    CHECK(jacobson_radical(z12).members.elements() == std::vector<int>{0, 6});
    CHECK_FALSE(is_local(z12).has_value());

    auto loc8 = is_local(make_zmod(8));
    REQUIRE(loc8.has_value());
    CHECK(loc8->members.elements() == std::vector<int>{0, 2, 4, 6});

    CHECK(all_ideals(make_zmod(8)).size() == 4);
    CHECK_THROWS_AS(all_ideals(make_zmod(65)), CapError);
}

TEST_CASE("ideal predicates with lex-least witnesses on Z12") {
    RingPtr z12 = make_zmod(12);
    Ideal z = zero_ideal(z12);
    Ideal i6 = ideal_generated(z12, {6});
    Ideal i4 = ideal_generated(z12, {4});
    Ideal i3 = ideal_generated(z12, {3});
    Ideal i2 = ideal_generated(z12, {2});

    auto p = is_prime_ideal(z);
    CHECK_FALSE(p.holds);
    CHECK(p.a == 2);
    CHECK(p.b == 6);

    p = is_prime_ideal(i6);
    CHECK_FALSE(p.holds);
    CHECK(p.a == 2);
    CHECK(p.b == 3);

    p = is_prime_ideal(i4);
    CHECK_FALSE(p.holds);
    CHECK(p.a == 2);
    CHECK(p.b == 2);

    CHECK(is_prime_ideal(i3).holds);
    CHECK(is_prime_ideal(i2).holds);

    auto o = is_1absorbing_prime_ideal(z);
    CHECK_FALSE(o.holds);
    CHECK(o.a == 2);
    CHECK(o.b == 2);
    CHECK(o.c == 3);

    o = is_1absorbing_prime_ideal(i6);
    CHECK_FALSE(o.holds);
    CHECK(o.a == 2);
    CHECK(o.b == 2);
    CHECK(o.c == 3);

    o = is_1absorbing_prime_ideal(i4);
    CHECK_FALSE(o.holds);
    CHECK(o.a == 2);
    CHECK(o.b == 3);
    CHECK(o.c == 2);

    CHECK(is_1absorbing_prime_ideal(i3).holds);
    CHECK(is_1absorbing_prime_ideal(i2).holds);

    auto t = is_2absorbing_ideal(z);
    CHECK_FALSE(t.holds);
    CHECK(t.a == 2);
    CHECK(t.b == 2);
    CHECK(t.c == 3);
    CHECK(is_2absorbing_ideal(i6).holds);
    CHECK(is_2absorbing_ideal(i4).holds);
    CHECK(is_2absorbing_ideal(i3).holds);
    CHECK(is_2absorbing_ideal(i2).holds);

    // predicates require a proper ideal
    CHECK_THROWS_AS(is_prime_ideal(unit_ideal(z12)), Error);
    CHECK_THROWS_AS(is_1absorbing_prime_ideal(unit_ideal(z12)), Error);
    CHECK_THROWS_AS(is_2absorbing_ideal(unit_ideal(z12)), Error);
}

TEST_CASE("every single-cell mutation of a valid table is caught") {
    // a taste of the full sampled sweep the acceptance harness runs
    RingTables good = make_zmod(4)->tables();
    for (int cell = 0; cell < 16; ++cell) {
        for (int v = 0; v < 4; ++v) {
            if (good.add[static_cast<size_t>(cell)] != v) {
                RingTables t = good;
                t.add[static_cast<size_t>(cell)] = static_cast<uint16_t>(v);
                CHECK_FALSE(ring_validate(t).empty());
            }
            if (good.mul[static_cast<size_t>(cell)] != v) {
                RingTables t = good;
                t.mul[static_cast<size_t>(cell)] = static_cast<uint16_t>(v);
                CHECK_FALSE(ring_validate(t).empty());
            }
        }
    }
}

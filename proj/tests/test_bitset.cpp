#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "finalg/bitset.hpp"

using namespace finalg;

TEST_CASE("membership, count, elements, first") {
    Bitset b(70);
    CHECK(b.capacity() == 70);
    CHECK(b.none());
    CHECK(b.count() == 0);
    CHECK(b.first() == -1);
    CHECK(b.elements().empty());

    b.set(0);
    b.set(64);
    b.set(69);
    CHECK(b.any());
    CHECK(b.count() == 3);
    CHECK(b.test(0));
    CHECK(b.test(64));
    CHECK(b.test(69));
    CHECK_FALSE(b.test(1));
    CHECK(b.first() == 0);
    CHECK(b.elements() == std::vector<int>{0, 64, 69});

    b.reset(0);
    CHECK_FALSE(b.test(0));
    CHECK(b.count() == 2);
    CHECK(b.first() == 64);
}

TEST_CASE("set algebra") {
    Bitset a(8), b(8);
    a.set(0);
    a.set(2);
    a.set(4);
    b.set(2);
    b.set(3);

    CHECK((a | b).elements() == std::vector<int>{0, 2, 3, 4});
    CHECK((a & b).elements() == std::vector<int>{2});
    CHECK(a.minus(b).elements() == std::vector<int>{0, 4});
    CHECK(a.complement().elements() == std::vector<int>{1, 3, 5, 6, 7});
    CHECK(a.intersects(b));
    CHECK_FALSE(a.minus(b).intersects(b));
    CHECK((a & b).subset_of(a));
    CHECK((a & b).subset_of(b));
    CHECK_FALSE(a.subset_of(b));
    CHECK(a.subset_of(a));
}

TEST_CASE("equality and rendering") {
    Bitset a(5), b(5);
    a.set(0);
    a.set(4);
    b.set(0);
    CHECK(a != b);
    b.set(4);
    CHECK(a == b);
    CHECK(a.hash() == b.hash());
    CHECK(a.str() == "{0,4}");
    CHECK(Bitset(5).str() == "{}");
    CHECK(full_set(3).str() == "{0,1,2}");
    CHECK(singleton(4, 2).elements() == std::vector<int>{2});
}

TEST_CASE("numeric order treats element 0 as least significant") {
    // {1} = 2 > {0} = 1; {0,1} = 3 > {2} = 4 is false: {2} = 4 wins
    Bitset e0(70), e1(70), e01(70), e2(70), e64(70);
    e0.set(0);
    e1.set(1);
    e01.set(0);
    e01.set(1);
    e2.set(2);
    e64.set(64);

    CHECK(e0.value_less(e1));
    CHECK(e1.value_less(e01));
    CHECK(e01.value_less(e2));
    CHECK(e2.value_less(e64));
    CHECK_FALSE(e64.value_less(e2));
    CHECK_FALSE(e0.value_less(e0));
}

TEST_CASE("canonical order sorts by popcount then numeric value") {
    // frozen from the Z8 ideal lattice: {0} < {0,4} < {0,2,4,6} < full
    Bitset z(8), i4(8), i2(8);
    z.set(0);
    i4.set(0);
    i4.set(4);
    i2.set(0);
    i2.set(2);
    i2.set(4);
    i2.set(6);

    CHECK(canonical_less(z, i4));
    CHECK(canonical_less(i4, i2));
    CHECK(canonical_less(i2, full_set(8)));
    CHECK_FALSE(canonical_less(i4, z));

    // same popcount: numeric value decides; {0,2} = 5 < {1,2} = 6
    Bitset a(4), b(4);
    a.set(0);
    a.set(2);
    b.set(1);
    b.set(2);
    CHECK(canonical_less(a, b));
    CHECK_FALSE(canonical_less(b, a));
    CHECK_FALSE(canonical_less(a, a));
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "finalg/classify.hpp"
#include "finalg/construct.hpp"
#include "finalg/module.hpp"

using namespace finalg;

// Expected values frozen from an independent brute-force enumeration.

namespace {

Bitset of(int n, std::vector<int> elems) {
    Bitset b(n);
    for (int e : elems) b.set(e);
    return b;
}

}  // namespace

TEST_CASE("principal form of ideals") {
    RingPtr z12 = make_zmod(12);
    CHECK(principal_form(ideal_generated(z12, {4})) == "(4)");
    CHECK(principal_form(ideal_generated(z12, {8})) == "(4)");
    CHECK(principal_form(ideal_generated(z12, {})) == "(0)");
    CHECK(principal_form(ideal_generated(z12, {5})) == "(1)");
}

TEST_CASE("duplicating Z4 along (2)") {
    RingPtr z4 = make_zmod(4);
    AmalgamRing ar = amalgamate_ring(z4, ideal_generated(z4, {2}));
    RingPtr d = ar.result;

    CHECK(d->size() == 8);
    CHECK(d->label() == "dup(Z4,(2))");
    CHECK(ar.ideal_elems == std::vector<int>{0, 2});
    CHECK(ring_validate(d->tables()).empty());

    // index i encodes the pair (first(i), second(i))
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < 8; ++i) pairs.emplace_back(ar.first(i), ar.second(i));
    std::vector<std::pair<int, int>> want = {{0, 0}, {0, 2}, {1, 1}, {1, 3},
                                             {2, 2}, {2, 0}, {3, 3}, {3, 1}};
    CHECK(pairs == want);
    CHECK(ar.encode(1, 1) == 3);

    CHECK(d->zero() == 0);
    CHECK(d->one() == ar.encode(1, 0));
    CHECK(d->add(3, 5) == 6);   // (1,3)+(2,0) = (3,3)
    CHECK(d->mul(3, 5) == 5);   // (1,3)*(2,0) = (2,0)
    CHECK(d->add(2, 7) == 1);   // (1,1)+(3,1) = (0,2)
    CHECK(d->mul(2, 7) == 7);   // (1,1)*(3,1) = (3,1)
    CHECK(d->unit_mask().elements() == std::vector<int>{2, 3, 6, 7});
}

TEST_CASE("duplicating along the zero ideal changes nothing") {
    RingPtr z6 = make_zmod(6);
    AmalgamRing ar = amalgamate_ring(z6, ideal_generated(z6, {}));
    CHECK(ar.result->size() == 6);
    for (int i = 0; i < 6; ++i) {
        CHECK(ar.first(i) == i);
        CHECK(ar.second(i) == i);
        for (int j = 0; j < 6; ++j) {
            CHECK(ar.result->add(i, j) == z6->add(i, j));
            CHECK(ar.result->mul(i, j) == z6->mul(i, j));
        }
    }
}

TEST_CASE("duplicated modules and submodules") {
    RingPtr z4 = make_zmod(4);
    ModulePtr m4 = ring_as_module(z4);
    AmalgamModule am = amalgamate_module(m4, ideal_generated(z4, {2}));

    CHECK(am.result->size() == 8);
    CHECK(am.result->label() == "dup(Z4,(2))");
    CHECK(am.im.members.elements() == std::vector<int>{0, 2});
    CHECK(module_validate(am.result->tables()).empty());

    // scalar rule (a,a+i)(m,m+m') = (am, (a+i)(m+m'))
    // element 3 of the ring is (1,3); element 5 of the module is (2,0)
    CHECK(am.result->act(3, 5) == 5);  // (1*2, 3*0) = (2,0)
    CHECK(am.result->act(2, 3) == 3);  // (1,1)(1,3) = (1,3)

    Submodule base_p = submodule_generated(m4, {2});
    Submodule dup_p = amalgamate_submodule(am, base_p);
    CHECK(dup_p.members.elements() == std::vector<int>{0, 1, 4, 5});
    CHECK(is_submodule(am.result, dup_p.members));

    // residual ideals transfer bit-exactly through duplication
    Ideal base_res = residual_ideal_full(base_p);
    Ideal dup_res = residual_ideal_full(dup_p);
    CHECK(dup_res.members == amalgamate_ideal(am.ring, base_res).members);

    // frozen classification of the duplicated module
    ClassReport r0 = classify(zero_submodule(am.result));
    CHECK_FALSE(r0.prime.holds);
    CHECK(r0.prime.witness == Witness{1, -1, -1, 1});
    CHECK_FALSE(r0.classical_prime.holds);
    CHECK(r0.classical_prime.witness == Witness{1, 1, -1, 2});
    CHECK_FALSE(r0.semiprime.holds);
    CHECK(r0.semiprime.witness == Witness{1, -1, -1, 2});
    CHECK(r0.one_abs.holds);
    CHECK(r0.classical_one_abs.holds);
    CHECK(r0.classical_two_abs.holds);

    ClassReport r1 = classify(Submodule{am.result, of(8, {0, 1})});
    CHECK_FALSE(r1.prime.holds);
    CHECK(r1.prime.witness == Witness{4, -1, -1, 4});
    CHECK_FALSE(r1.classical_prime.holds);
    CHECK(r1.classical_prime.witness == Witness{4, 4, -1, 2});
    CHECK_FALSE(r1.semiprime.holds);
    CHECK(r1.semiprime.witness == Witness{4, -1, -1, 2});
    CHECK(r1.one_abs.holds);
    CHECK(r1.classical_one_abs.holds);
    CHECK(r1.classical_two_abs.holds);

    ClassReport rp = classify(dup_p);
    CHECK(rp.prime.holds);
    CHECK(rp.classical_one_abs.holds);
    CHECK(rp.classical_two_abs.holds);
}

TEST_CASE("duplicated module sizes") {
    RingPtr z8 = make_zmod(8);
    AmalgamModule am = amalgamate_module(ring_as_module(z8), ideal_generated(z8, {2}));
    CHECK(am.ring.result->size() == 32);
    CHECK(am.result->size() == 32);
    CHECK(am.im.members.count() == 4);
}

TEST_CASE("amalgam caps") {
    RingPtr z80 = make_zmod(80);
    CHECK_THROWS_AS(amalgamate_ring(z80, ideal_generated(z80, {1})), CapError);
    RingPtr z70 = make_zmod(70);
    CHECK_THROWS_AS(amalgamate_module(ring_as_module(z70), ideal_generated(z70, {1})),
                    CapError);
}

TEST_CASE("direct sums") {
    ModulePtr z4 = ring_as_module(make_zmod(4));
    ModulePtr half = quotient_module(z4, submodule_generated(z4, {2})).quotient;
    ModulePtr klein = direct_sum({half, half}, "Z2(+)Z2 over Z4");

    CHECK(klein->size() == 4);
    CHECK(klein->label() == "Z2(+)Z2 over Z4");
    CHECK(klein->ring() == z4->ring());
    CHECK(module_validate(klein->tables()).empty());
    // row-major pairing: (x,y) at index 2x+y; 2*(1,0) = (0,0)
    CHECK(klein->act(2, 2) == 0);
    CHECK(klein->add(2, 1) == 3);
    CHECK(klein->add(3, 3) == 0);

    CHECK_FALSE(is_multiplication_module(klein));
    Submodule axis{klein, of(4, {0, 2})};
    CHECK(is_submodule(klein, axis.members));
    CHECK_THROWS_AS(submodule_product(axis, axis), Error);

    // summands must share the scalar ring
    CHECK_THROWS_AS(direct_sum({z4, ring_as_module(make_zmod(6))}, "bad"), Error);
    // cap on the total size
    std::vector<ModulePtr> many(7, ring_as_module(make_zmod(4)));
    CHECK_THROWS_AS(direct_sum(many, "big"), CapError);
}

TEST_CASE("free tensor extension") {
    ModulePtr z4 = ring_as_module(make_zmod(4));
    ModulePtr t = free_tensor(z4, 2);
    CHECK(t->size() == 16);
    CHECK(t->label() == "Z4^2");

    Submodule base_p = submodule_generated(z4, {2});
    Submodule tp = free_tensor_submodule(t, base_p, 2);
    CHECK(tp.members.elements() == std::vector<int>{0, 2, 8, 10});
    CHECK(is_submodule(t, tp.members));

    // the six flags agree between the base and the extension
    for (const Submodule& p : {zero_submodule(z4), base_p}) {
        ClassReport rb = classify(p);
        ClassReport rt = classify(free_tensor_submodule(t, p, 2));
        CHECK(rb.prime.holds == rt.prime.holds);
        CHECK(rb.classical_prime.holds == rt.classical_prime.holds);
        CHECK(rb.semiprime.holds == rt.semiprime.holds);
        CHECK(rb.one_abs.holds == rt.one_abs.holds);
        CHECK(rb.classical_one_abs.holds == rt.classical_one_abs.holds);
        CHECK(rb.classical_two_abs.holds == rt.classical_two_abs.holds);
    }

    CHECK_THROWS_AS(free_tensor(ring_as_module(make_zmod(12)), 4), CapError);
}

TEST_CASE("product modules over product rings") {
    ModulePtr m2 = ring_as_module(make_zmod(2));
    ModulePtr m4 = ring_as_module(make_zmod(4));
    ModulePtr prod = product_module(m2, m4);

    CHECK(prod->size() == 8);
    CHECK(prod->label() == "Z2xZ4");
    CHECK(prod->ring()->size() == 8);
    CHECK(module_validate(prod->tables()).empty());

    Submodule p = product_submodule(prod, full_submodule(m2), submodule_generated(m4, {2}));
    CHECK(p.members.elements() == std::vector<int>{0, 2, 4, 6});
    CHECK(is_submodule(prod, p.members));

    Submodule q = product_submodule(prod, zero_submodule(m2), full_submodule(m4));
    CHECK(q.members.elements() == std::vector<int>{0, 1, 2, 3});
}

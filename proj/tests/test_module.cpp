#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "finalg/module.hpp"

using namespace finalg;

// Expected values frozen from an independent brute-force enumeration.

namespace {

Bitset of(int n, std::vector<int> elems) {
    Bitset b(n);
    for (int e : elems) b.set(e);
    return b;
}

std::vector<std::vector<int>> member_lists(const std::vector<Submodule>& subs) {
    std::vector<std::vector<int>> out;
    for (const Submodule& s : subs) out.push_back(s.members.elements());
    return out;
}

}  // namespace

TEST_CASE("ring as module and relabeling") {
    RingPtr z12 = make_zmod(12);
    ModulePtr m = ring_as_module(z12);
    CHECK(m->size() == 12);
    CHECK(m->zero() == 0);
    CHECK(m->label() == "Z12");
    CHECK(m->ring() == z12);
    CHECK(m->add(7, 8) == 3);
    CHECK(m->act(5, 7) == 11);
    CHECK(m->neg(5) == 7);
    CHECK(m->sub(3, 5) == 10);
    CHECK(module_validate(m->tables()).empty());

    ModulePtr renamed = with_label(m, "twelve");
    CHECK(renamed->label() == "twelve");
    CHECK(renamed->size() == 12);
    CHECK(renamed->ring() == z12);
    CHECK(renamed->tables().add == m->tables().add);
    CHECK(renamed->tables().act == m->tables().act);
}

TEST_CASE("module validation rejects broken action laws") {
    ModuleTables good = ring_as_module(make_zmod(6))->tables();
    CHECK(module_validate(good).empty());

    SUBCASE("identity must act as identity") {
        ModuleTables t = good;
        t.act[1 * 6 + 3] = 0;  // 1*3 := 0
        CHECK_FALSE(module_validate(t).empty());
    }
    SUBCASE("distributivity over module addition") {
        ModuleTables t = good;
        t.act[2 * 6 + 3] = 1;  // 2*3 := 1
        CHECK_FALSE(module_validate(t).empty());
    }
    SUBCASE("additive group structure") {
        ModuleTables t = good;
        t.add[2 * 6 + 2] = 5;  // 2+2 := 5
        CHECK_FALSE(module_validate(t).empty());
    }
}

TEST_CASE("submodule generation and lattice of Z12") {
    ModulePtr m = ring_as_module(make_zmod(12));

    CHECK(submodule_generated(m, {8}).members.elements() == std::vector<int>{0, 4, 8});
    CHECK(submodule_generated(m, {}).members.elements() == std::vector<int>{0});
    CHECK(submodule_generated(m, {3, 4}).members.count() == 12);
    CHECK(zero_submodule(m).members.elements() == std::vector<int>{0});
    CHECK(full_submodule(m).members.count() == 12);
    CHECK_FALSE(full_submodule(m).proper());

    Submodule s4 = submodule_generated(m, {4});
    Submodule s6 = submodule_generated(m, {6});
    CHECK(submodule_sum(s4, s6).members.elements() == std::vector<int>{0, 2, 4, 6, 8, 10});

    auto subs = member_lists(all_submodules(m));
    std::vector<std::vector<int>> want = {
        {0},
        {0, 6},
        {0, 4, 8},
        {0, 3, 6, 9},
        {0, 2, 4, 6, 8, 10},
        {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11},
    };
    CHECK(subs == want);

    CHECK(is_submodule(m, of(12, {0, 4, 8})));
    CHECK_FALSE(is_submodule(m, of(12, {0, 4})));
    CHECK_FALSE(is_submodule(m, of(12, {4, 8})));

    CHECK_THROWS_AS(all_submodules(m, 4), CapError);
}

TEST_CASE("residuals in Z12") {
    ModulePtr m = ring_as_module(make_zmod(12));
    Submodule p4{m, of(12, {0, 4, 8})};

    CHECK(residual_in_module(p4, 2).members.elements() ==
          std::vector<int>{0, 2, 4, 6, 8, 10});
    CHECK(residual_in_module(p4, 1).members == p4.members);
    CHECK(residual_in_module(p4, 0).members.count() == 12);

    CHECK(residual_ideal_of_element(p4, 2).members.elements() ==
          std::vector<int>{0, 2, 4, 6, 8, 10});
    CHECK(residual_ideal_of_element(p4, 1).members == p4.members);
    CHECK(residual_ideal_of_element(p4, 0).members.count() == 12);

    CHECK(residual_ideal_full(p4).members == p4.members);
    CHECK(residual_ideal(p4, of(12, {0, 2})).members.elements() ==
          std::vector<int>{0, 2, 4, 6, 8, 10});

    Ideal i2 = ideal_generated(m->ring(), {2});
    CHECK(ideal_times_submodule(i2, full_submodule(m)).members.elements() ==
          std::vector<int>{0, 2, 4, 6, 8, 10});
    CHECK(ideal_times_submodule(i2, p4).members.elements() == std::vector<int>{0, 4, 8});
    CHECK(ideal_times_element(i2, m, 3).members.elements() == std::vector<int>{0, 6});
    CHECK(ideal_times_element(i2, m, 2).members.elements() == std::vector<int>{0, 4, 8});
}

TEST_CASE("homomorphisms Z12 -> Z12/<4>") {
    ModulePtr src = ring_as_module(make_zmod(12));
    QuotientModule q = quotient_module(src, submodule_generated(src, {4}));
    ModulePtr dst = q.quotient;

    CHECK(dst->size() == 4);
    CHECK(dst->ring() == src->ring());
    // cosets keyed by least member: 0+<4>, 1+<4>, 2+<4>, 3+<4>
    CHECK(q.coset_rep == std::vector<int>{0, 1, 2, 3});
    CHECK(q.projection(5) == 1);
    CHECK(q.projection(11) == 3);
    CHECK(hom_validate(q.projection).empty());

    CHECK(hom_kernel(q.projection).members.elements() == std::vector<int>{0, 4, 8});
    CHECK(hom_image(q.projection, full_submodule(src)).members.count() == 4);
    CHECK(hom_image(q.projection, submodule_generated(src, {2})).members.elements() ==
          std::vector<int>{0, 2});
    CHECK(hom_preimage(q.projection, Submodule{dst, of(4, {0, 2})}).members.elements() ==
          std::vector<int>{0, 2, 4, 6, 8, 10});

    ModuleHom f = hom_from_generators(src, dst, {{1, 1}});
    CHECK(f.map == q.projection.map);
    // 1 -> 1 and 2 -> 1 cannot extend additively
    CHECK_THROWS_AS(hom_from_generators(src, dst, {{1, 1}, {2, 1}}), Error);

    ModuleHom bad = q.projection;
    bad.map[5] = 2;
    CHECK_FALSE(hom_validate(bad).empty());
}

TEST_CASE("quotient by the zero and full submodules") {
    ModulePtr m = ring_as_module(make_zmod(6));
    QuotientModule q0 = quotient_module(m, zero_submodule(m));
    CHECK(q0.quotient->size() == 6);
    QuotientModule qf = quotient_module(m, full_submodule(m));
    CHECK(qf.quotient->size() == 1);
}

TEST_CASE("multiplication modules and submodule products") {
    ModulePtr m = ring_as_module(make_zmod(12));
    CHECK(is_multiplication_module(m));

    Submodule s4 = submodule_generated(m, {4});
    Submodule s6 = submodule_generated(m, {6});
    CHECK(submodule_product(s4, s6).members.elements() == std::vector<int>{0});
    CHECK(submodule_product(s4, full_submodule(m)).members == s4.members);

    Submodule s2 = submodule_generated(m, {2});
    CHECK(submodule_product(s2, s2).members.elements() == std::vector<int>{0, 4, 8});
}

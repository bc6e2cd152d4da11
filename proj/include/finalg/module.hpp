#pragma once

#include <memory>
#include <string>
#include <vector>

#include "finalg/ring.hpp"

namespace finalg {

inline constexpr int kSubmoduleEnumCap = 512;
inline constexpr int kGenerationCap = 4096;

struct ModuleTables {
    std::string label;
    RingPtr ring;
    int size = 0;
    int zero = 0;
    std::vector<uint16_t> add;  // size*size, row-major
    std::vector<uint16_t> act;  // ring_size*size, row-major (scalar first)
};

// abelian group axioms for add, then the action laws: 1*m = m,
// (a+b)m = am + bm, a(m+n) = am + an, (ab)m = a(bm)
std::vector<Diagnostic> module_validate(const ModuleTables& t);

class FiniteModule;
using ModulePtr = std::shared_ptr<const FiniteModule>;

class FiniteModule {
public:
    static ModulePtr create(ModuleTables t);

    int size() const { return t_.size; }
    int zero() const { return t_.zero; }
    int add(int m, int n) const { return t_.add[static_cast<size_t>(m) * t_.size + n]; }
    int act(int a, int m) const { return t_.act[static_cast<size_t>(a) * t_.size + m]; }
    int neg(int m) const { return neg_[m]; }
    int sub(int m, int n) const { return add(m, neg_[n]); }

    const RingPtr& ring() const { return t_.ring; }
    const std::string& label() const { return t_.label; }
    const ModuleTables& tables() const { return t_; }

private:
    explicit FiniteModule(ModuleTables t);

    ModuleTables t_;
    std::vector<uint16_t> neg_;
};

ModulePtr ring_as_module(const RingPtr& r);
// same tables under a new name
ModulePtr with_label(const ModulePtr& m, std::string label);

struct Submodule {
    ModulePtr module;
    Bitset members;

    bool proper() const { return members.count() < module->size(); }
    std::string str() const { return members.str(); }
};

bool is_submodule(const ModulePtr& m, const Bitset& members);
// additive closure of the scalar multiples of the generators; the module may
// have at most gen_cap elements
Submodule submodule_generated(const ModulePtr& m, const std::vector<int>& gens,
                              int gen_cap = kGenerationCap);
Submodule zero_submodule(const ModulePtr& m);
Submodule full_submodule(const ModulePtr& m);
Submodule submodule_sum(const Submodule& a, const Submodule& b);

// cyclic submodules closed under pairwise sums, sorted by (popcount, numeric
// value); refuses modules larger than cap
std::vector<Submodule> all_submodules(const ModulePtr& m, int cap = kSubmoduleEnumCap);

// (P :_M a) = { m : a m in P }
Submodule residual_in_module(const Submodule& P, int a);
// (P :_A m) = { a : a m in P }
Ideal residual_ideal_of_element(const Submodule& P, int m);
// (P :_A L) = { a : a L subset P }, L given as a member set
Ideal residual_ideal(const Submodule& P, const Bitset& L);
// (P :_A M)
Ideal residual_ideal_full(const Submodule& P);
// I M for an ideal I and submodule L: submodule generated by { a l }
Submodule ideal_times_submodule(const Ideal& I, const Submodule& L);
// { a m : a in I }, already a submodule
Submodule ideal_times_element(const Ideal& I, const ModulePtr& m, int elt);

struct ModuleHom {
    ModulePtr source;
    ModulePtr target;
    std::vector<uint16_t> map;  // source element -> target element

    int operator()(int m) const { return map[m]; }
};

// additivity and action compatibility over all pairs
std::vector<Diagnostic> hom_validate(const ModuleHom& f);
// extends images of generators through the additive/action closure of the
// source; the prescribed images must generate a consistent assignment, which
// hom_validate confirms afterwards
ModuleHom hom_from_generators(const ModulePtr& source, const ModulePtr& target,
                              const std::vector<std::pair<int, int>>& gen_images);
Submodule hom_image(const ModuleHom& f, const Submodule& P);
Submodule hom_preimage(const ModuleHom& f, const Submodule& Q);
Submodule hom_kernel(const ModuleHom& f);

struct QuotientModule {
    ModulePtr quotient;
    ModuleHom projection;
    std::vector<int> coset_rep;  // quotient element -> least source element
};

// cosets keyed by least member; the zero coset lands at index 0
QuotientModule quotient_module(const ModulePtr& m, const Submodule& L);

// every submodule N satisfies (N :_A M) M = N
bool is_multiplication_module(const ModulePtr& m, int cap = kSubmoduleEnumCap);
// (N :_A M)(K :_A M) M, the product of submodules of a multiplication module
Submodule submodule_product(const Submodule& N, const Submodule& K);

}  // namespace finalg

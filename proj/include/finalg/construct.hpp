#pragma once

#include <string>
#include <vector>

#include "finalg/module.hpp"

namespace finalg {

inline constexpr int kAmalgamCap = 4096;
inline constexpr int kTensorCap = 4096;

// "(g)" when the ideal is generated by the single element g (least such
// generator), otherwise the raw member set
std::string principal_form(const Ideal& I);

// The duplicated ring along an ideal: carrier { (a, a+i) : a in A, i in I },
// with componentwise operations, materialized on indices a*|I| + rank(i)
// where rank runs over the ascending members of I.
struct AmalgamRing {
    RingPtr base;
    Ideal ideal;
    RingPtr result;
    std::vector<int> ideal_elems;  // rank -> base element

    int encode(int a, int rank) const { return a * static_cast<int>(ideal_elems.size()) + rank; }
    // the two components of a result element, as base ring elements
    int first(int idx) const { return idx / static_cast<int>(ideal_elems.size()); }
    int second(int idx) const {
        return base->add(first(idx), ideal_elems[idx % static_cast<int>(ideal_elems.size())]);
    }
};

AmalgamRing amalgamate_ring(const RingPtr& base, const Ideal& I);

// The duplicated module: carrier { (m, m+m') : m in M, m' in IM } over the
// duplicated ring, scalar rule (a,a+i)(m,m+m') = (am, (a+i)(m+m')); indices
// m*|IM| + rank(m').
struct AmalgamModule {
    AmalgamRing ring;
    ModulePtr base;
    Submodule im;  // IM inside the base module
    ModulePtr result;
    std::vector<int> im_elems;  // rank -> base element

    int encode(int m, int rank) const { return m * static_cast<int>(im_elems.size()) + rank; }
    int first(int idx) const { return idx / static_cast<int>(im_elems.size()); }
    int second(int idx) const {
        return base->add(first(idx), im_elems[idx % static_cast<int>(im_elems.size())]);
    }
};

AmalgamModule amalgamate_module(const AmalgamRing& ring, const ModulePtr& base,
                                int cap = kAmalgamCap);
AmalgamModule amalgamate_module(const ModulePtr& base, const Ideal& I, int cap = kAmalgamCap);

// { (m, m+m') : m in P, m' in IM } as a submodule of the duplicated module
Submodule amalgamate_submodule(const AmalgamModule& am, const Submodule& P);
// { (x, x+i) : x in J, i in I } as an ideal of the duplicated ring
Ideal amalgamate_ideal(const AmalgamRing& ar, const Ideal& J);

// same-ring direct sum with the diagonal action, row-major index fold
ModulePtr direct_sum(const std::vector<ModulePtr>& parts, const std::string& label,
                     int cap = kTensorCap);

// M^k, the free-module scalar extension of M along A^k
ModulePtr free_tensor(const ModulePtr& m, int k, int cap = kTensorCap);
// P^k inside a tensor module previously built by free_tensor
Submodule free_tensor_submodule(const ModulePtr& tensor, const Submodule& p, int k);

// module over the product ring, componentwise action, row-major pairing
ModulePtr product_module(const ModulePtr& m1, const ModulePtr& m2);
Submodule product_submodule(const ModulePtr& prod, const Submodule& p1, const Submodule& p2);

}  // namespace finalg

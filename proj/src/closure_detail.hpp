#pragma once

#include "finalg/bitset.hpp"
#include "finalg/diag.hpp"
#include "finalg/ring.hpp"

namespace finalg::detail {

// Additive closure of a starting set in a finite abelian group given by its
// add table.  Every add application counts against the iteration cap;
// exceeding it is an explicit failure, not a silent truncation.
template <class AddFn>
Bitset additive_closure(Bitset s, AddFn&& add, long long iter_cap = kClosureIterCap) {
    std::vector<int> elems = s.elements();
    long long steps = 0;
    for (size_t qi = 0; qi < elems.size(); ++qi) {
        int x = elems[qi];
        for (size_t si = 0; si <= qi; ++si) {
            int y = elems[si];
            if (++steps > iter_cap)
                throw CapError("pairwise-sum closure exceeded the iteration cap");
            int z = add(x, y);
            if (!s.test(z)) {
                s.set(z);
                elems.push_back(z);
            }
        }
    }
    return s;
}

}  // namespace finalg::detail

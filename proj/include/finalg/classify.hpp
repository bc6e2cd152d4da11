#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "finalg/module.hpp"

namespace finalg {

inline constexpr int kMClosedModuleCap = 16;
inline constexpr int kMClosedIdealCap = 16;

// element indices into the ring (a,b,c) and module (m); unused slots stay -1
struct Witness {
    int a = -1, b = -1, c = -1, m = -1;

    bool operator==(const Witness& o) const = default;
    std::string str() const;
};

struct PredicateResult {
    bool holds = true;
    Witness witness;  // lexicographically least violating tuple when !holds
};

// The six submodule predicates.  All require a proper submodule of a nonzero
// module over a ring of size > 1.  These entry points run the OpenMP kernels;
// serial:: holds the plain reference loops kept for testing and benchmarking.
// Both return identical results including the witness.

// a m in P => m in P or a in (P :_A M), over all a
PredicateResult is_prime_submodule(const Submodule& P);
// a b m in P => a m in P or b m in P, over all a, b
PredicateResult is_classical_prime(const Submodule& P);
// a a m in P => a m in P, over all a
PredicateResult is_semiprime(const Submodule& P);
// a b c m in P => ab in (P :_A M) or c m in P, over nonunit a, b, c
PredicateResult is_one_abs_prime(const Submodule& P);
// a b c m in P => a b m in P or c m in P, over nonunit a, b, c
PredicateResult is_classical_one_abs_prime(const Submodule& P);
// a b c m in P => a b m in P or a c m in P or b c m in P, over all a, b, c
PredicateResult is_classical_two_absorbing(const Submodule& P);

namespace serial {
PredicateResult is_prime_submodule(const Submodule& P);
PredicateResult is_classical_prime(const Submodule& P);
PredicateResult is_semiprime(const Submodule& P);
PredicateResult is_one_abs_prime(const Submodule& P);
PredicateResult is_classical_one_abs_prime(const Submodule& P);
PredicateResult is_classical_two_absorbing(const Submodule& P);
}  // namespace serial

// single-tuple checks shared with counterexample minimization
bool violates_prime(const Submodule& P, const Ideal& colon_full, int a, int m);
bool violates_classical_prime(const Submodule& P, int a, int b, int m);
bool violates_semiprime(const Submodule& P, int a, int m);
bool violates_one_abs(const Submodule& P, const Ideal& colon_full, int a, int b, int c, int m);
bool violates_classical_one_abs(const Submodule& P, int a, int b, int c, int m);
bool violates_classical_two_abs(const Submodule& P, int a, int b, int c, int m);

struct ClassReport {
    std::string module_label;
    Bitset members;
    // nonunit-quantified predicates hold vacuously (ring has no nonzero
    // nonunit)
    bool vacuous = false;
    PredicateResult prime, classical_prime, semiprime;
    PredicateResult one_abs, classical_one_abs, classical_two_abs;
};

// evaluates all six flags and asserts the implication chain
// prime => classical prime => classical 1-absorbing => classical 2-absorbing,
// one_abs => classical 1-absorbing
ClassReport classify(const Submodule& P);

enum class OracleStatus { holds, fails, skipped };

struct OracleResult {
    OracleStatus status = OracleStatus::skipped;
    Witness witness;          // element-quantified forms only
    std::string detail;       // rendering of ideal/submodule witnesses
    std::string skip_reason;
};

// Independent evaluations of the characterization forms equivalent to the
// classical 1-absorbing prime definition.  a, b, c always range over nonunits,
// m over module elements, I, J, K over proper ideals, L over every submodule
// including M itself.  Caps turn a form into skipped, never a guess.
// Element family:
//   "elt_union"        (P:_M abc) = (P:_M ab) union (P:_M c)
//   "elt_collapse_ab"  abm not in P => (P:_A abm) = (P:_A m)
//   "elt_aIb"          aIbm sub P => aIm sub P or bm in P
//   "elt_collapse_aI"  aIm not sub P => (P:_A aIm) = (P:_A m)
//   "elt_aIJ"          aIJm sub P => aIm sub P or Jm sub P
//   "elt_collapse_IJ"  IJm not sub P => (P:_A IJm) = (P:_A m)
//   "elt_IJK"          IJKm sub P => IJm sub P or Km sub P
//   "elt_colon_1abs"   (P:_A m) is a 1-absorbing prime ideal for every m not in P
// Submodule family:
//   "sub_dichotomy"    (P:_M abc) = (P:_M ab) or (P:_M abc) = (P:_M c)
//   "sub_triple"       abcL sub P => abL sub P or cL sub P
//   "sub_collapse_ab"  abL not sub P => (P:_A abL) = (P:_A L)
//   "sub_abI"          abIL sub P => abL sub P or IL sub P
//   "sub_collapse_aI"  aIL not sub P => (P:_A aIL) = (P:_A L)
//   "sub_aIJ"          aIJL sub P => aIL sub P or JL sub P
//   "sub_collapse_IJ"  IJL not sub P => (P:_A IJL) = (P:_A L)
//   "sub_IJK"          IJKL sub P => IJL sub P or KL sub P
//   "sub_colon_1abs"   (P:_A L) is a 1-absorbing prime ideal for every L not inside P
std::map<std::string, OracleResult> classical_1abs_oracles(const Submodule& P,
                                                           int ring_cap = kRingEnumCap,
                                                           int submodule_cap = kSubmoduleEnumCap);

// for classical 1-absorbing prime P and nonunits a,b,c, m in M:
// (P :_A abcm) = (P :_A abm) union (P :_A cm), with equality to one side
struct ResidualUnion {
    Ideal abcm, abm, cm;
    bool equals_abm = false;
    bool equals_cm = false;
};
ResidualUnion residual_union_decomposition(const Submodule& P, int a, int b, int c, int m);

// minimal elements of the classical 1-absorbing prime submodules under
// inclusion, canonical order
std::vector<Submodule> minimal_classical_one_abs_primes(const ModulePtr& m,
                                                        int cap = kSubmoduleEnumCap);

struct MClosedResult {
    bool closed = true;
    // failing indices into all_ideals / all_submodules of the ambient module
    int I = -1, J = -1, K = -1, L = -1, N = -1;
    std::string detail;
};

// S subset M - {0}; for all proper ideals I, J, K and all submodules L, N:
// (N + IJL) meets S and (N + KL) meets S  =>  (N + IJKL) meets S.
// |M| <= module_cap and proper ideal count <= ideal_cap, else CapError.
MClosedResult is_c1ap_m_closed(const ModulePtr& m, const Bitset& S,
                               int module_cap = kMClosedModuleCap,
                               int ideal_cap = kMClosedIdealCap);

// maximal submodule disjoint from a nonempty m-closed S (least canonical
// bitset among the maximal ones); such a submodule is classical 1-absorbing
// prime, which callers can confirm independently
Submodule krull_maximal_disjoint(const ModulePtr& m, const Bitset& S,
                                 int module_cap = kMClosedModuleCap);

}  // namespace finalg

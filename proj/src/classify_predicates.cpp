#include "finalg/classify.hpp"

namespace finalg {

namespace {

constexpr unsigned long long kNoHit = ~0ULL;

void require_proper_submodule(const Submodule& P) {
    if (!P.module) throw Error("predicate requires a submodule with a module attached");
    if (!P.proper()) throw Error("predicate requires a proper submodule");
}

// Witness tuples are packed so numeric order equals lexicographic order on the
// quantifier tuple; the parallel kernels reduce with min over these keys.
unsigned long long pack2(int a, int m, int n) {
    return static_cast<unsigned long long>(a) * n + m;
}
unsigned long long pack3(int a, int b, int m, int s, int n) {
    return (static_cast<unsigned long long>(a) * s + b) * n + m;
}
unsigned long long pack4(int a, int b, int c, int m, int s, int n) {
    return ((static_cast<unsigned long long>(a) * s + b) * s + c) * n + m;
}

Witness unpack2(unsigned long long k, int n) {
    return Witness{static_cast<int>(k / n), -1, -1, static_cast<int>(k % n)};
}
Witness unpack3(unsigned long long k, int s, int n) {
    int m = static_cast<int>(k % n);
    k /= n;
    return Witness{static_cast<int>(k / s), static_cast<int>(k % s), -1, m};
}
Witness unpack4(unsigned long long k, int s, int n) {
    int m = static_cast<int>(k % n);
    k /= n;
    int c = static_cast<int>(k % s);
    k /= s;
    return Witness{static_cast<int>(k / s), static_cast<int>(k % s), c, m};
}

unsigned long long scan_prime(const Submodule& P, const Ideal& colon, int a) {
    const FiniteModule& M = *P.module;
    for (int m = 0; m < M.size(); ++m)
        if (violates_prime(P, colon, a, m)) return pack2(a, m, M.size());
    return kNoHit;
}

unsigned long long scan_classical_prime(const Submodule& P, int a) {
    const FiniteModule& M = *P.module;
    const int s = M.ring()->size(), n = M.size();
    for (int b = 0; b < s; ++b)
        for (int m = 0; m < n; ++m)
            if (violates_classical_prime(P, a, b, m)) return pack3(a, b, m, s, n);
    return kNoHit;
}

unsigned long long scan_semiprime(const Submodule& P, int a) {
    const FiniteModule& M = *P.module;
    for (int m = 0; m < M.size(); ++m)
        if (violates_semiprime(P, a, m)) return pack2(a, m, M.size());
    return kNoHit;
}

unsigned long long scan_one_abs(const Submodule& P, const Ideal& colon,
                                const std::vector<int>& nu, int a) {
    const FiniteModule& M = *P.module;
    const int s = M.ring()->size(), n = M.size();
    for (int b : nu)
        for (int c : nu)
            for (int m = 0; m < n; ++m)
                if (violates_one_abs(P, colon, a, b, c, m)) return pack4(a, b, c, m, s, n);
    return kNoHit;
}

unsigned long long scan_classical_one_abs(const Submodule& P, const std::vector<int>& nu, int a) {
    const FiniteModule& M = *P.module;
    const int s = M.ring()->size(), n = M.size();
    for (int b : nu)
        for (int c : nu)
            for (int m = 0; m < n; ++m)
                if (violates_classical_one_abs(P, a, b, c, m)) return pack4(a, b, c, m, s, n);
    return kNoHit;
}

unsigned long long scan_classical_two_abs(const Submodule& P, int a) {
    const FiniteModule& M = *P.module;
    const int s = M.ring()->size(), n = M.size();
    for (int b = 0; b < s; ++b)
        for (int c = 0; c < s; ++c)
            for (int m = 0; m < n; ++m)
                if (violates_classical_two_abs(P, a, b, c, m)) return pack4(a, b, c, m, s, n);
    return kNoHit;
}

}  // namespace

std::string Witness::str() const {
    std::string out;
    auto slot = [&](const char* name, int v) {
        if (v < 0) return;
        if (!out.empty()) out += ' ';
        out += name;
        out += '=';
        out += std::to_string(v);
    };
    slot("a", a);
    slot("b", b);
    slot("c", c);
    slot("m", m);
    return out.empty() ? "none" : out;
}

bool violates_prime(const Submodule& P, const Ideal& colon_full, int a, int m) {
    const FiniteModule& M = *P.module;
    return P.members.test(M.act(a, m)) && !P.members.test(m) && !colon_full.members.test(a);
}

bool violates_classical_prime(const Submodule& P, int a, int b, int m) {
    const FiniteModule& M = *P.module;
    int bm = M.act(b, m);
    return P.members.test(M.act(a, bm)) && !P.members.test(M.act(a, m)) && !P.members.test(bm);
}

bool violates_semiprime(const Submodule& P, int a, int m) {
    const FiniteModule& M = *P.module;
    int am = M.act(a, m);
    return P.members.test(M.act(a, am)) && !P.members.test(am);
}

bool violates_one_abs(const Submodule& P, const Ideal& colon_full, int a, int b, int c, int m) {
    const FiniteModule& M = *P.module;
    int ab = M.ring()->mul(a, b);
    int cm = M.act(c, m);
    return P.members.test(M.act(ab, cm)) && !colon_full.members.test(ab) && !P.members.test(cm);
}

bool violates_classical_one_abs(const Submodule& P, int a, int b, int c, int m) {
    const FiniteModule& M = *P.module;
    int ab = M.ring()->mul(a, b);
    int cm = M.act(c, m);
    return P.members.test(M.act(ab, cm)) && !P.members.test(M.act(ab, m)) && !P.members.test(cm);
}

bool violates_classical_two_abs(const Submodule& P, int a, int b, int c, int m) {
    const FiniteModule& M = *P.module;
    const FiniteRing& R = *M.ring();
    int ab = R.mul(a, b);
    if (!P.members.test(M.act(R.mul(ab, c), m))) return false;
    return !P.members.test(M.act(ab, m)) && !P.members.test(M.act(R.mul(a, c), m)) &&
           !P.members.test(M.act(R.mul(b, c), m));
}

namespace serial {

PredicateResult is_prime_submodule(const Submodule& P) {
    require_proper_submodule(P);
    Ideal colon = residual_ideal_full(P);
    const int s = P.module->ring()->size(), n = P.module->size();
    for (int a = 0; a < s; ++a)
        if (auto k = scan_prime(P, colon, a); k != kNoHit) return {false, unpack2(k, n)};
    return {};
}

PredicateResult is_classical_prime(const Submodule& P) {
    require_proper_submodule(P);
    const int s = P.module->ring()->size(), n = P.module->size();
    for (int a = 0; a < s; ++a)
        if (auto k = scan_classical_prime(P, a); k != kNoHit) return {false, unpack3(k, s, n)};
    return {};
}

PredicateResult is_semiprime(const Submodule& P) {
    require_proper_submodule(P);
    const int s = P.module->ring()->size(), n = P.module->size();
    for (int a = 0; a < s; ++a)
        if (auto k = scan_semiprime(P, a); k != kNoHit) return {false, unpack2(k, n)};
    return {};
}

PredicateResult is_one_abs_prime(const Submodule& P) {
    require_proper_submodule(P);
    Ideal colon = residual_ideal_full(P);
    const auto& nu = P.module->ring()->nonunits();
    const int s = P.module->ring()->size(), n = P.module->size();
    for (int a : nu)
        if (auto k = scan_one_abs(P, colon, nu, a); k != kNoHit) return {false, unpack4(k, s, n)};
    return {};
}

PredicateResult is_classical_one_abs_prime(const Submodule& P) {
    require_proper_submodule(P);
    const auto& nu = P.module->ring()->nonunits();
    const int s = P.module->ring()->size(), n = P.module->size();
    for (int a : nu)
        if (auto k = scan_classical_one_abs(P, nu, a); k != kNoHit)
            return {false, unpack4(k, s, n)};
    return {};
}

PredicateResult is_classical_two_absorbing(const Submodule& P) {
    require_proper_submodule(P);
    const int s = P.module->ring()->size(), n = P.module->size();
    for (int a = 0; a < s; ++a)
        if (auto k = scan_classical_two_abs(P, a); k != kNoHit) return {false, unpack4(k, s, n)};
    return {};
}

}  // namespace serial

PredicateResult is_prime_submodule(const Submodule& P) {
    require_proper_submodule(P);
    Ideal colon = residual_ideal_full(P);
    const int s = P.module->ring()->size(), n = P.module->size();
    unsigned long long best = kNoHit;
#pragma omp parallel for schedule(dynamic) reduction(min : best)
    for (int a = 0; a < s; ++a) {
        unsigned long long k = scan_prime(P, colon, a);
        if (k < best) best = k;
    }
    if (best == kNoHit) return {};
    return {false, unpack2(best, n)};
}

PredicateResult is_classical_prime(const Submodule& P) {
    require_proper_submodule(P);
    const int s = P.module->ring()->size(), n = P.module->size();
    unsigned long long best = kNoHit;
#pragma omp parallel for schedule(dynamic) reduction(min : best)
    for (int a = 0; a < s; ++a) {
        unsigned long long k = scan_classical_prime(P, a);
        if (k < best) best = k;
    }
    if (best == kNoHit) return {};
    return {false, unpack3(best, s, n)};
}

PredicateResult is_semiprime(const Submodule& P) {
    require_proper_submodule(P);
    const int s = P.module->ring()->size(), n = P.module->size();
    unsigned long long best = kNoHit;
#pragma omp parallel for schedule(dynamic) reduction(min : best)
    for (int a = 0; a < s; ++a) {
        unsigned long long k = scan_semiprime(P, a);
        if (k < best) best = k;
    }
    if (best == kNoHit) return {};
    return {false, unpack2(best, n)};
}

PredicateResult is_one_abs_prime(const Submodule& P) {
    require_proper_submodule(P);
    Ideal colon = residual_ideal_full(P);
    const auto& nu = P.module->ring()->nonunits();
    const int s = P.module->ring()->size(), n = P.module->size();
    unsigned long long best = kNoHit;
#pragma omp parallel for schedule(dynamic) reduction(min : best)
    for (int ai = 0; ai < static_cast<int>(nu.size()); ++ai) {
        unsigned long long k = scan_one_abs(P, colon, nu, nu[ai]);
        if (k < best) best = k;
    }
    if (best == kNoHit) return {};
    return {false, unpack4(best, s, n)};
}

PredicateResult is_classical_one_abs_prime(const Submodule& P) {
    require_proper_submodule(P);
    const auto& nu = P.module->ring()->nonunits();
    const int s = P.module->ring()->size(), n = P.module->size();
    unsigned long long best = kNoHit;
#pragma omp parallel for schedule(dynamic) reduction(min : best)
    for (int ai = 0; ai < static_cast<int>(nu.size()); ++ai) {
        unsigned long long k = scan_classical_one_abs(P, nu, nu[ai]);
        if (k < best) best = k;
    }
    if (best == kNoHit) return {};
    return {false, unpack4(best, s, n)};
}

PredicateResult is_classical_two_absorbing(const Submodule& P) {
    require_proper_submodule(P);
    const int s = P.module->ring()->size(), n = P.module->size();
    unsigned long long best = kNoHit;
#pragma omp parallel for schedule(dynamic) reduction(min : best)
    for (int a = 0; a < s; ++a) {
        unsigned long long k = scan_classical_two_abs(P, a);
        if (k < best) best = k;
    }
    if (best == kNoHit) return {};
    return {false, unpack4(best, s, n)};
}

ClassReport classify(const Submodule& P) {
    ClassReport rep;
    rep.module_label = P.module->label();
    rep.members = P.members;
    rep.vacuous = P.module->ring()->nonunits_trivial();
    rep.prime = is_prime_submodule(P);
    rep.classical_prime = is_classical_prime(P);
    rep.semiprime = is_semiprime(P);
    rep.one_abs = is_one_abs_prime(P);
    rep.classical_one_abs = is_classical_one_abs_prime(P);
    rep.classical_two_abs = is_classical_two_absorbing(P);
    auto chain = [&](bool from, bool to, const char* what) {
        if (from && !to)
            throw Error("implication chain violated (" + std::string(what) + ") for " +
                        rep.module_label + " " + P.str());
    };
    chain(rep.prime.holds, rep.classical_prime.holds, "prime vs classical prime");
    chain(rep.classical_prime.holds, rep.classical_one_abs.holds,
          "classical prime vs classical 1-absorbing");
    chain(rep.one_abs.holds, rep.classical_one_abs.holds,
          "1-absorbing vs classical 1-absorbing");
    chain(rep.classical_one_abs.holds, rep.classical_two_abs.holds,
          "classical 1-absorbing vs classical 2-absorbing");
    return rep;
}

}  // namespace finalg

#include "finalg/ring.hpp"

#include <algorithm>
#include <unordered_set>

#include "closure_detail.hpp"

namespace finalg {

namespace {

bool table_shape_ok(const RingTables& t, std::vector<Diagnostic>& out) {
    bool ok = true;
    if (t.size <= 0) {
        out.push_back({"size-positive", {t.size}});
        return false;
    }
    size_t need = static_cast<size_t>(t.size) * t.size;
    if (t.add.size() != need) {
        out.push_back({"add-table-shape", {}});
        ok = false;
    }
    if (t.mul.size() != need) {
        out.push_back({"mul-table-shape", {}});
        ok = false;
    }
    if (t.zero < 0 || t.zero >= t.size) {
        out.push_back({"zero-range", {t.zero}});
        ok = false;
    }
    if (t.one < 0 || t.one >= t.size) {
        out.push_back({"one-range", {t.one}});
        ok = false;
    }
    if (!ok) return false;
    for (size_t i = 0; i < need; ++i) {
        if (t.add[i] >= t.size) {
            out.push_back({"add-closure", {static_cast<int>(i / t.size), static_cast<int>(i % t.size)}});
            return false;
        }
        if (t.mul[i] >= t.size) {
            out.push_back({"mul-closure", {static_cast<int>(i / t.size), static_cast<int>(i % t.size)}});
            return false;
        }
    }
    return true;
}

}  // namespace

std::vector<Diagnostic> ring_validate(const RingTables& t) {
    std::vector<Diagnostic> out;
    if (!table_shape_ok(t, out)) return out;

    const int n = t.size;
    auto add = [&](int a, int b) { return static_cast<int>(t.add[static_cast<size_t>(a) * n + b]); };
    auto mul = [&](int a, int b) { return static_cast<int>(t.mul[static_cast<size_t>(a) * n + b]); };

    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (add(a, b) != add(b, a)) out.push_back({"add-commutativity", {a, b}});
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (add(add(a, b), c) != add(a, add(b, c)))
                    out.push_back({"add-associativity", {a, b, c}});
    for (int a = 0; a < n; ++a)
        if (add(t.zero, a) != a || add(a, t.zero) != a) out.push_back({"zero-identity", {a}});
    for (int a = 0; a < n; ++a) {
        bool has = false;
        for (int b = 0; b < n && !has; ++b)
            if (add(a, b) == t.zero) has = true;
        if (!has) out.push_back({"additive-inverse", {a}});
    }
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (mul(a, b) != mul(b, a)) out.push_back({"mul-commutativity", {a, b}});
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                    out.push_back({"mul-associativity", {a, b, c}});
    for (int a = 0; a < n; ++a)
        if (mul(t.one, a) != a || mul(a, t.one) != a) out.push_back({"one-identity", {a}});
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c)))
                    out.push_back({"distributivity", {a, b, c}});
    return out;
}

FiniteRing::FiniteRing(RingTables t) : t_(std::move(t)) {
    const int n = t_.size;
    neg_.assign(n, 0);
    for (int a = 0; a < n; ++a) {
        int found = -1;
        for (int b = 0; b < n; ++b)
            if (add(a, b) == t_.zero) {
                found = b;
                break;
            }
        if (found < 0) throw Error("ring '" + t_.label + "': element " + std::to_string(a) + " has no additive inverse");
        neg_[a] = static_cast<uint16_t>(found);
    }
    units_ = Bitset(n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (mul(a, b) == t_.one) {
                units_.set(a);
                break;
            }
    for (int a = 0; a < n; ++a)
        if (!units_.test(a)) nonunits_.push_back(a);
}

RingPtr FiniteRing::create(RingTables t) {
    std::vector<Diagnostic> shape;
    if (!table_shape_ok(t, shape)) throw Error("ring '" + t.label + "': " + render_diagnostics(shape));
    return RingPtr(new FiniteRing(std::move(t)));
}

bool FiniteRing::nonunits_trivial() const {
    for (int a : nonunits_)
        if (a != t_.zero) return false;
    return true;
}

RingPtr make_zmod(int n) {
    if (n < 1) throw Error("zmod modulus must be at least 1");
    RingTables t;
    t.label = "Z" + std::to_string(n);
    t.size = n;
    t.zero = 0;
    t.one = n == 1 ? 0 : 1;
    t.add.resize(static_cast<size_t>(n) * n);
    t.mul.resize(static_cast<size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            t.add[static_cast<size_t>(a) * n + b] = static_cast<uint16_t>((a + b) % n);
            t.mul[static_cast<size_t>(a) * n + b] = static_cast<uint16_t>((a * b) % n);
        }
    return FiniteRing::create(std::move(t));
}

RingPtr ring_product(const RingPtr& r1, const RingPtr& r2) {
    const int n1 = r1->size(), n2 = r2->size(), n = n1 * n2;
    RingTables t;
    t.label = r1->label() + "x" + r2->label();
    t.size = n;
    t.zero = r1->zero() * n2 + r2->zero();
    t.one = r1->one() * n2 + r2->one();
    t.add.resize(static_cast<size_t>(n) * n);
    t.mul.resize(static_cast<size_t>(n) * n);
    for (int a = 0; a < n; ++a) {
        int a1 = a / n2, a2 = a % n2;
        for (int b = 0; b < n; ++b) {
            int b1 = b / n2, b2 = b % n2;
            t.add[static_cast<size_t>(a) * n + b] =
                static_cast<uint16_t>(r1->add(a1, b1) * n2 + r2->add(a2, b2));
            t.mul[static_cast<size_t>(a) * n + b] =
                static_cast<uint16_t>(r1->mul(a1, b1) * n2 + r2->mul(a2, b2));
        }
    }
    return FiniteRing::create(std::move(t));
}

bool is_ideal(const RingPtr& r, const Bitset& members) {
    if (members.capacity() != r->size()) return false;
    if (!members.test(r->zero())) return false;
    auto elems = members.elements();
    for (int x : elems)
        for (int y : elems)
            if (!members.test(r->add(x, y))) return false;
    for (int a = 0; a < r->size(); ++a)
        for (int x : elems)
            if (!members.test(r->mul(a, x))) return false;
    return true;
}

Ideal ideal_generated(const RingPtr& r, const std::vector<int>& gens) {
    Bitset start(r->size());
    start.set(r->zero());
    for (int g : gens) {
        if (g < 0 || g >= r->size()) throw Error("generator out of range");
        for (int a = 0; a < r->size(); ++a) start.set(r->mul(a, g));
    }
    Bitset members = detail::additive_closure(start, [&](int x, int y) { return r->add(x, y); });
    return Ideal{r, std::move(members)};
}

Ideal zero_ideal(const RingPtr& r) {
    Bitset b(r->size());
    b.set(r->zero());
    return Ideal{r, std::move(b)};
}

Ideal unit_ideal(const RingPtr& r) { return Ideal{r, full_set(r->size())}; }

namespace {
void check_same_ring(const Ideal& a, const Ideal& b) {
    if (a.ring != b.ring) throw Error("ideal operands live in different rings");
}
}  // namespace

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
    check_same_ring(a, b);
    Bitset members =
        detail::additive_closure(a.members | b.members,
                                 [&](int x, int y) { return a.ring->add(x, y); });
    return Ideal{a.ring, std::move(members)};
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
    check_same_ring(a, b);
    const RingPtr& r = a.ring;
    Bitset start(r->size());
    start.set(r->zero());
    for (int x : a.members.elements())
        for (int y : b.members.elements()) start.set(r->mul(x, y));
    Bitset members = detail::additive_closure(start, [&](int x, int y) { return r->add(x, y); });
    return Ideal{r, std::move(members)};
}

Ideal ideal_intersection(const Ideal& a, const Ideal& b) {
    check_same_ring(a, b);
    return Ideal{a.ring, a.members & b.members};
}

Ideal radical(const Ideal& a) {
    const RingPtr& r = a.ring;
    Bitset members(r->size());
    for (int x = 0; x < r->size(); ++x) {
        int p = x;
        for (int k = 0; k < r->size(); ++k) {
            if (a.members.test(p)) {
                members.set(x);
                break;
            }
            p = r->mul(p, x);
        }
    }
    return Ideal{r, std::move(members)};
}

std::vector<Ideal> all_ideals(const RingPtr& r, int cap) {
    if (r->size() > cap)
        throw CapError("ring too large for ideal enumeration (" + std::to_string(r->size()) +
                       " > " + std::to_string(cap) + ")");
    std::unordered_set<Bitset, BitsetHash> seen;
    std::vector<Bitset> pool;
    for (int x = 0; x < r->size(); ++x) {
        Bitset b = ideal_generated(r, {x}).members;
        if (seen.insert(b).second) pool.push_back(std::move(b));
    }
    for (size_t i = 0; i < pool.size(); ++i)
        for (size_t j = 0; j <= i; ++j) {
            Bitset s = detail::additive_closure(pool[i] | pool[j],
                                                [&](int x, int y) { return r->add(x, y); });
            if (seen.insert(s).second) pool.push_back(std::move(s));
        }
    std::sort(pool.begin(), pool.end(), canonical_less);
    std::vector<Ideal> out;
    out.reserve(pool.size());
    for (auto& b : pool) out.push_back(Ideal{r, std::move(b)});
    return out;
}

std::vector<Ideal> maximal_ideals(const RingPtr& r, int cap) {
    std::vector<Ideal> ideals = all_ideals(r, cap);
    std::vector<Ideal> out;
    for (const Ideal& i : ideals) {
        if (!i.proper()) continue;
        bool maximal = true;
        for (const Ideal& j : ideals) {
            if (!j.proper() || j.members == i.members) continue;
            if (i.members.subset_of(j.members)) {
                maximal = false;
                break;
            }
        }
        if (maximal) out.push_back(i);
    }
    return out;
}

std::optional<Ideal> is_local(const RingPtr& r, int cap) {
    std::vector<Ideal> ms = maximal_ideals(r, cap);
    if (ms.size() == 1) return ms.front();
    return std::nullopt;
}

Ideal jacobson_radical(const RingPtr& r, int cap) {
    std::vector<Ideal> ms = maximal_ideals(r, cap);
    if (ms.empty()) return unit_ideal(r);
    Bitset acc = ms.front().members;
    for (size_t i = 1; i < ms.size(); ++i) acc = acc & ms[i].members;
    return Ideal{r, std::move(acc)};
}

namespace {
void require_proper(const Ideal& I) {
    if (!I.proper()) throw Error("predicate requires a proper ideal");
}
}  // namespace

IdealPredicateResult is_prime_ideal(const Ideal& I) {
    require_proper(I);
    const RingPtr& r = I.ring;
    for (int a = 0; a < r->size(); ++a) {
        if (I.members.test(a)) continue;
        for (int b = 0; b < r->size(); ++b) {
            if (I.members.test(b)) continue;
            if (I.members.test(r->mul(a, b))) return {false, a, b, -1};
        }
    }
    return {};
}

IdealPredicateResult is_2absorbing_ideal(const Ideal& I) {
    require_proper(I);
    const RingPtr& r = I.ring;
    for (int a = 0; a < r->size(); ++a)
        for (int b = 0; b < r->size(); ++b) {
            int ab = r->mul(a, b);
            for (int c = 0; c < r->size(); ++c) {
                if (!I.members.test(r->mul(ab, c))) continue;
                if (I.members.test(ab) || I.members.test(r->mul(a, c)) ||
                    I.members.test(r->mul(b, c)))
                    continue;
                return {false, a, b, c};
            }
        }
    return {};
}

IdealPredicateResult is_1absorbing_prime_ideal(const Ideal& I) {
    require_proper(I);
    const RingPtr& r = I.ring;
    const auto& nu = r->nonunits();
    for (int a : nu)
        for (int b : nu) {
            int ab = r->mul(a, b);
            if (I.members.test(ab)) continue;
            for (int c : nu) {
                if (I.members.test(c)) continue;
                if (I.members.test(r->mul(ab, c))) return {false, a, b, c};
            }
        }
    return {};
}

}  // namespace finalg

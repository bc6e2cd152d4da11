#include "finalg/module.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

#include "closure_detail.hpp"

namespace finalg {

namespace {

bool module_shape_ok(const ModuleTables& t, std::vector<Diagnostic>& out) {
    bool ok = true;
    if (!t.ring) {
        out.push_back({"ring-missing", {}});
        return false;
    }
    if (t.size <= 0) {
        out.push_back({"size-positive", {t.size}});
        return false;
    }
    if (t.add.size() != static_cast<size_t>(t.size) * t.size) {
        out.push_back({"add-table-shape", {}});
        ok = false;
    }
    if (t.act.size() != static_cast<size_t>(t.ring->size()) * t.size) {
        out.push_back({"act-table-shape", {}});
        ok = false;
    }
    if (t.zero < 0 || t.zero >= t.size) {
        out.push_back({"zero-range", {t.zero}});
        ok = false;
    }
    if (!ok) return false;
    for (size_t i = 0; i < t.add.size(); ++i)
        if (t.add[i] >= t.size) {
            out.push_back({"add-closure", {static_cast<int>(i / t.size), static_cast<int>(i % t.size)}});
            return false;
        }
    for (size_t i = 0; i < t.act.size(); ++i)
        if (t.act[i] >= t.size) {
            out.push_back({"act-closure", {static_cast<int>(i / t.size), static_cast<int>(i % t.size)}});
            return false;
        }
    return true;
}

}  // namespace

std::vector<Diagnostic> module_validate(const ModuleTables& t) {
    std::vector<Diagnostic> out;
    if (!module_shape_ok(t, out)) return out;

    const int n = t.size;
    const RingPtr& r = t.ring;
    auto add = [&](int m, int k) { return static_cast<int>(t.add[static_cast<size_t>(m) * n + k]); };
    auto act = [&](int a, int m) { return static_cast<int>(t.act[static_cast<size_t>(a) * n + m]); };

    for (int m = 0; m < n; ++m)
        for (int k = m + 1; k < n; ++k)
            if (add(m, k) != add(k, m)) out.push_back({"add-commutativity", {m, k}});
    for (int m = 0; m < n; ++m)
        for (int k = 0; k < n; ++k)
            for (int l = 0; l < n; ++l)
                if (add(add(m, k), l) != add(m, add(k, l)))
                    out.push_back({"add-associativity", {m, k, l}});
    for (int m = 0; m < n; ++m)
        if (add(t.zero, m) != m || add(m, t.zero) != m) out.push_back({"zero-identity", {m}});
    for (int m = 0; m < n; ++m) {
        bool has = false;
        for (int k = 0; k < n && !has; ++k)
            if (add(m, k) == t.zero) has = true;
        if (!has) out.push_back({"additive-inverse", {m}});
    }
    for (int m = 0; m < n; ++m)
        if (act(r->one(), m) != m) out.push_back({"one-action", {m}});
    for (int a = 0; a < r->size(); ++a)
        for (int b = 0; b < r->size(); ++b)
            for (int m = 0; m < n; ++m)
                if (act(r->add(a, b), m) != add(act(a, m), act(b, m)))
                    out.push_back({"scalar-add-distributivity", {a, b, m}});
    for (int a = 0; a < r->size(); ++a)
        for (int m = 0; m < n; ++m)
            for (int k = 0; k < n; ++k)
                if (act(a, add(m, k)) != add(act(a, m), act(a, k)))
                    out.push_back({"module-add-distributivity", {a, m, k}});
    for (int a = 0; a < r->size(); ++a)
        for (int b = 0; b < r->size(); ++b)
            for (int m = 0; m < n; ++m)
                if (act(r->mul(a, b), m) != act(a, act(b, m)))
                    out.push_back({"action-associativity", {a, b, m}});
    return out;
}

FiniteModule::FiniteModule(ModuleTables t) : t_(std::move(t)) {
    const int n = t_.size;
    neg_.assign(n, 0);
    for (int m = 0; m < n; ++m) {
        int found = -1;
        for (int k = 0; k < n; ++k)
            if (add(m, k) == t_.zero) {
                found = k;
                break;
            }
        if (found < 0)
            throw Error("module '" + t_.label + "': element " + std::to_string(m) +
                        " has no additive inverse");
        neg_[m] = static_cast<uint16_t>(found);
    }
}

ModulePtr FiniteModule::create(ModuleTables t) {
    std::vector<Diagnostic> shape;
    if (!module_shape_ok(t, shape)) throw Error("module '" + t.label + "': " + render_diagnostics(shape));
    return ModulePtr(new FiniteModule(std::move(t)));
}

ModulePtr ring_as_module(const RingPtr& r) {
    ModuleTables t;
    t.label = r->label();
    t.ring = r;
    t.size = r->size();
    t.zero = r->zero();
    t.add = r->tables().add;
    t.act = r->tables().mul;
    return FiniteModule::create(std::move(t));
}

ModulePtr with_label(const ModulePtr& m, std::string label) {
    ModuleTables t = m->tables();
    t.label = std::move(label);
    return FiniteModule::create(std::move(t));
}

bool is_submodule(const ModulePtr& m, const Bitset& members) {
    if (members.capacity() != m->size()) return false;
    if (!members.test(m->zero())) return false;
    auto elems = members.elements();
    for (int x : elems)
        for (int y : elems)
            if (!members.test(m->add(x, y))) return false;
    for (int a = 0; a < m->ring()->size(); ++a)
        for (int x : elems)
            if (!members.test(m->act(a, x))) return false;
    return true;
}

Submodule submodule_generated(const ModulePtr& m, const std::vector<int>& gens, int gen_cap) {
    if (m->size() > gen_cap)
        throw CapError("module too large for submodule generation (" + std::to_string(m->size()) +
                       " > " + std::to_string(gen_cap) + ")");
    Bitset start(m->size());
    start.set(m->zero());
    for (int g : gens) {
        if (g < 0 || g >= m->size()) throw Error("generator out of range");
        for (int a = 0; a < m->ring()->size(); ++a) start.set(m->act(a, g));
    }
    Bitset members = detail::additive_closure(start, [&](int x, int y) { return m->add(x, y); });
    return Submodule{m, std::move(members)};
}

Submodule zero_submodule(const ModulePtr& m) {
    Bitset b(m->size());
    b.set(m->zero());
    return Submodule{m, std::move(b)};
}

Submodule full_submodule(const ModulePtr& m) { return Submodule{m, full_set(m->size())}; }

Submodule submodule_sum(const Submodule& a, const Submodule& b) {
    if (a.module != b.module) throw Error("submodule operands live in different modules");
    Bitset members = detail::additive_closure(a.members | b.members,
                                              [&](int x, int y) { return a.module->add(x, y); });
    return Submodule{a.module, std::move(members)};
}

std::vector<Submodule> all_submodules(const ModulePtr& m, int cap) {
    if (m->size() > cap)
        throw CapError("module too large for submodule enumeration (" + std::to_string(m->size()) +
                       " > " + std::to_string(cap) + ")");
    std::unordered_set<Bitset, BitsetHash> seen;
    std::vector<Bitset> pool;
    for (int x = 0; x < m->size(); ++x) {
        Bitset b = submodule_generated(m, {x}, std::max(cap, m->size())).members;
        if (seen.insert(b).second) pool.push_back(std::move(b));
    }
    for (size_t i = 0; i < pool.size(); ++i)
        for (size_t j = 0; j <= i; ++j) {
            Bitset s = detail::additive_closure(pool[i] | pool[j],
                                                [&](int x, int y) { return m->add(x, y); });
            if (seen.insert(s).second) pool.push_back(std::move(s));
        }
    std::sort(pool.begin(), pool.end(), canonical_less);
    std::vector<Submodule> out;
    out.reserve(pool.size());
    for (auto& b : pool) out.push_back(Submodule{m, std::move(b)});
    return out;
}

Submodule residual_in_module(const Submodule& P, int a) {
    const ModulePtr& m = P.module;
    if (a < 0 || a >= m->ring()->size()) throw Error("scalar out of range");
    Bitset b(m->size());
    for (int x = 0; x < m->size(); ++x)
        if (P.members.test(m->act(a, x))) b.set(x);
    return Submodule{m, std::move(b)};
}

Ideal residual_ideal_of_element(const Submodule& P, int m) {
    const ModulePtr& mod = P.module;
    if (m < 0 || m >= mod->size()) throw Error("element out of range");
    const RingPtr& r = mod->ring();
    Bitset b(r->size());
    for (int a = 0; a < r->size(); ++a)
        if (P.members.test(mod->act(a, m))) b.set(a);
    return Ideal{r, std::move(b)};
}

Ideal residual_ideal(const Submodule& P, const Bitset& L) {
    const ModulePtr& mod = P.module;
    if (L.capacity() != mod->size()) throw Error("member set does not match the module carrier");
    const RingPtr& r = mod->ring();
    auto elems = L.elements();
    Bitset b(r->size());
    for (int a = 0; a < r->size(); ++a) {
        bool in = true;
        for (int x : elems)
            if (!P.members.test(mod->act(a, x))) {
                in = false;
                break;
            }
        if (in) b.set(a);
    }
    return Ideal{r, std::move(b)};
}

Ideal residual_ideal_full(const Submodule& P) {
    return residual_ideal(P, full_set(P.module->size()));
}

Submodule ideal_times_submodule(const Ideal& I, const Submodule& L) {
    const ModulePtr& m = L.module;
    if (I.ring != m->ring()) throw Error("ideal ring does not match the module ring");
    Bitset start(m->size());
    start.set(m->zero());
    for (int a : I.members.elements())
        for (int x : L.members.elements()) start.set(m->act(a, x));
    Bitset members = detail::additive_closure(start, [&](int x, int y) { return m->add(x, y); });
    return Submodule{m, std::move(members)};
}

Submodule ideal_times_element(const Ideal& I, const ModulePtr& m, int elt) {
    if (I.ring != m->ring()) throw Error("ideal ring does not match the module ring");
    if (elt < 0 || elt >= m->size()) throw Error("element out of range");
    Bitset b(m->size());
    for (int a : I.members.elements()) b.set(m->act(a, elt));
    return Submodule{m, std::move(b)};
}

std::vector<Diagnostic> hom_validate(const ModuleHom& f) {
    std::vector<Diagnostic> out;
    if (!f.source || !f.target) {
        out.push_back({"module-missing", {}});
        return out;
    }
    if (f.source->ring() != f.target->ring()) {
        out.push_back({"ring-mismatch", {}});
        return out;
    }
    const int n = f.source->size();
    if (f.map.size() != static_cast<size_t>(n)) {
        out.push_back({"map-shape", {}});
        return out;
    }
    for (int m = 0; m < n; ++m)
        if (f.map[m] >= f.target->size()) {
            out.push_back({"map-range", {m}});
            return out;
        }
    for (int m = 0; m < n; ++m)
        for (int k = 0; k < n; ++k)
            if (f(f.source->add(m, k)) != f.target->add(f(m), f(k)))
                out.push_back({"additivity", {m, k}});
    for (int a = 0; a < f.source->ring()->size(); ++a)
        for (int m = 0; m < n; ++m)
            if (f(f.source->act(a, m)) != f.target->act(a, f(m)))
                out.push_back({"action-compatibility", {a, m}});
    return out;
}

ModuleHom hom_from_generators(const ModulePtr& source, const ModulePtr& target,
                              const std::vector<std::pair<int, int>>& gen_images) {
    if (source->ring() != target->ring()) throw Error("hom endpoints live over different rings");
    const int n = source->size();
    std::vector<int> img(n, -1);
    std::vector<int> known;
    auto assign = [&](int m, int v) {
        if (img[m] == -1) {
            img[m] = v;
            known.push_back(m);
            return;
        }
        if (img[m] != v)
            throw Error("generator images are inconsistent at element " + std::to_string(m));
    };
    assign(source->zero(), target->zero());
    for (auto [g, v] : gen_images) {
        if (g < 0 || g >= n) throw Error("generator out of range");
        if (v < 0 || v >= target->size()) throw Error("generator image out of range");
        assign(g, v);
    }
    for (size_t qi = 0; qi < known.size(); ++qi) {
        int x = known[qi];
        for (int a = 0; a < source->ring()->size(); ++a)
            assign(source->act(a, x), target->act(a, img[x]));
        for (size_t si = 0; si <= qi; ++si) {
            int y = known[si];
            assign(source->add(x, y), target->add(img[x], img[y]));
        }
    }
    for (int m = 0; m < n; ++m)
        if (img[m] == -1) throw Error("generators do not span the source module");
    ModuleHom f;
    f.source = source;
    f.target = target;
    f.map.reserve(n);
    for (int m = 0; m < n; ++m) f.map.push_back(static_cast<uint16_t>(img[m]));
    return f;
}

Submodule hom_image(const ModuleHom& f, const Submodule& P) {
    if (P.module != f.source) throw Error("submodule does not live in the hom source");
    Bitset b(f.target->size());
    for (int m : P.members.elements()) b.set(f(m));
    return Submodule{f.target, std::move(b)};
}

Submodule hom_preimage(const ModuleHom& f, const Submodule& Q) {
    if (Q.module != f.target) throw Error("submodule does not live in the hom target");
    Bitset b(f.source->size());
    for (int m = 0; m < f.source->size(); ++m)
        if (Q.members.test(f(m))) b.set(m);
    return Submodule{f.source, std::move(b)};
}

Submodule hom_kernel(const ModuleHom& f) { return hom_preimage(f, zero_submodule(f.target)); }

QuotientModule quotient_module(const ModulePtr& m, const Submodule& L) {
    if (L.module != m) throw Error("submodule does not live in the module being divided");
    if (!is_submodule(m, L.members)) throw Error("coset divisor is not a submodule");
    const int n = m->size();
    auto lelems = L.members.elements();
    std::vector<int> key(n);
    for (int x = 0; x < n; ++x) {
        int best = n;
        for (int l : lelems) best = std::min(best, m->add(x, l));
        key[x] = best;
    }
    std::vector<int> reps;
    for (int x = 0; x < n; ++x)
        if (key[x] == x) reps.push_back(x);
    std::stable_partition(reps.begin(), reps.end(),
                          [&](int rep) { return rep == key[m->zero()]; });
    std::map<int, int> index_of;
    for (size_t i = 0; i < reps.size(); ++i) index_of[reps[i]] = static_cast<int>(i);

    const int q = static_cast<int>(reps.size());
    ModuleTables t;
    t.label = m->label() + "/" + L.members.str();
    t.ring = m->ring();
    t.size = q;
    t.zero = 0;
    t.add.resize(static_cast<size_t>(q) * q);
    t.act.resize(static_cast<size_t>(m->ring()->size()) * q);
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j)
            t.add[static_cast<size_t>(i) * q + j] =
                static_cast<uint16_t>(index_of.at(key[m->add(reps[i], reps[j])]));
    for (int a = 0; a < m->ring()->size(); ++a)
        for (int i = 0; i < q; ++i)
            t.act[static_cast<size_t>(a) * q + i] =
                static_cast<uint16_t>(index_of.at(key[m->act(a, reps[i])]));

    QuotientModule out;
    out.quotient = FiniteModule::create(std::move(t));
    out.coset_rep = reps;
    out.projection.source = m;
    out.projection.target = out.quotient;
    out.projection.map.reserve(n);
    for (int x = 0; x < n; ++x)
        out.projection.map.push_back(static_cast<uint16_t>(index_of.at(key[x])));
    return out;
}

bool is_multiplication_module(const ModulePtr& m, int cap) {
    Submodule whole = full_submodule(m);
    for (const Submodule& N : all_submodules(m, cap)) {
        Ideal I = residual_ideal_full(N);
        if (!(ideal_times_submodule(I, whole).members == N.members)) return false;
    }
    return true;
}

Submodule submodule_product(const Submodule& N, const Submodule& K) {
    if (N.module != K.module) throw Error("submodule operands live in different modules");
    if (!is_multiplication_module(N.module))
        throw Error("submodule products are only defined on multiplication modules");
    Ideal I = residual_ideal_full(N);
    Ideal J = residual_ideal_full(K);
    return ideal_times_submodule(ideal_product(I, J), full_submodule(N.module));
}

}  // namespace finalg

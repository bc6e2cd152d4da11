#include "finalg/construct.hpp"

#include <utility>

namespace finalg {

namespace {

std::vector<int> rank_table(const std::vector<int>& elems, int carrier) {
    std::vector<int> rank(static_cast<size_t>(carrier), -1);
    for (size_t i = 0; i < elems.size(); ++i) rank[static_cast<size_t>(elems[i])] = static_cast<int>(i);
    return rank;
}

}  // namespace

std::string principal_form(const Ideal& I) {
    for (int g : I.members.elements()) {
        if (ideal_generated(I.ring, {g}).members == I.members) return "(" + std::to_string(g) + ")";
    }
    return I.members.str();
}

AmalgamRing amalgamate_ring(const RingPtr& base, const Ideal& I) {
    if (I.ring != base) throw Error("amalgamation ideal does not live in the base ring");
    if (!is_ideal(base, I.members)) throw Error("amalgamation requires an ideal of the base ring");

    AmalgamRing out;
    out.base = base;
    out.ideal = I;
    out.ideal_elems = I.members.elements();
    const int ni = static_cast<int>(out.ideal_elems.size());
    const int n = base->size();
    const long long total = static_cast<long long>(n) * ni;
    if (total > kAmalgamCap)
        throw CapError("duplicated ring would have " + std::to_string(total) + " elements (cap " +
                       std::to_string(kAmalgamCap) + ")");

    std::vector<int> rank = rank_table(out.ideal_elems, n);
    const int size = static_cast<int>(total);

    RingTables t;
    t.label = "dup(" + base->label() + "," + principal_form(I) + ")";
    t.size = size;
    t.zero = out.encode(base->zero(), rank[static_cast<size_t>(base->zero())]);
    t.one = out.encode(base->one(), rank[static_cast<size_t>(base->zero())]);
    t.add.resize(static_cast<size_t>(size) * size);
    t.mul.resize(static_cast<size_t>(size) * size);
    for (int x = 0; x < size; ++x) {
        const int ax = out.first(x), sx = out.second(x);
        for (int y = 0; y < size; ++y) {
            const int ay = out.first(y), sy = out.second(y);
            const int afirst = base->add(ax, ay);
            const int aoff = rank[static_cast<size_t>(base->sub(base->add(sx, sy), afirst))];
            const int mfirst = base->mul(ax, ay);
            const int moff = rank[static_cast<size_t>(base->sub(base->mul(sx, sy), mfirst))];
            if (aoff < 0 || moff < 0)
                throw Error("duplicated ring operations left the ideal offset set");
            t.add[static_cast<size_t>(x) * size + y] = static_cast<uint16_t>(out.encode(afirst, aoff));
            t.mul[static_cast<size_t>(x) * size + y] = static_cast<uint16_t>(out.encode(mfirst, moff));
        }
    }
    out.result = FiniteRing::create(std::move(t));
    return out;
}

AmalgamModule amalgamate_module(const AmalgamRing& ring, const ModulePtr& base, int cap) {
    if (base->ring() != ring.base) throw Error("module base ring differs from the duplicated ring base");

    AmalgamModule out;
    out.ring = ring;
    out.base = base;
    out.im = ideal_times_submodule(ring.ideal, full_submodule(base));
    out.im_elems = out.im.members.elements();
    const int nim = static_cast<int>(out.im_elems.size());
    const int n = base->size();
    const long long total = static_cast<long long>(n) * nim;
    if (total > cap)
        throw CapError("duplicated module would have " + std::to_string(total) + " elements (cap " +
                       std::to_string(cap) + ")");

    std::vector<int> rank = rank_table(out.im_elems, n);
    const int size = static_cast<int>(total);
    const RingPtr& scalars = ring.result;

    ModuleTables t;
    t.label = "dup(" + base->label() + "," + principal_form(ring.ideal) + ")";
    t.ring = scalars;
    t.size = size;
    t.zero = out.encode(base->zero(), rank[static_cast<size_t>(base->zero())]);
    t.add.resize(static_cast<size_t>(size) * size);
    t.act.resize(static_cast<size_t>(scalars->size()) * size);
    for (int x = 0; x < size; ++x) {
        const int mx = out.first(x), sx = out.second(x);
        for (int y = 0; y < size; ++y) {
            const int first = base->add(mx, out.first(y));
            const int off = rank[static_cast<size_t>(base->sub(base->add(sx, out.second(y)), first))];
            if (off < 0) throw Error("duplicated module addition left the IM offset set");
            t.add[static_cast<size_t>(x) * size + y] = static_cast<uint16_t>(out.encode(first, off));
        }
    }
    for (int s = 0; s < scalars->size(); ++s) {
        const int a = ring.first(s), api = ring.second(s);
        for (int x = 0; x < size; ++x) {
            const int first = base->act(a, out.first(x));
            const int off = rank[static_cast<size_t>(base->sub(base->act(api, out.second(x)), first))];
            if (off < 0) throw Error("duplicated module action left the IM offset set");
            t.act[static_cast<size_t>(s) * size + x] = static_cast<uint16_t>(out.encode(first, off));
        }
    }
    out.result = FiniteModule::create(std::move(t));
    return out;
}

AmalgamModule amalgamate_module(const ModulePtr& base, const Ideal& I, int cap) {
    return amalgamate_module(amalgamate_ring(base->ring(), I), base, cap);
}

Submodule amalgamate_submodule(const AmalgamModule& am, const Submodule& P) {
    if (P.module != am.base) throw Error("submodule does not live in the duplicated module's base");
    Bitset bits(am.result->size());
    const int nim = static_cast<int>(am.im_elems.size());
    for (int m : P.members.elements())
        for (int r = 0; r < nim; ++r) bits.set(am.encode(m, r));
    return Submodule{am.result, bits};
}

Ideal amalgamate_ideal(const AmalgamRing& ar, const Ideal& J) {
    if (J.ring != ar.base) throw Error("ideal does not live in the duplicated ring's base");
    Bitset bits(ar.result->size());
    const int ni = static_cast<int>(ar.ideal_elems.size());
    for (int x : J.members.elements())
        for (int r = 0; r < ni; ++r) bits.set(ar.encode(x, r));
    return Ideal{ar.result, bits};
}

ModulePtr direct_sum(const std::vector<ModulePtr>& parts, const std::string& label, int cap) {
    if (parts.empty()) throw Error("direct sum needs at least one summand");
    const RingPtr& ring = parts.front()->ring();
    long long total = 1;
    for (const ModulePtr& p : parts) {
        if (p->ring() != ring) throw Error("direct sum summands must share one scalar ring");
        total *= p->size();
        if (total > cap)
            throw CapError("direct sum would have more than " + std::to_string(cap) + " elements");
    }
    const int size = static_cast<int>(total);
    const int k = static_cast<int>(parts.size());

    // digit decomposition, rightmost part fastest
    std::vector<std::vector<int>> digit(static_cast<size_t>(k), std::vector<int>(static_cast<size_t>(size)));
    std::vector<long long> stride(static_cast<size_t>(k), 1);
    for (int i = k - 2; i >= 0; --i) stride[static_cast<size_t>(i)] = stride[static_cast<size_t>(i + 1)] * parts[static_cast<size_t>(i + 1)]->size();
    for (int x = 0; x < size; ++x)
        for (int i = 0; i < k; ++i)
            digit[static_cast<size_t>(i)][static_cast<size_t>(x)] =
                static_cast<int>((x / stride[static_cast<size_t>(i)]) % parts[static_cast<size_t>(i)]->size());

    ModuleTables t;
    t.label = label;
    t.ring = ring;
    t.size = size;
    long long zero = 0;
    for (int i = 0; i < k; ++i) zero += stride[static_cast<size_t>(i)] * parts[static_cast<size_t>(i)]->zero();
    t.zero = static_cast<int>(zero);
    t.add.resize(static_cast<size_t>(size) * size);
    t.act.resize(static_cast<size_t>(ring->size()) * size);
    for (int x = 0; x < size; ++x) {
        for (int y = 0; y < size; ++y) {
            long long out = 0;
            for (int i = 0; i < k; ++i)
                out += stride[static_cast<size_t>(i)] *
                       parts[static_cast<size_t>(i)]->add(digit[static_cast<size_t>(i)][static_cast<size_t>(x)],
                                                          digit[static_cast<size_t>(i)][static_cast<size_t>(y)]);
            t.add[static_cast<size_t>(x) * size + y] = static_cast<uint16_t>(out);
        }
    }
    for (int a = 0; a < ring->size(); ++a) {
        for (int x = 0; x < size; ++x) {
            long long out = 0;
            for (int i = 0; i < k; ++i)
                out += stride[static_cast<size_t>(i)] *
                       parts[static_cast<size_t>(i)]->act(a, digit[static_cast<size_t>(i)][static_cast<size_t>(x)]);
            t.act[static_cast<size_t>(a) * size + x] = static_cast<uint16_t>(out);
        }
    }
    return FiniteModule::create(std::move(t));
}

ModulePtr free_tensor(const ModulePtr& m, int k, int cap) {
    if (k < 1) throw Error("tensor exponent must be positive");
    std::vector<ModulePtr> parts(static_cast<size_t>(k), m);
    return direct_sum(parts, m->label() + "^" + std::to_string(k), cap);
}

Submodule free_tensor_submodule(const ModulePtr& tensor, const Submodule& p, int k) {
    if (tensor->ring() != p.module->ring()) throw Error("tensor module and submodule rings differ");
    long long expect = 1;
    for (int i = 0; i < k; ++i) expect *= p.module->size();
    if (expect != tensor->size()) throw Error("tensor module size does not match the exponent");

    const int n = p.module->size();
    Bitset bits(tensor->size());
    for (int x = 0; x < tensor->size(); ++x) {
        int rest = x;
        bool inside = true;
        for (int i = 0; i < k; ++i) {
            if (!p.members.test(rest % n)) {
                inside = false;
                break;
            }
            rest /= n;
        }
        if (inside) bits.set(x);
    }
    return Submodule{tensor, bits};
}

ModulePtr product_module(const ModulePtr& m1, const ModulePtr& m2) {
    RingPtr ring = ring_product(m1->ring(), m2->ring());
    const int s1 = m1->size(), s2 = m2->size();
    const int size = s1 * s2;

    ModuleTables t;
    t.label = m1->label() + "x" + m2->label();
    t.ring = ring;
    t.size = size;
    t.zero = m1->zero() * s2 + m2->zero();
    t.add.resize(static_cast<size_t>(size) * size);
    t.act.resize(static_cast<size_t>(ring->size()) * size);
    for (int x = 0; x < size; ++x)
        for (int y = 0; y < size; ++y)
            t.add[static_cast<size_t>(x) * size + y] = static_cast<uint16_t>(
                m1->add(x / s2, y / s2) * s2 + m2->add(x % s2, y % s2));
    const int r2 = m2->ring()->size();
    for (int a = 0; a < ring->size(); ++a)
        for (int x = 0; x < size; ++x)
            t.act[static_cast<size_t>(a) * size + x] = static_cast<uint16_t>(
                m1->act(a / r2, x / s2) * s2 + m2->act(a % r2, x % s2));
    return FiniteModule::create(std::move(t));
}

Submodule product_submodule(const ModulePtr& prod, const Submodule& p1, const Submodule& p2) {
    const int s1 = p1.module->size(), s2 = p2.module->size();
    if (prod->size() != s1 * s2) throw Error("product module size does not match the factors");
    Bitset bits(prod->size());
    for (int x : p1.members.elements())
        for (int y : p2.members.elements()) bits.set(x * s2 + y);
    return Submodule{prod, bits};
}

}  // namespace finalg

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <sstream>
#include <utility>

#include "finalg/lab.hpp"
#include "json.hpp"

namespace finalg {

namespace {

bool has_label(const std::vector<RingPtr>& rings, const std::string& label) {
    for (const RingPtr& r : rings)
        if (r->label() == label) return true;
    return false;
}

RingPtr find_ring(const std::vector<RingPtr>& rings, const std::string& label) {
    for (const RingPtr& r : rings)
        if (r->label() == label) return r;
    return nullptr;
}

ModulePtr quotient_of(const RingPtr& r, const ModulePtr& rm, int gen) {
    Ideal I = ideal_generated(r, {gen});
    return quotient_module(rm, Submodule{rm, I.members}).quotient;
}

}  // namespace

Corpus generate_corpus(const CorpusConfig& cfg) {
    Corpus c;
    c.config = cfg;

    auto add_ring = [&](const RingPtr& r) {
        if (!has_label(c.rings, r->label())) c.rings.push_back(r);
    };
    auto add_instance = [&](Instance inst) {
        for (const Instance& e : c.instances)
            if (e.label == inst.label) throw Error("duplicate corpus label: " + inst.label);
        if (inst.module->size() > cfg.max_module_size) {
            inst.enumeration_skip = "module has " + std::to_string(inst.module->size()) +
                                    " elements, above the module size limit " +
                                    std::to_string(cfg.max_module_size);
        } else {
            try {
                inst.submodules = all_submodules(inst.module, cfg.max_submodules);
            } catch (const CapError& e) {
                inst.enumeration_skip = e.what();
            }
        }
        c.instances.push_back(std::move(inst));
    };
    auto has_zmod = [&](int n) {
        return std::find(cfg.zmods.begin(), cfg.zmods.end(), n) != cfg.zmods.end();
    };
    auto add_quotients = [&](const RingPtr& r, const ModulePtr& rm) {
        for (const Ideal& I : all_ideals(r, cfg.max_ring_size)) {
            if (!I.proper() || I.members.count() <= 1) continue;
            Instance qi;
            qi.label = r->label() + "/" + principal_form(I);
            qi.module = with_label(quotient_module(rm, Submodule{rm, I.members}).quotient, qi.label);
            add_instance(std::move(qi));
        }
    };

    for (int n : cfg.zmods) {
        RingPtr r = make_zmod(n);
        add_ring(r);
        ModulePtr rm = ring_as_module(r);
        Instance inst;
        inst.label = r->label();
        inst.module = rm;
        add_instance(std::move(inst));
        add_quotients(r, rm);
    }

    if (cfg.include_products) {
        auto add_product = [&](const std::vector<int>& ns, bool quotients) {
            for (int n : ns)
                if (!has_zmod(n)) return;
            std::vector<ModulePtr> leaves;
            for (int n : ns) leaves.push_back(ring_as_module(make_zmod(n)));
            ModulePtr prod = product_module(leaves[0], leaves[1]);
            for (size_t i = 2; i < leaves.size(); ++i) prod = product_module(prod, leaves[i]);
            add_ring(prod->ring());
            Instance inst;
            inst.label = prod->label();
            inst.kind = InstanceKind::product;
            inst.module = prod;
            inst.factors = leaves;
            add_instance(std::move(inst));
            // the product of the rings as modules is the product ring as a module
            if (quotients) add_quotients(prod->ring(), prod);
        };
        add_product({2, 3}, true);
        add_product({4, 4}, true);
        add_product({2, 4}, false);
        add_product({2, 2, 3}, false);
    }

    if (has_zmod(12)) {
        RingPtr r = find_ring(c.rings, "Z12");
        ModulePtr rm = ring_as_module(r);
        Instance inst;
        inst.label = "Z2(+)Z3(+)Z12 over Z12";
        inst.module = direct_sum({quotient_of(r, rm, 2), quotient_of(r, rm, 3), rm}, inst.label);
        add_instance(std::move(inst));
    }
    if (has_zmod(6)) {
        RingPtr r = find_ring(c.rings, "Z6");
        ModulePtr rm = ring_as_module(r);
        Instance inst;
        inst.label = "Z2(+)Z3 over Z6";
        inst.module = direct_sum({quotient_of(r, rm, 2), quotient_of(r, rm, 3)}, inst.label);
        add_instance(std::move(inst));
    }
    if (has_zmod(4)) {
        RingPtr r = find_ring(c.rings, "Z4");
        ModulePtr rm = ring_as_module(r);
        ModulePtr half = quotient_of(r, rm, 2);
        Instance inst;
        inst.label = "Z2(+)Z2 over Z4";
        inst.module = direct_sum({half, half}, inst.label);
        add_instance(std::move(inst));
    }

    if (cfg.include_amalgams) {
        struct Fix {
            int n, g;
        };
        const Fix fixes[] = {{4, 2}, {8, 2}, {8, 4}, {6, 2}};
        for (const Fix& f : fixes) {
            RingPtr r = find_ring(c.rings, "Z" + std::to_string(f.n));
            if (!r) continue;
            AmalgamRing ar = amalgamate_ring(r, ideal_generated(r, {f.g}));
            add_ring(ar.result);
            ModulePtr rm = ring_as_module(r);
            {
                AmalgamModule am = amalgamate_module(ar, rm);
                Instance inst;
                inst.label = am.result->label();
                inst.kind = InstanceKind::amalgam;
                inst.module = am.result;
                inst.amalgam = std::make_shared<AmalgamModule>(std::move(am));
                add_instance(std::move(inst));
            }
            if (f.n == 8 && f.g == 2) {
                // one duplication whose module is not the ring itself
                ModulePtr base = with_label(quotient_of(r, rm, 4), "Z8/(4)");
                AmalgamModule am = amalgamate_module(ar, base);
                Instance inst;
                inst.label = am.result->label();
                inst.kind = InstanceKind::amalgam;
                inst.module = am.result;
                inst.amalgam = std::make_shared<AmalgamModule>(std::move(am));
                add_instance(std::move(inst));
            }
        }
    }

    return c;
}

namespace {

bool requires_slots(const std::string& pred, const Witness& w, bool& scalars_nonunit) {
    scalars_nonunit = pred == "1abs_prime" || pred == "classical_1abs_prime";
    if (pred == "prime" || pred == "semiprime") return w.a >= 0 && w.m >= 0;
    if (pred == "classical_prime") return w.a >= 0 && w.b >= 0 && w.m >= 0;
    if (pred == "1abs_prime" || pred == "classical_1abs_prime" || pred == "classical_2abs")
        return w.a >= 0 && w.b >= 0 && w.c >= 0 && w.m >= 0;
    return false;
}

bool tuple_violates(const std::string& pred, const Submodule& P, const Ideal& colon_full,
                    const Witness& w) {
    if (pred == "prime") return violates_prime(P, colon_full, w.a, w.m);
    if (pred == "classical_prime") return violates_classical_prime(P, w.a, w.b, w.m);
    if (pred == "semiprime") return violates_semiprime(P, w.a, w.m);
    if (pred == "1abs_prime") return violates_one_abs(P, colon_full, w.a, w.b, w.c, w.m);
    if (pred == "classical_1abs_prime") return violates_classical_one_abs(P, w.a, w.b, w.c, w.m);
    return violates_classical_two_abs(P, w.a, w.b, w.c, w.m);
}

}  // namespace

Verdict minimize_counterexample(const Verdict& v, const Corpus& corpus) {
    if (v.status != Verdict::Status::fail || !v.counterexample) return v;
    const Counterexample& ce = *v.counterexample;
    bool scalars_nonunit = false;
    if (!requires_slots(ce.predicate, ce.witness, scalars_nonunit)) return v;
    const Instance* inst = nullptr;
    for (const Instance& i : corpus.instances)
        if (i.label == v.instance_label) inst = &i;
    if (!inst || ce.members.capacity() != inst->module->size()) return v;
    Submodule P{inst->module, ce.members};
    if (!P.proper() || !is_submodule(inst->module, ce.members)) return v;
    const RingPtr& ring = inst->module->ring();
    const int nr = ring->size();
    const int nm = inst->module->size();
    Witness w = ce.witness;
    if (w.a >= nr || w.b >= nr || w.c >= nr || w.m >= nm) return v;
    Ideal colon_full = residual_ideal_full(P);
    if (!tuple_violates(ce.predicate, P, colon_full, w)) return v;

    auto shrink = [&](int Witness::* slot, bool scalar_slot) {
        if (w.*slot < 0) return;
        for (int cand = 0; cand < w.*slot; ++cand) {
            if (scalar_slot && scalars_nonunit && ring->is_unit(cand)) continue;
            Witness trial = w;
            trial.*slot = cand;
            if (tuple_violates(ce.predicate, P, colon_full, trial)) {
                w = trial;
                break;
            }
        }
    };
    shrink(&Witness::a, true);
    shrink(&Witness::b, true);
    shrink(&Witness::c, true);
    shrink(&Witness::m, false);

    Verdict out = v;
    out.counterexample->witness = w;
    return out;
}

int SuiteReport::total_failures() const {
    int n = 0;
    for (const TheoremSummary& t : theorems) n += t.failures;
    return n;
}

SuiteReport run_suite(const Corpus& corpus) {
    std::vector<std::string> ids =
        corpus.config.theorems.empty() ? registered_theorems() : corpus.config.theorems;
    for (const std::string& id : ids)
        if (!is_registered_theorem(id)) throw Error("unknown theorem id: " + id);
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());

    SuiteReport rep;
    rep.config = corpus.config;
    for (const std::string& id : ids) {
        auto t0 = std::chrono::steady_clock::now();
        std::vector<Verdict> vs = verify_theorem(id, corpus);
        auto t1 = std::chrono::steady_clock::now();

        TheoremSummary s;
        s.theorem_id = id;
        s.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
        for (Verdict& v : vs) {
            switch (v.status) {
                case Verdict::Status::pass:
                    ++s.checked;
                    ++s.passes;
                    break;
                case Verdict::Status::fail:
                    ++s.checked;
                    ++s.failures;
                    s.failure_detail.push_back(minimize_counterexample(v, corpus));
                    break;
                case Verdict::Status::skip:
                    ++s.skips;
                    s.skip_detail.push_back(std::move(v));
                    break;
            }
        }
        rep.theorems.push_back(std::move(s));
    }
    return rep;
}

SuiteReport run_suite(const CorpusConfig& config) { return run_suite(generate_corpus(config)); }

std::string render_suite_table(const SuiteReport& rep) {
    std::ostringstream out;
    out << std::left << std::setw(30) << "theorem" << std::right << std::setw(9) << "checked"
        << std::setw(7) << "pass" << std::setw(7) << "fail" << std::setw(7) << "skip"
        << std::setw(11) << "ms" << "\n";
    out << std::string(71, '-') << "\n";
    int checked = 0, failures = 0, skips = 0;
    for (const TheoremSummary& t : rep.theorems) {
        out << std::left << std::setw(30) << t.theorem_id << std::right << std::setw(9) << t.checked
            << std::setw(7) << t.passes << std::setw(7) << t.failures << std::setw(7) << t.skips
            << std::setw(11) << std::fixed << std::setprecision(1) << t.wall_ms << "\n";
        checked += t.checked;
        failures += t.failures;
        skips += t.skips;
    }
    out << std::string(71, '-') << "\n";
    out << rep.theorems.size() << " theorems, " << checked << " instance checks, " << failures
        << " failures, " << skips << " skips\n";
    for (const TheoremSummary& t : rep.theorems) {
        for (const Verdict& v : t.failure_detail) {
            out << "\nFAIL " << t.theorem_id << " on " << v.instance_label << "\n";
            if (v.counterexample) {
                const Counterexample& ce = *v.counterexample;
                out << "  predicate: " << ce.predicate << "\n";
                if (!ce.submodule.empty()) out << "  submodule: " << ce.submodule << "\n";
                out << "  witness:   " << ce.witness.str() << "\n";
                if (!ce.detail.empty()) out << "  detail:    " << ce.detail << "\n";
            }
        }
        for (const Verdict& v : t.skip_detail)
            out << "SKIP " << t.theorem_id << " on " << v.instance_label << ": " << v.skip_reason
                << "\n";
    }
    return out.str();
}

std::string suite_report_json(const SuiteReport& rep) {
    nlohmann::json j;
    j["schema"] = 1;
    nlohmann::json cfg;
    cfg["zmods"] = rep.config.zmods;
    cfg["include_products"] = rep.config.include_products;
    cfg["include_amalgams"] = rep.config.include_amalgams;
    cfg["max_ring_size"] = rep.config.max_ring_size;
    cfg["max_module_size"] = rep.config.max_module_size;
    cfg["max_submodules"] = rep.config.max_submodules;
    cfg["seed"] = rep.config.seed;
    std::vector<std::string> ids;
    for (const TheoremSummary& t : rep.theorems) ids.push_back(t.theorem_id);
    cfg["theorems"] = ids;
    j["config"] = cfg;
    nlohmann::json ts = nlohmann::json::array();
    for (const TheoremSummary& t : rep.theorems) {
        nlohmann::json e;
        e["id"] = t.theorem_id;
        e["checked"] = t.checked;
        e["passes"] = t.passes;
        e["failures"] = t.failures;
        e["skips"] = t.skips;
        nlohmann::json fd = nlohmann::json::array();
        for (const Verdict& v : t.failure_detail) {
            nlohmann::json f;
            f["instance"] = v.instance_label;
            if (v.counterexample) {
                const Counterexample& ce = *v.counterexample;
                f["predicate"] = ce.predicate;
                f["submodule"] = ce.submodule;
                f["witness"] = {{"a", ce.witness.a},
                                {"b", ce.witness.b},
                                {"c", ce.witness.c},
                                {"m", ce.witness.m}};
                f["detail"] = ce.detail;
            }
            fd.push_back(std::move(f));
        }
        e["failures_detail"] = fd;
        nlohmann::json sd = nlohmann::json::array();
        for (const Verdict& v : t.skip_detail) {
            nlohmann::json s;
            s["instance"] = v.instance_label;
            s["reason"] = v.skip_reason;
            sd.push_back(std::move(s));
        }
        e["skips_detail"] = sd;
        ts.push_back(std::move(e));
    }
    j["theorems"] = ts;
    return j.dump(2) + "\n";
}

}  // namespace finalg

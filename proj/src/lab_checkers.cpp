#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "finalg/lab.hpp"

namespace finalg {

namespace {

struct Outcome {
    enum class Kind { pass, fail, skip, ignore };
    Kind kind = Kind::pass;
    Counterexample ce;
    std::string reason;
};

Outcome ok() { return {}; }

Outcome not_applicable() {
    Outcome o;
    o.kind = Outcome::Kind::ignore;
    return o;
}

Outcome skipped(std::string reason) {
    Outcome o;
    o.kind = Outcome::Kind::skip;
    o.reason = std::move(reason);
    return o;
}

Outcome failed(Counterexample ce) {
    Outcome o;
    o.kind = Outcome::Kind::fail;
    o.ce = std::move(ce);
    return o;
}

Counterexample cex(std::string predicate, const Submodule& P, Witness w, std::string detail) {
    return Counterexample{std::move(predicate), P.str(), P.members, w, std::move(detail)};
}

std::string yn(bool b) { return b ? "true" : "false"; }

std::optional<Outcome> lattice_skip(const Instance& in) {
    if (!in.enumeration_skip.empty()) return skipped(in.enumeration_skip);
    return std::nullopt;
}

// Drives one instance-level check across the corpus.  Iterations are
// independent, so they run under OpenMP into pre-sized slots; verdict order is
// fixed by the final sort either way.
std::vector<Verdict> over_instances(const std::string& id, const Corpus& c,
                                    const std::function<Outcome(const Instance&)>& f,
                                    const std::string& label_suffix = "") {
    const int n = static_cast<int>(c.instances.size());
    std::vector<Outcome> outs(static_cast<size_t>(n));
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < n; ++i) {
        try {
            outs[static_cast<size_t>(i)] = f(c.instances[static_cast<size_t>(i)]);
        } catch (const CapError& e) {
            outs[static_cast<size_t>(i)] = skipped(e.what());
        } catch (const Error& e) {
            outs[static_cast<size_t>(i)] =
                failed(Counterexample{"internal_error", "", Bitset(), Witness{}, e.what()});
        }
    }
    std::vector<Verdict> vs;
    for (int i = 0; i < n; ++i) {
        Outcome& o = outs[static_cast<size_t>(i)];
        if (o.kind == Outcome::Kind::ignore) continue;
        Verdict v;
        v.theorem_id = id;
        v.instance_label = c.instances[static_cast<size_t>(i)].label + label_suffix;
        if (o.kind == Outcome::Kind::fail) {
            v.status = Verdict::Status::fail;
            v.counterexample = std::move(o.ce);
        } else if (o.kind == Outcome::Kind::skip) {
            v.status = Verdict::Status::skip;
            v.skip_reason = std::move(o.reason);
        }
        vs.push_back(std::move(v));
    }
    std::sort(vs.begin(), vs.end(),
              [](const Verdict& x, const Verdict& y) { return x.instance_label < y.instance_label; });
    return vs;
}

// prime => classical prime => classical 1-absorbing => classical 2-absorbing
Outcome implication_chain_on(const Instance& in) {
    if (auto g = lattice_skip(in)) return *g;
    for (const Submodule& P : in.submodules) {
        if (!P.proper()) continue;
        PredicateResult pr = is_prime_submodule(P);
        PredicateResult cp = is_classical_prime(P);
        PredicateResult c1 = is_classical_one_abs_prime(P);
        PredicateResult c2 = is_classical_two_absorbing(P);
        if (pr.holds && !cp.holds)
            return failed(cex("classical_prime", P, cp.witness,
                              "prime holds but classical prime fails"));
        if (cp.holds && !c1.holds)
            return failed(cex("classical_1abs_prime", P, c1.witness,
                              "classical prime holds but classical 1-absorbing prime fails"));
        if (c1.holds && !c2.holds)
            return failed(cex("classical_2abs", P, c2.witness,
                              "classical 1-absorbing prime holds but classical 2-absorbing fails"));
    }
    return ok();
}

Outcome one_abs_implies_classical_on(const Instance& in) {
    if (auto g = lattice_skip(in)) return *g;
    for (const Submodule& P : in.submodules) {
        if (!P.proper()) continue;
        if (!is_one_abs_prime(P).holds) continue;
        PredicateResult c1 = is_classical_one_abs_prime(P);
        if (!c1.holds)
            return failed(cex("classical_1abs_prime", P, c1.witness,
                              "1-absorbing prime holds but classical 1-absorbing prime fails"));
    }
    return ok();
}

Outcome semiprime_factorization_on(const Instance& in) {
    if (auto g = lattice_skip(in)) return *g;
    for (const Submodule& P : in.submodules) {
        if (!P.proper()) continue;
        PredicateResult cp = is_classical_prime(P);
        PredicateResult c1 = is_classical_one_abs_prime(P);
        PredicateResult sp = is_semiprime(P);
        if (cp.holds != (c1.holds && sp.holds)) {
            Witness w = !cp.holds ? cp.witness : (!c1.holds ? c1.witness : sp.witness);
            return failed(cex("classical_prime", P, w,
                              "classical prime " + yn(cp.holds) + " but classical 1-absorbing prime " +
                                  yn(c1.holds) + " and semiprime " + yn(sp.holds)));
        }
    }
    return ok();
}

Outcome characterizations_on(const Instance& in, const CorpusConfig& cfg, const std::string& prefix) {
    if (auto g = lattice_skip(in)) return *g;
    for (const Submodule& P : in.submodules) {
        if (!P.proper()) continue;
        PredicateResult def = is_classical_one_abs_prime(P);
        auto forms = classical_1abs_oracles(P, cfg.max_ring_size, cfg.max_submodules);
        for (const auto& [key, res] : forms) {
            if (!key.starts_with(prefix) || res.status == OracleStatus::skipped) continue;
            bool form_holds = res.status == OracleStatus::holds;
            if (form_holds != def.holds)
                return failed(cex(key, P, def.holds ? res.witness : def.witness,
                                  "definition evaluates " + yn(def.holds) + " but the form evaluates " +
                                      yn(form_holds) +
                                      (res.detail.empty() ? std::string() : "; " + res.detail)));
        }
    }
    return ok();
}

Outcome hom_preimage_on(const Instance& in, const CorpusConfig& cfg) {
    if (auto g = lattice_skip(in)) return *g;
    for (const Submodule& L : in.submodules) {
        if (!L.proper()) continue;
        QuotientModule q = quotient_module(in.module, L);
        for (const Submodule& W : all_submodules(q.quotient, cfg.max_submodules)) {
            if (!W.proper()) continue;
            if (!is_classical_one_abs_prime(W).holds) continue;
            Submodule pre = hom_preimage(q.projection, W);
            if (!pre.proper())
                return failed(cex("preimage_proper", pre, Witness{},
                                  "preimage of a proper submodule along the projection is improper"));
            PredicateResult r = is_classical_one_abs_prime(pre);
            if (!r.holds)
                return failed(cex("classical_1abs_prime", pre, r.witness,
                                  "preimage of " + W.str() + " along the quotient by " + L.str()));
        }
    }
    return ok();
}

Outcome hom_image_on(const Instance& in) {
    if (auto g = lattice_skip(in)) return *g;
    for (const Submodule& L : in.submodules) {
        if (!L.proper()) continue;
        QuotientModule q = quotient_module(in.module, L);
        for (const Submodule& P : in.submodules) {
            if (!P.proper() || !L.members.subset_of(P.members)) continue;
            if (!is_classical_one_abs_prime(P).holds) continue;
            Submodule img = hom_image(q.projection, P);
            if (!img.proper())
                return failed(cex("image_proper", P, Witness{},
                                  "image of a proper submodule above the kernel is improper"));
            PredicateResult r = is_classical_one_abs_prime(img);
            if (!r.holds)
                return failed(cex("classical_1abs_prime", P, r.witness,
                                  "image " + img.str() + " in the quotient by " + L.str() + " fails"));
        }
    }
    return ok();
}

Outcome quotient_transfer_on(const Instance& in) {
    if (auto g = lattice_skip(in)) return *g;
    for (const Submodule& L : in.submodules) {
        if (!L.proper()) continue;
        QuotientModule q = quotient_module(in.module, L);
        for (const Submodule& P : in.submodules) {
            if (!P.proper() || !L.members.subset_of(P.members)) continue;
            PredicateResult base = is_classical_one_abs_prime(P);
            Submodule img = hom_image(q.projection, P);
            PredicateResult quot = is_classical_one_abs_prime(img);
            if (base.holds != quot.holds)
                return failed(cex("classical_1abs_prime", P, base.holds ? quot.witness : base.witness,
                                  "submodule is " + yn(base.holds) + " but its image " + img.str() +
                                      " in the quotient by " + L.str() + " is " + yn(quot.holds)));
        }
    }
    return ok();
}

Outcome ideal_correspondence_on(const Instance& in) {
    if (in.module->label() != in.module->ring()->label()) return not_applicable();
    if (auto g = lattice_skip(in)) return *g;
    for (const Submodule& P : in.submodules) {
        if (!P.proper()) continue;
        IdealPredicateResult ir = is_1absorbing_prime_ideal(Ideal{in.module->ring(), P.members});
        PredicateResult sr = is_classical_one_abs_prime(P);
        if (ir.holds != sr.holds) {
            Witness w = sr.holds ? Witness{ir.a, ir.b, ir.c, -1} : sr.witness;
            return failed(cex("classical_1abs_prime", P, w,
                              "as an ideal 1-absorbing prime is " + yn(ir.holds) +
                                  " but as a submodule classical 1-absorbing prime is " + yn(sr.holds)));
        }
    }
    return ok();
}

std::vector<Verdict> ring_dichotomy_all(const Corpus& c) {
    std::vector<Verdict> vs;
    for (const RingPtr& R : c.rings) {
        Verdict v;
        v.theorem_id = "ring_dichotomy";
        v.instance_label = R->label();
        try {
            auto loc = is_local(R, c.config.max_ring_size);
            bool lhs = false;
            if (loc) lhs = ideal_product(*loc, *loc).members == zero_ideal(R).members;
            bool rhs = true;
            std::optional<Counterexample> ce;
            for (const Instance& in : c.instances) {
                if (in.module->ring()->label() != R->label() || !in.enumeration_skip.empty()) continue;
                for (const Submodule& P : in.submodules) {
                    if (!P.proper()) continue;
                    PredicateResult r = is_classical_one_abs_prime(P);
                    if (!r.holds) {
                        rhs = false;
                        ce = cex("classical_1abs_prime", P, r.witness, "module " + in.label);
                        break;
                    }
                }
                if (!rhs) break;
            }
            if (lhs == rhs) {
                v.status = Verdict::Status::pass;
            } else if (lhs) {
                v.status = Verdict::Status::fail;
                ce->detail = "ring is local with square-zero maximal ideal yet " + ce->detail +
                             " has a proper submodule that is not classical 1-absorbing prime";
                v.counterexample = std::move(ce);
            } else {
                v.status = Verdict::Status::fail;
                v.counterexample = Counterexample{
                    "ring_shape", "", Bitset(), Witness{},
                    "every proper submodule over " + R->label() +
                        " is classical 1-absorbing prime but the ring is not local with "
                        "square-zero maximal ideal"};
            }
        } catch (const CapError& e) {
            v.status = Verdict::Status::skip;
            v.skip_reason = e.what();
        }
        vs.push_back(std::move(v));
    }
    std::sort(vs.begin(), vs.end(),
              [](const Verdict& x, const Verdict& y) { return x.instance_label < y.instance_label; });
    return vs;
}

Outcome chain_intersection_on(const Instance& in) {
    if (auto g = lattice_skip(in)) return *g;
    std::vector<Bitset> c1;
    for (const Submodule& P : in.submodules)
        if (P.proper() && is_classical_one_abs_prime(P).holds) c1.push_back(P.members);
    const int k = static_cast<int>(c1.size());
    std::vector<std::vector<bool>> lt(static_cast<size_t>(k), std::vector<bool>(static_cast<size_t>(k)));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            lt[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                !(c1[static_cast<size_t>(i)] == c1[static_cast<size_t>(j)]) &&
                c1[static_cast<size_t>(i)].subset_of(c1[static_cast<size_t>(j)]);
    auto covers = [&](int lo, int hi) {
        for (int t = 0; t < k; ++t)
            if (lt[static_cast<size_t>(lo)][static_cast<size_t>(t)] &&
                lt[static_cast<size_t>(t)][static_cast<size_t>(hi)])
                return false;
        return true;
    };
    std::vector<Bitset> chains;
    std::function<void(int, Bitset)> down = [&](int cur, Bitset acc) {
        if (chains.size() > 4096) return;
        bool leaf = true;
        for (int j = 0; j < k; ++j) {
            if (lt[static_cast<size_t>(j)][static_cast<size_t>(cur)] && covers(j, cur)) {
                leaf = false;
                down(j, acc & c1[static_cast<size_t>(j)]);
            }
        }
        if (leaf) chains.push_back(std::move(acc));
    };
    for (int i = 0; i < k; ++i) {
        bool maximal = true;
        for (int j = 0; j < k && maximal; ++j)
            if (lt[static_cast<size_t>(i)][static_cast<size_t>(j)]) maximal = false;
        if (maximal) down(i, c1[static_cast<size_t>(i)]);
    }
    if (chains.size() > 4096) return skipped("too many descending chains to enumerate");
    for (const Bitset& inter : chains) {
        Submodule Q{in.module, inter};
        if (!is_submodule(in.module, inter))
            return failed(cex("submodule", Q, Witness{}, "chain intersection is not a submodule"));
        PredicateResult r = is_classical_one_abs_prime(Q);
        if (!r.holds)
            return failed(cex("classical_1abs_prime", Q, r.witness,
                              "intersection of a descending chain fails"));
    }
    return ok();
}

Outcome minimal_set_on(const Instance& in, const CorpusConfig& cfg) {
    if (auto g = lattice_skip(in)) return *g;
    std::vector<Bitset> c1;
    for (const Submodule& P : in.submodules)
        if (P.proper() && is_classical_one_abs_prime(P).holds) c1.push_back(P.members);
    std::vector<Submodule> ml = minimal_classical_one_abs_primes(in.module, cfg.max_submodules);
    for (const Submodule& Q : ml) {
        bool listed = false;
        for (const Bitset& b : c1) listed = listed || b == Q.members;
        if (!listed)
            return failed(cex("classical_1abs_prime", Q, Witness{},
                              "reported minimal submodule is not classical 1-absorbing prime"));
        for (const Bitset& b : c1)
            if (!(b == Q.members) && b.subset_of(Q.members))
                return failed(cex("minimality", Q, Witness{},
                                  "reported minimal submodule strictly contains " + b.str()));
    }
    for (const Bitset& b : c1) {
        bool below = false;
        for (const Submodule& Q : ml) below = below || Q.members.subset_of(b);
        if (!below)
            return failed(cex("minimal_cover", Submodule{in.module, b}, Witness{},
                              "no minimal classical 1-absorbing prime submodule inside"));
    }
    for (size_t i = 0; i + 1 < ml.size(); ++i)
        if (!canonical_less(ml[i].members, ml[i + 1].members))
            return failed(cex("canonical_order", ml[i + 1], Witness{},
                              "minimal list is not in canonical order"));
    return ok();
}

// On a multiplication module the product of submodules is defined through
// presenting ideals, KL := I_K I_L M.  Two facts are checked.  First the
// product is independent of the chosen presentations.  Second the triple law
// quantified over proper presenting ideals is exactly classical 1-absorbing
// primeness, in both directions.  The law cannot be quantified over proper
// submodules instead: a proper ideal can present the full module (a nonunit
// can act invertibly), and such presentations are essential witnesses.
Outcome triple_product_on(const Instance& in, const CorpusConfig& cfg) {
    if (auto g = lattice_skip(in)) return *g;
    if (!is_multiplication_module(in.module, cfg.max_submodules)) return not_applicable();
    const ModulePtr& mod = in.module;
    const int n = mod->size();
    std::vector<Ideal> ideals = all_ideals(mod->ring(), cfg.max_ring_size);
    const int ni = static_cast<int>(ideals.size());

    std::vector<Bitset> presented;  // ideal index -> members of I M
    presented.reserve(static_cast<size_t>(ni));
    for (const Ideal& I : ideals)
        presented.push_back(ideal_times_submodule(I, full_submodule(mod)).members);
    std::map<std::string, Bitset> product_of;
    for (int i = 0; i < ni; ++i) {
        for (int j = 0; j < ni; ++j) {
            Bitset prod =
                ideal_times_submodule(ideal_product(ideals[static_cast<size_t>(i)],
                                                    ideals[static_cast<size_t>(j)]),
                                      full_submodule(mod))
                    .members;
            std::string key = presented[static_cast<size_t>(i)].str() + "|" +
                              presented[static_cast<size_t>(j)].str();
            auto [it, fresh] = product_of.emplace(key, prod);
            if (!fresh && !(it->second == prod))
                return failed(cex("product_presentation",
                                  Submodule{mod, presented[static_cast<size_t>(i)]}, Witness{},
                                  "the product of " + presented[static_cast<size_t>(i)].str() +
                                      " and " + presented[static_cast<size_t>(j)].str() +
                                      " depends on the chosen presenting ideals"));
        }
    }

    for (const Submodule& P : in.submodules) {
        if (!P.proper()) continue;
        bool law = true;
        std::string law_break;
        int law_m = -1;
        for (int i = 0; i < ni && law; ++i) {
            if (!ideals[static_cast<size_t>(i)].proper()) continue;
            for (int j = 0; j < ni && law; ++j) {
                if (!ideals[static_cast<size_t>(j)].proper()) continue;
                Ideal ij = ideal_product(ideals[static_cast<size_t>(i)],
                                         ideals[static_cast<size_t>(j)]);
                for (int q = 0; q < ni && law; ++q) {
                    if (!ideals[static_cast<size_t>(q)].proper()) continue;
                    Ideal ijq = ideal_product(ij, ideals[static_cast<size_t>(q)]);
                    for (int m = 0; m < n; ++m) {
                        if (!ideal_times_element(ijq, mod, m).members.subset_of(P.members))
                            continue;
                        if (ideal_times_element(ij, mod, m).members.subset_of(P.members))
                            continue;
                        if (ideal_times_element(ideals[static_cast<size_t>(q)], mod, m)
                                .members.subset_of(P.members))
                            continue;
                        law = false;
                        law_m = m;
                        law_break = "presenting ideals " + ideals[static_cast<size_t>(i)].str() +
                                    ", " + ideals[static_cast<size_t>(j)].str() + ", " +
                                    ideals[static_cast<size_t>(q)].str();
                        break;
                    }
                }
            }
        }
        const bool c1 = is_classical_one_abs_prime(P).holds;
        if (c1 && !law) {
            Witness w;
            w.m = law_m;
            return failed(cex("triple_product", P, w,
                              law_break + " violate the triple product law on a classical "
                                          "1-absorbing prime submodule"));
        }
        if (!c1 && law)
            return failed(cex("triple_product", P, Witness{},
                              "the triple product law holds but the submodule is not classical "
                              "1-absorbing prime"));
    }
    return ok();
}

Outcome residual_union_on(const Instance& in) {
    if (auto g = lattice_skip(in)) return *g;
    const RingPtr& ring = in.module->ring();
    const std::vector<int>& nu = ring->nonunits();
    const int n = in.module->size();
    for (const Submodule& P : in.submodules) {
        if (!P.proper() || !is_classical_one_abs_prime(P).holds) continue;
        std::vector<Bitset> colon;
        colon.reserve(static_cast<size_t>(n));
        for (int m = 0; m < n; ++m) colon.push_back(residual_ideal_of_element(P, m).members);
        for (int a : nu) {
            for (int b : nu) {
                const int ab = ring->mul(a, b);
                for (int c2 : nu) {
                    const int abc = ring->mul(ab, c2);
                    for (int m = 0; m < n; ++m) {
                        const Bitset& whole = colon[static_cast<size_t>(in.module->act(abc, m))];
                        const Bitset& left = colon[static_cast<size_t>(in.module->act(ab, m))];
                        const Bitset& right = colon[static_cast<size_t>(in.module->act(c2, m))];
                        if (!(whole == (left | right)))
                            return failed(cex("residual_union", P, Witness{a, b, c2, m},
                                              "residual of abcm is not the union of the abm and cm "
                                              "residuals"));
                        if (!(whole == left) && !(whole == right))
                            return failed(cex("residual_union", P, Witness{a, b, c2, m},
                                              "residual union does not collapse to one side"));
                    }
                }
            }
        }
    }
    return ok();
}

Outcome mult_module_equiv_on(const Instance& in, const CorpusConfig& cfg) {
    if (auto g = lattice_skip(in)) return *g;
    if (!is_multiplication_module(in.module, cfg.max_submodules)) return not_applicable();
    for (const Submodule& P : in.submodules) {
        if (!P.proper()) continue;
        PredicateResult oa = is_one_abs_prime(P);
        PredicateResult c1 = is_classical_one_abs_prime(P);
        Ideal cf = residual_ideal_full(P);
        if (!cf.proper())
            return failed(cex("presentation_proper", P, Witness{},
                              "presentation ideal of a proper submodule is the whole ring"));
        IdealPredicateResult ir = is_1absorbing_prime_ideal(cf);
        if (oa.holds != c1.holds || c1.holds != ir.holds)
            return failed(cex("classical_1abs_prime", P,
                              !c1.holds ? c1.witness
                                        : (!oa.holds ? oa.witness : Witness{ir.a, ir.b, ir.c, -1}),
                              "1-absorbing prime " + yn(oa.holds) + ", classical 1-absorbing prime " +
                                  yn(c1.holds) + ", presentation ideal 1-absorbing prime " +
                                  yn(ir.holds)));
    }
    return ok();
}

Outcome mclosed_equiv_on(const Instance& in) {
    if (in.module->size() > kMClosedModuleCap)
        return skipped("module larger than the m-closed analysis cap");
    if (auto g = lattice_skip(in)) return *g;
    for (const Submodule& P : in.submodules) {
        if (!P.proper()) continue;
        bool def = is_classical_one_abs_prime(P).holds;
        MClosedResult mc = is_c1ap_m_closed(in.module, P.members.complement());
        if (def != mc.closed)
            return failed(cex("m_closed", P, Witness{},
                              "classical 1-absorbing prime is " + yn(def) +
                                  " but the complement is m-closed " + yn(mc.closed) +
                                  (mc.detail.empty() ? std::string() : "; " + mc.detail)));
    }
    return ok();
}

Outcome krull_separation_on(const Instance& in) {
    if (in.module->size() > kMClosedModuleCap)
        return skipped("module larger than the m-closed analysis cap");
    if (auto g = lattice_skip(in)) return *g;
    for (const Submodule& P : in.submodules) {
        if (!P.proper()) continue;
        Bitset S = P.members.complement();
        if (!is_c1ap_m_closed(in.module, S).closed) continue;
        std::vector<int> disjoint;
        for (int i = 0; i < static_cast<int>(in.submodules.size()); ++i)
            if (!in.submodules[static_cast<size_t>(i)].members.intersects(S)) disjoint.push_back(i);
        bool reported_seen = false;
        Submodule K = krull_maximal_disjoint(in.module, S, kMClosedModuleCap);
        for (int i : disjoint) {
            const Submodule& Q = in.submodules[static_cast<size_t>(i)];
            bool maximal = true;
            for (int j : disjoint) {
                const Submodule& R = in.submodules[static_cast<size_t>(j)];
                if (!(R.members == Q.members) && Q.members.subset_of(R.members)) maximal = false;
            }
            if (!maximal) continue;
            reported_seen = reported_seen || Q.members == K.members;
            PredicateResult r = is_classical_one_abs_prime(Q);
            if (!r.holds)
                return failed(cex("classical_1abs_prime", Q, r.witness,
                                  "maximal submodule avoiding the m-closed complement of " + P.str() +
                                      " fails"));
        }
        if (!reported_seen)
            return failed(cex("maximal_disjoint", K, Witness{},
                              "reported maximal avoiding submodule is not maximal for " + P.str()));
    }
    return ok();
}

Outcome product_check(const Instance& in, int want_factors) {
    if (in.kind != InstanceKind::product || static_cast<int>(in.factors.size()) != want_factors)
        return not_applicable();
    if (auto g = lattice_skip(in)) return *g;
    const int k = want_factors;
    std::vector<int> sizes(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) sizes[static_cast<size_t>(i)] = in.factors[static_cast<size_t>(i)]->size();
    for (const Submodule& P : in.submodules) {
        if (!P.proper()) continue;
        std::vector<Bitset> comp;
        for (int i = 0; i < k; ++i) comp.emplace_back(sizes[static_cast<size_t>(i)]);
        for (int x : P.members.elements()) {
            int rest = x;
            for (int i = k - 1; i >= 0; --i) {
                comp[static_cast<size_t>(i)].set(rest % sizes[static_cast<size_t>(i)]);
                rest /= sizes[static_cast<size_t>(i)];
            }
        }
        std::vector<std::vector<int>> elems;
        for (int i = 0; i < k; ++i) elems.push_back(comp[static_cast<size_t>(i)].elements());
        Bitset rebuilt(in.module->size());
        std::vector<size_t> pos(static_cast<size_t>(k), 0);
        while (true) {
            int idx = 0;
            for (int i = 0; i < k; ++i)
                idx = idx * sizes[static_cast<size_t>(i)] +
                      elems[static_cast<size_t>(i)][pos[static_cast<size_t>(i)]];
            rebuilt.set(idx);
            int d = k - 1;
            for (; d >= 0; --d) {
                if (++pos[static_cast<size_t>(d)] < elems[static_cast<size_t>(d)].size()) break;
                pos[static_cast<size_t>(d)] = 0;
            }
            if (d < 0) break;
        }
        if (!(rebuilt == P.members))
            return failed(cex("product_decomposition", P, Witness{},
                              "submodule is not the product of its factor projections"));
        int proper_at = -1, proper_count = 0;
        for (int i = 0; i < k; ++i) {
            if (static_cast<int>(comp[static_cast<size_t>(i)].count()) < sizes[static_cast<size_t>(i)]) {
                if (proper_at < 0) proper_at = i;
                ++proper_count;
            }
        }
        bool shape = false;
        if (proper_count == 1)
            shape = is_classical_prime(
                        Submodule{in.factors[static_cast<size_t>(proper_at)], comp[static_cast<size_t>(proper_at)]})
                        .holds;
        PredicateResult c1 = is_classical_one_abs_prime(P);
        PredicateResult cp = is_classical_prime(P);
        if (c1.holds != cp.holds || cp.holds != shape) {
            Witness w = !c1.holds ? c1.witness : (!cp.holds ? cp.witness : Witness{});
            return failed(cex("product_equivalence", P, w,
                              "classical 1-absorbing prime " + yn(c1.holds) + ", classical prime " +
                                  yn(cp.holds) +
                                  ", exactly one proper factor with a classical prime component " +
                                  yn(shape)));
        }
    }
    return ok();
}

Outcome local_square_colon_on(const Instance& in, const CorpusConfig& cfg) {
    if (auto g = lattice_skip(in)) return *g;
    const RingPtr& ring = in.module->ring();
    for (const Submodule& P : in.submodules) {
        if (!P.proper() || !is_classical_one_abs_prime(P).holds) continue;
        PredicateResult cp = is_classical_prime(P);
        if (cp.holds) continue;
        auto loc = is_local(ring, cfg.max_ring_size);
        if (!loc)
            return failed(cex("ring_local", P, cp.witness,
                              "classical 1-absorbing prime but not classical prime over a "
                              "non-local ring"));
        Ideal sq = ideal_product(*loc, *loc);
        bool found = false;
        for (int m = 0; m < in.module->size() && !found; ++m) {
            if (P.members.test(m)) continue;
            found = sq.members.subset_of(residual_ideal_of_element(P, m).members);
        }
        if (!found)
            return failed(cex("square_colon", P, Witness{},
                              "no element outside the submodule whose residual ideal contains the "
                              "squared maximal ideal"));
    }
    return ok();
}

Outcome prime_dichotomy_on(const Instance& in) {
    if (auto g = lattice_skip(in)) return *g;
    const RingPtr& ring = in.module->ring();
    const int nr = ring->size();
    for (const Submodule& P : in.submodules) {
        if (!P.proper()) continue;
        std::vector<Bitset> res;
        res.reserve(static_cast<size_t>(nr));
        for (int a = 0; a < nr; ++a) res.push_back(residual_in_module(P, a).members);
        int wa = -1, wb = -1;
        for (int a = 0; a < nr && wa < 0; ++a) {
            for (int b = 0; b < nr; ++b) {
                const Bitset& r = res[static_cast<size_t>(ring->mul(a, b))];
                if (!(r == res[static_cast<size_t>(a)]) && !(r == res[static_cast<size_t>(b)])) {
                    wa = a;
                    wb = b;
                    break;
                }
            }
        }
        PredicateResult cp = is_classical_prime(P);
        if ((wa < 0) != cp.holds)
            return failed(cex("classical_prime", P, cp.holds ? Witness{wa, wb, -1, -1} : cp.witness,
                              "residual dichotomy over all scalar pairs is " + yn(wa < 0) +
                                  " but classical prime is " + yn(cp.holds)));
    }
    return ok();
}

Outcome amalgam_residuals_on(const Instance& in, const CorpusConfig& cfg) {
    if (in.kind != InstanceKind::amalgam || !in.amalgam) return not_applicable();
    const AmalgamModule& am = *in.amalgam;
    const size_t im = am.im_elems.size();
    for (const Submodule& P : all_submodules(am.base, cfg.max_submodules)) {
        Submodule pi = amalgamate_submodule(am, P);
        if (static_cast<size_t>(pi.members.count()) != static_cast<size_t>(P.members.count()) * im)
            return failed(cex("cardinality", P, Witness{},
                              "duplicated submodule does not have |P|*|IM| elements"));
        for (int s = 0; s < am.ring.result->size(); ++s) {
            Submodule lhs = residual_in_module(pi, s);
            Submodule rhs = amalgamate_submodule(am, residual_in_module(P, am.ring.first(s)));
            if (!(lhs.members == rhs.members)) {
                Witness w;
                w.a = s;
                return failed(cex("module_residual", P, w,
                                  "residual by the duplicated scalar is not the duplication of the "
                                  "base residual"));
            }
        }
        for (int x = 0; x < am.result->size(); ++x) {
            Ideal lhs = residual_ideal_of_element(pi, x);
            Ideal rhs = amalgamate_ideal(am.ring, residual_ideal_of_element(P, am.first(x)));
            if (!(lhs.members == rhs.members)) {
                Witness w;
                w.m = x;
                return failed(cex("scalar_residual", P, w,
                                  "residual ideal at the duplicated element is not the duplication "
                                  "of the base residual ideal"));
            }
        }
    }
    return ok();
}

Outcome amalgam_units_on(const Instance& in) {
    if (in.kind != InstanceKind::amalgam || !in.amalgam) return not_applicable();
    const AmalgamRing& ar = in.amalgam->ring;
    Bitset expect(ar.result->size());
    for (int s = 0; s < ar.result->size(); ++s)
        if (ar.base->is_unit(ar.first(s)) && ar.base->is_unit(ar.second(s))) expect.set(s);
    if (!(expect == ar.result->unit_mask())) {
        int d = -1;
        for (int s = 0; s < ar.result->size() && d < 0; ++s)
            if (expect.test(s) != ar.result->unit_mask().test(s)) d = s;
        Witness w;
        w.a = d;
        return failed(Counterexample{"units", "", Bitset(), w,
                                     "duplicated ring units differ from componentwise units at index " +
                                         std::to_string(d)});
    }
    return ok();
}

Outcome amalgam_transfer_on(const Instance& in, const CorpusConfig& cfg) {
    if (in.kind != InstanceKind::amalgam || !in.amalgam) return not_applicable();
    const AmalgamModule& am = *in.amalgam;
    struct Pred {
        const char* name;
        PredicateResult (*fn)(const Submodule&);
    };
    const Pred preds[] = {{"classical_prime", &is_classical_prime},
                          {"classical_1abs_prime", &is_classical_one_abs_prime},
                          {"classical_2abs", &is_classical_two_absorbing}};
    for (const Submodule& P : all_submodules(am.base, cfg.max_submodules)) {
        if (!P.proper()) continue;
        Submodule pi = amalgamate_submodule(am, P);
        for (const Pred& p : preds) {
            PredicateResult rb = p.fn(P);
            PredicateResult rd = p.fn(pi);
            if (rb.holds != rd.holds)
                return failed(cex(p.name, P, rb.holds ? rd.witness : rb.witness,
                                  std::string(p.name) + " is " + yn(rb.holds) +
                                      " on the base submodule but " + yn(rd.holds) +
                                      " on its duplication"));
        }
    }
    return ok();
}

std::vector<Verdict> tensor_transfer_all(const Corpus& c) {
    std::vector<Verdict> vs;
    for (int k : {2, 3}) {
        auto part = over_instances(
            "tensor_transfer", c,
            [k](const Instance& in) -> Outcome {
                long long total = 1;
                for (int i = 0; i < k; ++i) total *= in.module->size();
                if (total > kTensorCap)
                    return skipped("|M|^" + std::to_string(k) + " exceeds the tensor cap");
                if (auto g = lattice_skip(in)) return *g;
                ModulePtr tensor = free_tensor(in.module, k);
                for (const Submodule& P : in.submodules) {
                    if (!P.proper()) continue;
                    Submodule pt = free_tensor_submodule(tensor, P, k);
                    PredicateResult base = is_classical_one_abs_prime(P);
                    PredicateResult ext = is_classical_one_abs_prime(pt);
                    if (base.holds != ext.holds)
                        return failed(cex("classical_1abs_prime", P,
                                          base.holds ? ext.witness : base.witness,
                                          "exponent " + std::to_string(k) + ": base " + yn(base.holds) +
                                              " but tensor power " + yn(ext.holds)));
                }
                return ok();
            },
            " k=" + std::to_string(k));
        vs.insert(vs.end(), part.begin(), part.end());
    }
    std::sort(vs.begin(), vs.end(),
              [](const Verdict& x, const Verdict& y) { return x.instance_label < y.instance_label; });
    return vs;
}

struct Entry {
    std::string id;
    std::string desc;
    std::function<std::vector<Verdict>(const Corpus&)> run;
};

std::vector<Verdict> plain(const std::string& id, const Corpus& c,
                           const std::function<Outcome(const Instance&)>& f) {
    return over_instances(id, c, f);
}

const std::vector<Entry>& registry() {
    static const std::vector<Entry> entries = [] {
        std::vector<Entry> e;
        e.push_back({"amalgam_residuals",
                     "residuals in a duplicated module are duplications of base residuals",
                     [](const Corpus& c) {
                         return plain("amalgam_residuals", c, [&c](const Instance& in) {
                             return amalgam_residuals_on(in, c.config);
                         });
                     }});
        e.push_back({"amalgam_transfer",
                     "the three classical predicates agree between a submodule and its duplication",
                     [](const Corpus& c) {
                         return plain("amalgam_transfer", c, [&c](const Instance& in) {
                             return amalgam_transfer_on(in, c.config);
                         });
                     }});
        e.push_back({"amalgam_units",
                     "duplicated ring units are exactly the componentwise units",
                     [](const Corpus& c) { return plain("amalgam_units", c, amalgam_units_on); }});
        e.push_back({"chain_intersection",
                     "descending chains of classical 1-absorbing primes intersect in one",
                     [](const Corpus& c) {
                         return plain("chain_intersection", c, chain_intersection_on);
                     }});
        e.push_back({"element_characterizations",
                     "element-quantified forms agree with the definition",
                     [](const Corpus& c) {
                         return plain("element_characterizations", c, [&c](const Instance& in) {
                             return characterizations_on(in, c.config, "elt_");
                         });
                     }});
        e.push_back({"hom_image",
                     "surjective images with kernel below the submodule stay classical 1-absorbing prime",
                     [](const Corpus& c) { return plain("hom_image", c, hom_image_on); }});
        e.push_back({"hom_preimage",
                     "preimages of classical 1-absorbing primes stay classical 1-absorbing prime",
                     [](const Corpus& c) {
                         return plain("hom_preimage", c, [&c](const Instance& in) {
                             return hom_preimage_on(in, c.config);
                         });
                     }});
        e.push_back({"ideal_correspondence",
                     "over the ring as a module the predicate matches the 1-absorbing prime ideals",
                     [](const Corpus& c) {
                         return plain("ideal_correspondence", c, ideal_correspondence_on);
                     }});
        e.push_back({"implication_chain",
                     "prime implies classical prime implies classical 1-absorbing implies 2-absorbing",
                     [](const Corpus& c) { return plain("implication_chain", c, implication_chain_on); }});
        e.push_back({"krull_separation",
                     "maximal submodules avoiding an m-closed set are classical 1-absorbing prime",
                     [](const Corpus& c) { return plain("krull_separation", c, krull_separation_on); }});
        e.push_back({"local_square_colon",
                     "non-classical-prime instances force a local ring with the squared maximal "
                     "ideal inside a residual",
                     [](const Corpus& c) {
                         return plain("local_square_colon", c, [&c](const Instance& in) {
                             return local_square_colon_on(in, c.config);
                         });
                     }});
        e.push_back({"mclosed_equiv",
                     "classical 1-absorbing prime iff the complement is m-closed",
                     [](const Corpus& c) { return plain("mclosed_equiv", c, mclosed_equiv_on); }});
        e.push_back({"minimal_set",
                     "every classical 1-absorbing prime contains a minimal one; the minimal list is "
                     "consistent",
                     [](const Corpus& c) {
                         return plain("minimal_set", c, [&c](const Instance& in) {
                             return minimal_set_on(in, c.config);
                         });
                     }});
        e.push_back({"mult_module_equiv",
                     "on multiplication modules the 1-absorbing notions coincide with the "
                     "presentation ideal's",
                     [](const Corpus& c) {
                         return plain("mult_module_equiv", c, [&c](const Instance& in) {
                             return mult_module_equiv_on(in, c.config);
                         });
                     }});
        e.push_back({"one_abs_implies_classical",
                     "1-absorbing prime implies classical 1-absorbing prime",
                     [](const Corpus& c) {
                         return plain("one_abs_implies_classical", c, one_abs_implies_classical_on);
                     }});
        e.push_back({"prime_dichotomy",
                     "classical prime iff residuals satisfy the two-scalar dichotomy",
                     [](const Corpus& c) { return plain("prime_dichotomy", c, prime_dichotomy_on); }});
        e.push_back({"product_transfer",
                     "binary products: classical 1-absorbing prime iff classical prime iff one "
                     "classical prime factor",
                     [](const Corpus& c) {
                         return plain("product_transfer", c,
                                      [](const Instance& in) { return product_check(in, 2); });
                     }});
        e.push_back({"product_transfer_n",
                     "ternary products obey the same factor shape equivalence",
                     [](const Corpus& c) {
                         return plain("product_transfer_n", c,
                                      [](const Instance& in) { return product_check(in, 3); });
                     }});
        e.push_back({"quotient_transfer",
                     "classical 1-absorbing prime passes to and from quotients",
                     [](const Corpus& c) { return plain("quotient_transfer", c, quotient_transfer_on); }});
        e.push_back({"residual_union",
                     "residual ideals of abcm decompose as a one-sided union",
                     [](const Corpus& c) { return plain("residual_union", c, residual_union_on); }});
        e.push_back({"ring_dichotomy",
                     "every proper submodule of every module is classical 1-absorbing prime iff the "
                     "ring is local with square-zero maximal ideal",
                     ring_dichotomy_all});
        e.push_back({"semiprime_factorization",
                     "classical prime iff classical 1-absorbing prime and semiprime",
                     [](const Corpus& c) {
                         return plain("semiprime_factorization", c, semiprime_factorization_on);
                     }});
        e.push_back({"submodule_characterizations",
                     "submodule-quantified forms agree with the definition",
                     [](const Corpus& c) {
                         return plain("submodule_characterizations", c, [&c](const Instance& in) {
                             return characterizations_on(in, c.config, "sub_");
                         });
                     }});
        e.push_back({"tensor_transfer",
                     "classical 1-absorbing prime transfers to free tensor powers",
                     tensor_transfer_all});
        e.push_back({"triple_product",
                     "multiplication modules obey the submodule triple product law",
                     [](const Corpus& c) {
                         return plain("triple_product", c, [&c](const Instance& in) {
                             return triple_product_on(in, c.config);
                         });
                     }});
        std::sort(e.begin(), e.end(), [](const Entry& a, const Entry& b) { return a.id < b.id; });
        return e;
    }();
    return entries;
}

}  // namespace

const std::vector<std::string>& registered_theorems() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> v;
        for (const Entry& e : registry()) v.push_back(e.id);
        return v;
    }();
    return ids;
}

bool is_registered_theorem(const std::string& id) {
    for (const Entry& e : registry())
        if (e.id == id) return true;
    return false;
}

std::string theorem_description(const std::string& id) {
    for (const Entry& e : registry())
        if (e.id == id) return e.desc;
    return "";
}

std::vector<Verdict> verify_theorem(const std::string& theorem_id, const Corpus& corpus) {
    for (const Entry& e : registry())
        if (e.id == theorem_id) return e.run(corpus);
    throw Error("unknown theorem id: " + theorem_id);
}

}  // namespace finalg

#include <algorithm>
#include <unordered_map>

#include "finalg/classify.hpp"

namespace finalg {

namespace {

struct OracleCtx {
    const Submodule& P;
    ModulePtr mod;
    RingPtr ring;
    int n = 0;
    int rs = 0;

    bool have_ideals = false;
    std::string ideal_skip;
    std::vector<Ideal> ideals;
    std::vector<std::vector<int>> ideal_elems;
    std::vector<int> propers;      // full indices of proper ideals, canonical order
    std::vector<int> proper_pos;   // full index -> position in propers, -1 otherwise
    std::vector<std::vector<int>> prod2;  // proper pos x proper pos -> full index

    bool have_subs = false;
    std::string sub_skip;
    std::vector<Submodule> subs;
    std::vector<std::vector<int>> it_sub;  // full ideal index x sub index -> sub index

    std::vector<char> resid_known;
    std::vector<Bitset> resid;
    std::vector<char> colonL_known;
    std::vector<Bitset> colonL;

    explicit OracleCtx(const Submodule& p, int ring_cap, int submodule_cap)
        : P(p), mod(p.module), ring(p.module->ring()), n(p.module->size()),
          rs(p.module->ring()->size()) {
        try {
            ideals = all_ideals(ring, ring_cap);
            have_ideals = true;
        } catch (const CapError& e) {
            ideal_skip = e.what();
        }
        if (have_ideals) {
            std::unordered_map<Bitset, int, BitsetHash> ideal_index;
            for (size_t i = 0; i < ideals.size(); ++i) {
                ideal_elems.push_back(ideals[i].members.elements());
                ideal_index.emplace(ideals[i].members, static_cast<int>(i));
            }
            proper_pos.assign(ideals.size(), -1);
            for (size_t i = 0; i < ideals.size(); ++i)
                if (ideals[i].proper()) {
                    proper_pos[i] = static_cast<int>(propers.size());
                    propers.push_back(static_cast<int>(i));
                }
            prod2.assign(propers.size(), std::vector<int>(propers.size(), -1));
            for (size_t i = 0; i < propers.size(); ++i)
                for (size_t j = 0; j <= i; ++j) {
                    Ideal p = ideal_product(ideals[propers[i]], ideals[propers[j]]);
                    int idx = ideal_index.at(p.members);
                    prod2[i][j] = prod2[j][i] = idx;
                }
        }
        try {
            subs = all_submodules(mod, submodule_cap);
            have_subs = true;
        } catch (const CapError& e) {
            sub_skip = e.what();
        }
        if (have_subs && have_ideals) {
            std::unordered_map<Bitset, int, BitsetHash> sub_index;
            for (size_t i = 0; i < subs.size(); ++i)
                sub_index.emplace(subs[i].members, static_cast<int>(i));
            it_sub.assign(ideals.size(), std::vector<int>(subs.size(), -1));
            for (size_t i = 0; i < ideals.size(); ++i)
                for (size_t j = 0; j < subs.size(); ++j)
                    it_sub[i][j] = sub_index.at(ideal_times_submodule(ideals[i], subs[j]).members);
        }
        resid_known.assign(rs, 0);
        resid.resize(rs);
        if (have_subs) {
            colonL_known.assign(subs.size(), 0);
            colonL.resize(subs.size());
        }
    }

    bool inP(int x) const { return P.members.test(x); }

    // (P :_M x) as a member set, cached per scalar
    const Bitset& resid_of(int x) {
        if (!resid_known[x]) {
            resid[x] = residual_in_module(P, x).members;
            resid_known[x] = 1;
        }
        return resid[x];
    }

    // (P :_A L) for a cataloged submodule, cached per index
    const Bitset& colon_of_sub(int si) {
        if (!colonL_known[si]) {
            colonL[si] = residual_ideal(P, subs[si].members).members;
            colonL_known[si] = 1;
        }
        return colonL[si];
    }

    Bitset colon_of_set(const Bitset& set) const { return residual_ideal(P, set).members; }

    std::string ideal_str(int fi) const { return ideals[fi].str(); }
};

OracleResult skipped(const std::string& reason) {
    OracleResult r;
    r.status = OracleStatus::skipped;
    r.skip_reason = reason;
    return r;
}

OracleResult failure(Witness w, std::string detail) {
    OracleResult r;
    r.status = OracleStatus::fails;
    r.witness = w;
    r.detail = std::move(detail);
    return r;
}

OracleResult success() {
    OracleResult r;
    r.status = OracleStatus::holds;
    return r;
}

OracleResult run_elt_union(OracleCtx& c) {
    const auto& nu = c.ring->nonunits();
    for (int a : nu)
        for (int b : nu) {
            int ab = c.ring->mul(a, b);
            for (int cc : nu) {
                int abc = c.ring->mul(ab, cc);
                for (int m = 0; m < c.n; ++m) {
                    bool lhs = c.inP(c.mod->act(abc, m));
                    bool rhs = c.inP(c.mod->act(ab, m)) || c.inP(c.mod->act(cc, m));
                    if (lhs != rhs)
                        return failure({a, b, cc, m},
                                       "(P:_M abc) and (P:_M ab) union (P:_M c) disagree at m=" +
                                           std::to_string(m));
                }
            }
        }
    return success();
}

OracleResult run_elt_collapse_ab(OracleCtx& c) {
    const auto& nu = c.ring->nonunits();
    for (int a : nu)
        for (int b : nu) {
            int ab = c.ring->mul(a, b);
            for (int m = 0; m < c.n; ++m) {
                int abm = c.mod->act(ab, m);
                if (c.inP(abm)) continue;
                for (int x = 0; x < c.rs; ++x)
                    if (c.inP(c.mod->act(x, abm)) != c.inP(c.mod->act(x, m)))
                        return failure({a, b, -1, m},
                                       "(P:_A abm) and (P:_A m) disagree at scalar " +
                                           std::to_string(x));
            }
        }
    return success();
}

OracleResult run_elt_aIb(OracleCtx& c) {
    if (!c.have_ideals) return skipped(c.ideal_skip);
    const auto& nu = c.ring->nonunits();
    for (int a : nu)
        for (int b : nu) {
            int ab = c.ring->mul(a, b);
            for (int pi : c.propers) {
                const auto& ie = c.ideal_elems[pi];
                for (int m = 0; m < c.n; ++m) {
                    bool premise = true;
                    for (int x : ie)
                        if (!c.inP(c.mod->act(c.ring->mul(ab, x), m))) {
                            premise = false;
                            break;
                        }
                    if (!premise) continue;
                    if (c.inP(c.mod->act(b, m))) continue;
                    bool aIm = true;
                    for (int x : ie)
                        if (!c.inP(c.mod->act(c.ring->mul(a, x), m))) {
                            aIm = false;
                            break;
                        }
                    if (aIm) continue;
                    return failure({a, b, -1, m}, "I=" + c.ideal_str(pi));
                }
            }
        }
    return success();
}

OracleResult run_elt_collapse_aI(OracleCtx& c) {
    if (!c.have_ideals) return skipped(c.ideal_skip);
    const auto& nu = c.ring->nonunits();
    for (int a : nu)
        for (int pi : c.propers) {
            const auto& ie = c.ideal_elems[pi];
            for (int m = 0; m < c.n; ++m) {
                Bitset aIm(c.n);
                for (int x : ie) aIm.set(c.mod->act(c.ring->mul(a, x), m));
                if (aIm.subset_of(c.P.members)) continue;
                Bitset lhs = c.colon_of_set(aIm);
                Bitset rhs = residual_ideal_of_element(c.P, m).members;
                if (!(lhs == rhs))
                    return failure({a, -1, -1, m},
                                   "I=" + c.ideal_str(pi) + " (P:_A aIm)=" + lhs.str() +
                                       " (P:_A m)=" + rhs.str());
            }
        }
    return success();
}

OracleResult run_elt_aIJ(OracleCtx& c) {
    if (!c.have_ideals) return skipped(c.ideal_skip);
    const auto& nu = c.ring->nonunits();
    for (int a : nu)
        for (size_t i = 0; i < c.propers.size(); ++i)
            for (size_t j = 0; j < c.propers.size(); ++j) {
                const auto& ij = c.ideal_elems[c.prod2[i][j]];
                const auto& ie = c.ideal_elems[c.propers[i]];
                const auto& je = c.ideal_elems[c.propers[j]];
                for (int m = 0; m < c.n; ++m) {
                    bool premise = true;
                    for (int z : ij)
                        if (!c.inP(c.mod->act(c.ring->mul(a, z), m))) {
                            premise = false;
                            break;
                        }
                    if (!premise) continue;
                    bool aIm = true;
                    for (int x : ie)
                        if (!c.inP(c.mod->act(c.ring->mul(a, x), m))) {
                            aIm = false;
                            break;
                        }
                    if (aIm) continue;
                    bool Jm = true;
                    for (int y : je)
                        if (!c.inP(c.mod->act(y, m))) {
                            Jm = false;
                            break;
                        }
                    if (Jm) continue;
                    return failure({a, -1, -1, m},
                                   "I=" + c.ideal_str(c.propers[i]) +
                                       " J=" + c.ideal_str(c.propers[j]));
                }
            }
    return success();
}

OracleResult run_elt_collapse_IJ(OracleCtx& c) {
    if (!c.have_ideals) return skipped(c.ideal_skip);
    for (size_t i = 0; i < c.propers.size(); ++i)
        for (size_t j = 0; j < c.propers.size(); ++j) {
            const auto& ij = c.ideal_elems[c.prod2[i][j]];
            for (int m = 0; m < c.n; ++m) {
                Bitset IJm(c.n);
                for (int z : ij) IJm.set(c.mod->act(z, m));
                if (IJm.subset_of(c.P.members)) continue;
                Bitset lhs = c.colon_of_set(IJm);
                Bitset rhs = residual_ideal_of_element(c.P, m).members;
                if (!(lhs == rhs))
                    return failure({-1, -1, -1, m},
                                   "I=" + c.ideal_str(c.propers[i]) +
                                       " J=" + c.ideal_str(c.propers[j]) + " (P:_A IJm)=" +
                                       lhs.str() + " (P:_A m)=" + rhs.str());
            }
        }
    return success();
}

OracleResult run_elt_IJK(OracleCtx& c) {
    if (!c.have_ideals) return skipped(c.ideal_skip);
    for (size_t i = 0; i < c.propers.size(); ++i)
        for (size_t j = 0; j < c.propers.size(); ++j) {
            int ij_full = c.prod2[i][j];
            const auto& ij = c.ideal_elems[ij_full];
            int ij_pos = c.proper_pos[ij_full];
            for (size_t k = 0; k < c.propers.size(); ++k) {
                const auto& ijk = c.ideal_elems[c.prod2[ij_pos][k]];
                const auto& ke = c.ideal_elems[c.propers[k]];
                for (int m = 0; m < c.n; ++m) {
                    bool premise = true;
                    for (int z : ijk)
                        if (!c.inP(c.mod->act(z, m))) {
                            premise = false;
                            break;
                        }
                    if (!premise) continue;
                    bool IJm = true;
                    for (int z : ij)
                        if (!c.inP(c.mod->act(z, m))) {
                            IJm = false;
                            break;
                        }
                    if (IJm) continue;
                    bool Km = true;
                    for (int x : ke)
                        if (!c.inP(c.mod->act(x, m))) {
                            Km = false;
                            break;
                        }
                    if (Km) continue;
                    return failure({-1, -1, -1, m},
                                   "I=" + c.ideal_str(c.propers[i]) +
                                       " J=" + c.ideal_str(c.propers[j]) +
                                       " K=" + c.ideal_str(c.propers[k]));
                }
            }
        }
    return success();
}

OracleResult run_elt_colon_1abs(OracleCtx& c) {
    for (int m = 0; m < c.n; ++m) {
        if (c.inP(m)) continue;
        Ideal cm = residual_ideal_of_element(c.P, m);
        IdealPredicateResult res = is_1absorbing_prime_ideal(cm);
        if (!res.holds)
            return failure({res.a, res.b, res.c, m}, "(P:_A m)=" + cm.str());
    }
    return success();
}

OracleResult run_sub_dichotomy(OracleCtx& c) {
    const auto& nu = c.ring->nonunits();
    for (int a : nu)
        for (int b : nu) {
            int ab = c.ring->mul(a, b);
            for (int cc : nu) {
                int abc = c.ring->mul(ab, cc);
                const Bitset& rabc = c.resid_of(abc);
                if (rabc == c.resid_of(ab) || rabc == c.resid_of(cc)) continue;
                return failure({a, b, cc, -1},
                               "(P:_M abc)=" + rabc.str() + " (P:_M ab)=" + c.resid_of(ab).str() +
                                   " (P:_M c)=" + c.resid_of(cc).str());
            }
        }
    return success();
}

OracleResult run_sub_triple(OracleCtx& c) {
    if (!c.have_subs) return skipped(c.sub_skip);
    const auto& nu = c.ring->nonunits();
    for (int a : nu)
        for (int b : nu) {
            int ab = c.ring->mul(a, b);
            for (int cc : nu) {
                int abc = c.ring->mul(ab, cc);
                const Bitset& rabc = c.resid_of(abc);
                const Bitset& rab = c.resid_of(ab);
                const Bitset& rc = c.resid_of(cc);
                for (size_t l = 0; l < c.subs.size(); ++l) {
                    const Bitset& L = c.subs[l].members;
                    if (!L.subset_of(rabc)) continue;
                    if (L.subset_of(rab) || L.subset_of(rc)) continue;
                    return failure({a, b, cc, -1}, "L=" + L.str());
                }
            }
        }
    return success();
}

OracleResult run_sub_collapse_ab(OracleCtx& c) {
    if (!c.have_subs) return skipped(c.sub_skip);
    const auto& nu = c.ring->nonunits();
    for (int a : nu)
        for (int b : nu) {
            int ab = c.ring->mul(a, b);
            const Bitset& rab = c.resid_of(ab);
            for (size_t l = 0; l < c.subs.size(); ++l) {
                const Bitset& L = c.subs[l].members;
                if (L.subset_of(rab)) continue;
                Bitset abL(c.n);
                for (int x : L.elements()) abL.set(c.mod->act(ab, x));
                Bitset lhs = c.colon_of_set(abL);
                const Bitset& rhs = c.colon_of_sub(static_cast<int>(l));
                if (!(lhs == rhs))
                    return failure({a, b, -1, -1},
                                   "L=" + L.str() + " (P:_A abL)=" + lhs.str() +
                                       " (P:_A L)=" + rhs.str());
            }
        }
    return success();
}

OracleResult run_sub_abI(OracleCtx& c) {
    if (!c.have_ideals) return skipped(c.ideal_skip);
    if (!c.have_subs) return skipped(c.sub_skip);
    const auto& nu = c.ring->nonunits();
    for (int a : nu)
        for (int b : nu) {
            int ab = c.ring->mul(a, b);
            const Bitset& rab = c.resid_of(ab);
            for (int pi : c.propers)
                for (size_t l = 0; l < c.subs.size(); ++l) {
                    const Bitset& IL = c.subs[c.it_sub[pi][l]].members;
                    if (!IL.subset_of(rab)) continue;
                    if (c.subs[l].members.subset_of(rab)) continue;
                    if (IL.subset_of(c.P.members)) continue;
                    return failure({a, b, -1, -1},
                                   "I=" + c.ideal_str(pi) + " L=" + c.subs[l].str());
                }
        }
    return success();
}

OracleResult run_sub_collapse_aI(OracleCtx& c) {
    if (!c.have_ideals) return skipped(c.ideal_skip);
    if (!c.have_subs) return skipped(c.sub_skip);
    const auto& nu = c.ring->nonunits();
    for (int a : nu)
        for (int pi : c.propers)
            for (size_t l = 0; l < c.subs.size(); ++l) {
                const Bitset& IL = c.subs[c.it_sub[pi][l]].members;
                if (IL.subset_of(c.resid_of(a))) continue;
                Bitset aIL(c.n);
                for (int y : IL.elements()) aIL.set(c.mod->act(a, y));
                Bitset lhs = c.colon_of_set(aIL);
                const Bitset& rhs = c.colon_of_sub(static_cast<int>(l));
                if (!(lhs == rhs))
                    return failure({a, -1, -1, -1},
                                   "I=" + c.ideal_str(pi) + " L=" + c.subs[l].str() +
                                       " (P:_A aIL)=" + lhs.str() + " (P:_A L)=" + rhs.str());
            }
    return success();
}

OracleResult run_sub_aIJ(OracleCtx& c) {
    if (!c.have_ideals) return skipped(c.ideal_skip);
    if (!c.have_subs) return skipped(c.sub_skip);
    const auto& nu = c.ring->nonunits();
    for (int a : nu)
        for (int pi : c.propers)
            for (int pj : c.propers)
                for (size_t l = 0; l < c.subs.size(); ++l) {
                    int jl = c.it_sub[pj][l];
                    const Bitset& IJL = c.subs[c.it_sub[pi][jl]].members;
                    if (!IJL.subset_of(c.resid_of(a))) continue;
                    if (c.subs[c.it_sub[pi][l]].members.subset_of(c.resid_of(a))) continue;
                    if (c.subs[jl].members.subset_of(c.P.members)) continue;
                    return failure({a, -1, -1, -1},
                                   "I=" + c.ideal_str(pi) + " J=" + c.ideal_str(pj) +
                                       " L=" + c.subs[l].str());
                }
    return success();
}

OracleResult run_sub_collapse_IJ(OracleCtx& c) {
    if (!c.have_ideals) return skipped(c.ideal_skip);
    if (!c.have_subs) return skipped(c.sub_skip);
    for (size_t i = 0; i < c.propers.size(); ++i)
        for (size_t j = 0; j < c.propers.size(); ++j)
            for (size_t l = 0; l < c.subs.size(); ++l) {
                int ijl = c.it_sub[c.prod2[i][j]][l];
                if (c.subs[ijl].members.subset_of(c.P.members)) continue;
                const Bitset& lhs = c.colon_of_sub(ijl);
                const Bitset& rhs = c.colon_of_sub(static_cast<int>(l));
                if (!(lhs == rhs))
                    return failure({-1, -1, -1, -1},
                                   "I=" + c.ideal_str(c.propers[i]) +
                                       " J=" + c.ideal_str(c.propers[j]) +
                                       " L=" + c.subs[l].str() + " (P:_A IJL)=" + lhs.str() +
                                       " (P:_A L)=" + rhs.str());
            }
    return success();
}

OracleResult run_sub_IJK(OracleCtx& c) {
    if (!c.have_ideals) return skipped(c.ideal_skip);
    if (!c.have_subs) return skipped(c.sub_skip);
    for (size_t i = 0; i < c.propers.size(); ++i)
        for (size_t j = 0; j < c.propers.size(); ++j) {
            int ij_full = c.prod2[i][j];
            for (size_t k = 0; k < c.propers.size(); ++k)
                for (size_t l = 0; l < c.subs.size(); ++l) {
                    int kl = c.it_sub[c.propers[k]][l];
                    const Bitset& IJKL = c.subs[c.it_sub[ij_full][kl]].members;
                    if (!IJKL.subset_of(c.P.members)) continue;
                    if (c.subs[c.it_sub[ij_full][l]].members.subset_of(c.P.members)) continue;
                    if (c.subs[kl].members.subset_of(c.P.members)) continue;
                    return failure({-1, -1, -1, -1},
                                   "I=" + c.ideal_str(c.propers[i]) +
                                       " J=" + c.ideal_str(c.propers[j]) +
                                       " K=" + c.ideal_str(c.propers[k]) +
                                       " L=" + c.subs[l].str());
                }
        }
    return success();
}

OracleResult run_sub_colon_1abs(OracleCtx& c) {
    if (!c.have_subs) return skipped(c.sub_skip);
    for (size_t l = 0; l < c.subs.size(); ++l) {
        if (c.subs[l].members.subset_of(c.P.members)) continue;
        Ideal colon{c.ring, c.colon_of_sub(static_cast<int>(l))};
        IdealPredicateResult res = is_1absorbing_prime_ideal(colon);
        if (!res.holds)
            return failure({res.a, res.b, res.c, -1},
                           "L=" + c.subs[l].str() + " (P:_A L)=" + colon.str());
    }
    return success();
}

}  // namespace

std::map<std::string, OracleResult> classical_1abs_oracles(const Submodule& P, int ring_cap,
                                                           int submodule_cap) {
    if (!P.module) throw Error("oracle evaluation requires a submodule with a module attached");
    if (!P.proper()) throw Error("oracle evaluation requires a proper submodule");
    OracleCtx c(P, ring_cap, submodule_cap);
    std::map<std::string, OracleResult> out;
    out["elt_union"] = run_elt_union(c);
    out["elt_collapse_ab"] = run_elt_collapse_ab(c);
    out["elt_aIb"] = run_elt_aIb(c);
    out["elt_collapse_aI"] = run_elt_collapse_aI(c);
    out["elt_aIJ"] = run_elt_aIJ(c);
    out["elt_collapse_IJ"] = run_elt_collapse_IJ(c);
    out["elt_IJK"] = run_elt_IJK(c);
    out["elt_colon_1abs"] = run_elt_colon_1abs(c);
    out["sub_dichotomy"] = run_sub_dichotomy(c);
    out["sub_triple"] = run_sub_triple(c);
    out["sub_collapse_ab"] = run_sub_collapse_ab(c);
    out["sub_abI"] = run_sub_abI(c);
    out["sub_collapse_aI"] = run_sub_collapse_aI(c);
    out["sub_aIJ"] = run_sub_aIJ(c);
    out["sub_collapse_IJ"] = run_sub_collapse_IJ(c);
    out["sub_IJK"] = run_sub_IJK(c);
    out["sub_colon_1abs"] = run_sub_colon_1abs(c);
    return out;
}

ResidualUnion residual_union_decomposition(const Submodule& P, int a, int b, int c, int m) {
    const ModulePtr& mod = P.module;
    const RingPtr& r = mod->ring();
    int ab = r->mul(a, b);
    int cm = mod->act(c, m);
    ResidualUnion u{residual_ideal_of_element(P, mod->act(ab, cm)),
                    residual_ideal_of_element(P, mod->act(ab, m)),
                    residual_ideal_of_element(P, cm)};
    u.equals_abm = u.abcm.members == u.abm.members;
    u.equals_cm = u.abcm.members == u.cm.members;
    return u;
}

std::vector<Submodule> minimal_classical_one_abs_primes(const ModulePtr& m, int cap) {
    std::vector<Submodule> hits;
    for (Submodule& sub : all_submodules(m, cap)) {
        if (!sub.proper()) continue;
        if (is_classical_one_abs_prime(sub).holds) hits.push_back(std::move(sub));
    }
    std::vector<Submodule> out;
    for (const Submodule& p : hits) {
        bool minimal = true;
        for (const Submodule& q : hits)
            if (!(q.members == p.members) && q.members.subset_of(p.members)) {
                minimal = false;
                break;
            }
        if (minimal) out.push_back(p);
    }
    return out;
}

MClosedResult is_c1ap_m_closed(const ModulePtr& m, const Bitset& S, int module_cap,
                               int ideal_cap) {
    if (m->size() > module_cap)
        throw CapError("module too large for m-closed analysis (" + std::to_string(m->size()) +
                       " > " + std::to_string(module_cap) + ")");
    if (S.capacity() != m->size()) throw Error("set capacity does not match the module carrier");
    if (S.test(m->zero())) throw Error("m-closed analysis requires a set avoiding zero");

    const RingPtr& r = m->ring();
    std::vector<Ideal> ideals = all_ideals(r);
    std::vector<int> propers;
    for (size_t i = 0; i < ideals.size(); ++i)
        if (ideals[i].proper()) propers.push_back(static_cast<int>(i));
    if (static_cast<int>(propers.size()) > ideal_cap)
        throw CapError("too many proper ideals for m-closed analysis (" +
                       std::to_string(propers.size()) + " > " + std::to_string(ideal_cap) + ")");
    std::vector<int> proper_pos(ideals.size(), -1);
    for (size_t i = 0; i < propers.size(); ++i) proper_pos[propers[i]] = static_cast<int>(i);

    std::vector<Submodule> subs = all_submodules(m);
    std::unordered_map<Bitset, int, BitsetHash> sub_index;
    for (size_t i = 0; i < subs.size(); ++i) sub_index.emplace(subs[i].members, static_cast<int>(i));

    const size_t p = propers.size(), s = subs.size();
    std::vector<std::vector<int>> prod2(p, std::vector<int>(p));
    for (size_t i = 0; i < p; ++i)
        for (size_t j = 0; j <= i; ++j) {
            Ideal prod = ideal_product(ideals[propers[i]], ideals[propers[j]]);
            int full = -1;
            for (size_t t = 0; t < ideals.size(); ++t)
                if (ideals[t].members == prod.members) {
                    full = static_cast<int>(t);
                    break;
                }
            prod2[i][j] = prod2[j][i] = proper_pos[full];
        }
    std::vector<std::vector<int>> pt(p, std::vector<int>(s));
    for (size_t i = 0; i < p; ++i)
        for (size_t l = 0; l < s; ++l)
            pt[i][l] = sub_index.at(ideal_times_submodule(ideals[propers[i]], subs[l]).members);
    std::vector<std::vector<int>> sum(s, std::vector<int>(s));
    for (size_t i = 0; i < s; ++i)
        for (size_t j = 0; j <= i; ++j)
            sum[i][j] = sum[j][i] = sub_index.at(submodule_sum(subs[i], subs[j]).members);
    std::vector<char> hits(s);
    for (size_t i = 0; i < s; ++i) hits[i] = subs[i].members.intersects(S) ? 1 : 0;

    for (size_t i = 0; i < p; ++i)
        for (size_t j = 0; j < p; ++j) {
            int ij = prod2[i][j];
            for (size_t k = 0; k < p; ++k) {
                int ijk = prod2[ij][k];
                for (size_t l = 0; l < s; ++l) {
                    int ijl = pt[ij][l], kl = pt[k][l], ijkl = pt[ijk][l];
                    for (size_t nn = 0; nn < s; ++nn) {
                        if (!hits[sum[nn][ijl]] || !hits[sum[nn][kl]]) continue;
                        if (hits[sum[nn][ijkl]]) continue;
                        MClosedResult res;
                        res.closed = false;
                        res.I = propers[i];
                        res.J = propers[j];
                        res.K = propers[k];
                        res.L = static_cast<int>(l);
                        res.N = static_cast<int>(nn);
                        res.detail = "I=" + ideals[propers[i]].str() +
                                     " J=" + ideals[propers[j]].str() +
                                     " K=" + ideals[propers[k]].str() + " L=" + subs[l].str() +
                                     " N=" + subs[nn].str();
                        return res;
                    }
                }
            }
        }
    return {};
}

Submodule krull_maximal_disjoint(const ModulePtr& m, const Bitset& S, int module_cap) {
    if (m->size() > module_cap)
        throw CapError("module too large for m-closed analysis (" + std::to_string(m->size()) +
                       " > " + std::to_string(module_cap) + ")");
    if (S.capacity() != m->size()) throw Error("set capacity does not match the module carrier");
    if (S.none()) throw Error("the avoided set must be nonempty");
    if (S.test(m->zero())) throw Error("m-closed analysis requires a set avoiding zero");

    std::vector<Submodule> subs = all_submodules(m);
    std::vector<Submodule> disjoint;
    for (Submodule& sub : subs)
        if (!sub.members.intersects(S)) disjoint.push_back(std::move(sub));
    for (const Submodule& cand : disjoint) {
        bool maximal = true;
        for (const Submodule& other : disjoint)
            if (!(other.members == cand.members) && cand.members.subset_of(other.members)) {
                maximal = false;
                break;
            }
        if (maximal) return cand;
    }
    throw Error("no maximal disjoint submodule exists");
}

}  // namespace finalg

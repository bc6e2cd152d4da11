// finalg — inspect finite rings and modules, classify submodules, and run the
// verification suite, from structure files or the built-in corpus.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "CLI11.hpp"
#include "finalg/classify.hpp"
#include "finalg/construct.hpp"
#include "finalg/lab.hpp"
#include "finalg/structure_io.hpp"

namespace {

using namespace finalg;

constexpr int kExitFailure = 1;  // a property, axiom, or cap was violated
constexpr int kExitUsage = 2;    // bad arguments, unparsable input, unknown names

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

LoadedDoc load_or_fail(const std::string& path, const IoCaps& caps) {
    LoadedDoc doc = load_document(read_file(path), caps);
    if (!doc.issues.empty()) {
        for (const BuildIssue& i : doc.issues)
            std::cerr << path << ": " << i.structure << ": " << i.message << "\n";
        throw Error("document has invalid structures");
    }
    return doc;
}

const char* yn(bool b) { return b ? "yes" : "no"; }

// the six flags in implication-friendly order, with the witness of the first
// failing one
struct FlagRow {
    std::string flags[6];
    std::string witness;
};

FlagRow flag_row(const ClassReport& rep) {
    const PredicateResult* rs[6] = {&rep.prime,   &rep.classical_prime,     &rep.semiprime,
                                    &rep.one_abs, &rep.classical_one_abs,   &rep.classical_two_abs};
    FlagRow row;
    for (int i = 0; i < 6; ++i) {
        row.flags[i] = yn(rs[i]->holds);
        if (!rs[i]->holds && row.witness.empty()) row.witness = rs[i]->witness.str();
    }
    return row;
}

void print_classification(std::ostream& os, const ModulePtr& m,
                          const std::vector<Submodule>& subs) {
    os << "module " << m->label() << " over " << m->ring()->label() << ", " << m->size()
       << " elements\n";
    os << std::left << std::setw(6) << "#" << std::setw(24) << "members" << std::setw(6) << "size"
       << std::setw(7) << "prime" << std::setw(11) << "classical" << std::setw(11) << "semiprime"
       << std::setw(7) << "1-abs" << std::setw(11) << "cl-1-abs" << std::setw(10) << "cl-2-abs"
       << "witness\n";
    os << std::string(100, '-') << "\n";
    int shown = 0;
    for (size_t i = 0; i < subs.size(); ++i) {
        const Submodule& P = subs[i];
        if (P.members.count() == P.module->size()) continue;  // improper
        ClassReport rep = classify(P);
        FlagRow row = flag_row(rep);
        std::string members = P.members.str();
        if (members.size() > 22) members = members.substr(0, 19) + "...";
        os << std::left << std::setw(6) << i << std::setw(24) << members << std::setw(6)
           << P.members.count() << std::setw(7) << row.flags[0] << std::setw(11) << row.flags[1]
           << std::setw(11) << row.flags[2] << std::setw(7) << row.flags[3] << std::setw(11)
           << row.flags[4] << std::setw(10) << row.flags[5] << row.witness << "\n";
        ++shown;
    }
    os << shown << " proper submodules (the full module is excluded)\n";
}

// --- subcommand state ---------------------------------------------------

struct Options {
    IoCaps caps;
    bool force = false;

    std::string file;
    bool emit = false;

    std::string module_name;
    std::string submodule_name;

    bool default_corpus = false;
    std::vector<std::string> theorems;
    std::string out_path;
    int threads = 0;
    bool list = false;

    std::string ideal_name;
    bool classify_result = false;
    std::vector<std::string> factor_names;
};

int cmd_validate(const Options& opt) {
    LoadedDoc doc = load_document(read_file(opt.file), opt.caps);
    if (!doc.issues.empty()) {
        for (const BuildIssue& i : doc.issues)
            std::cerr << opt.file << ": " << i.structure << ": " << i.message << "\n";
        return kExitFailure;
    }
    if (opt.emit) {
        std::cout << emit_document(doc);
        return 0;
    }
    auto list_names = [](const auto& entries) {
        std::string out;
        for (const auto& e : entries) {
            if (!out.empty()) out += ", ";
            out += e.name;
        }
        return out.empty() ? std::string("none") : out;
    };
    std::cout << "rings:      " << doc.rings.size() << " (" << list_names(doc.rings) << ")\n";
    std::cout << "modules:    " << doc.modules.size() << " (" << list_names(doc.modules) << ")\n";
    std::cout << "submodules: " << doc.submodules.size() << " (" << list_names(doc.submodules)
              << ")\n";
    std::cout << "homs:       " << doc.homs.size() << " (" << list_names(doc.homs) << ")\n";
    std::cout << "sets:       " << doc.sets.size() << " (" << list_names(doc.sets) << ")\n";
    std::cout << "all structures satisfy their axioms\n";
    return 0;
}

int cmd_classify(const Options& opt) {
    LoadedDoc doc = load_or_fail(opt.file, opt.caps);
    ModulePtr m = doc.module(opt.module_name);
    if (!m) {
        std::cerr << "unknown module \"" << opt.module_name << "\"\n";
        return kExitUsage;
    }
    if (!opt.submodule_name.empty()) {
        const NamedSubmodule* s = doc.submodule(opt.submodule_name);
        if (!s || s->submodule.module != m) {
            std::cerr << "unknown submodule \"" << opt.submodule_name << "\" of module \""
                      << opt.module_name << "\"\n";
            return kExitUsage;
        }
        if (s->submodule.members.count() == m->size()) {
            std::cerr << "submodule \"" << opt.submodule_name
                      << "\" is the full module; the classification predicates require a proper "
                         "submodule\n";
            return kExitFailure;
        }
        print_classification(std::cout, m, {s->submodule});
        return 0;
    }
    std::vector<Submodule> subs = all_submodules(m, opt.caps.max_submodules);
    print_classification(std::cout, m, subs);
    return 0;
}

Corpus corpus_from_document(const LoadedDoc& doc, const Options& opt) {
    Corpus c;
    c.config.zmods.clear();
    c.config.include_products = false;
    c.config.include_amalgams = false;
    c.config.max_ring_size = opt.caps.max_ring_size;
    c.config.max_module_size = opt.caps.max_module_size;
    c.config.max_submodules = opt.caps.max_submodules;
    for (const NamedRing& r : doc.rings) c.rings.push_back(r.ring);
    for (const NamedModule& m : doc.modules) {
        Instance in;
        in.label = m.name;
        in.module = m.module;
        try {
            in.submodules = all_submodules(m.module, opt.caps.max_submodules);
        } catch (const CapError& e) {
            in.enumeration_skip = e.what();
        }
        c.instances.push_back(std::move(in));
    }
    return c;
}

int cmd_verify(const Options& opt) {
    if (opt.list) {
        for (const std::string& id : registered_theorems())
            std::cout << std::left << std::setw(30) << id << theorem_description(id) << "\n";
        return 0;
    }
    for (const std::string& id : opt.theorems) {
        if (!is_registered_theorem(id)) {
            std::cerr << "unknown theorem id \"" << id << "\" (finalg verify --list shows all)\n";
            return kExitUsage;
        }
    }
    if (opt.default_corpus == !opt.file.empty()) {
        std::cerr << "verify needs exactly one of --default-corpus or a structure file\n";
        return kExitUsage;
    }
#ifdef _OPENMP
    if (opt.threads > 0) omp_set_num_threads(opt.threads);
#endif
    Corpus corpus;
    if (opt.default_corpus) {
        CorpusConfig config;
        config.max_ring_size = opt.caps.max_ring_size;
        config.max_module_size = opt.caps.max_module_size;
        config.max_submodules = opt.caps.max_submodules;
        corpus = generate_corpus(config);
    } else {
        LoadedDoc doc = load_or_fail(opt.file, opt.caps);
        corpus = corpus_from_document(doc, opt);
    }
    corpus.config.theorems = opt.theorems;
    SuiteReport rep = run_suite(corpus);
    std::cout << render_suite_table(rep);
    if (!opt.out_path.empty()) {
        std::ofstream out(opt.out_path, std::ios::binary);
        if (!out) {
            std::cerr << "cannot write " << opt.out_path << "\n";
            return kExitUsage;
        }
        out << suite_report_json(rep);
    }
    return rep.total_failures() == 0 ? 0 : kExitFailure;
}

int cmd_amalgamate(const Options& opt) {
    LoadedDoc doc = load_or_fail(opt.file, opt.caps);
    ModulePtr m = doc.module(opt.module_name);
    if (!m) {
        std::cerr << "unknown module \"" << opt.module_name << "\"\n";
        return kExitUsage;
    }
    const NamedSubmodule* s = doc.submodule(opt.ideal_name);
    if (!s) {
        std::cerr << "unknown submodule \"" << opt.ideal_name << "\"\n";
        return kExitUsage;
    }
    const RingPtr& ring = m->ring();
    if (s->submodule.module->ring() != ring || s->submodule.module->size() != ring->size()) {
        std::cerr << "submodule \"" << opt.ideal_name
                  << "\" is not carried by the scalar ring of \"" << opt.module_name << "\"\n";
        return kExitUsage;
    }
    Ideal I{ring, s->submodule.members};
    if (!is_ideal(ring, I.members)) {
        std::cerr << "submodule \"" << opt.ideal_name << "\" is not an ideal of "
                  << ring->label() << "\n";
        return kExitFailure;
    }
    AmalgamRing ar = amalgamate_ring(ring, I);
    AmalgamModule am = amalgamate_module(ar, m);
    std::cout << "ring:   " << ar.result->label() << ", " << ar.result->size() << " elements\n";
    std::cout << "module: " << am.result->label() << ", " << am.result->size() << " elements\n";
    if (!opt.classify_result) return 0;

    std::vector<Submodule> subs = all_submodules(m, opt.caps.max_submodules);
    std::cout << "\nbase submodule flags next to their duplicated images "
                 "(prime, classical prime, semiprime, 1-absorbing, classical 1-absorbing, "
                 "classical 2-absorbing)\n";
    std::cout << std::left << std::setw(24) << "members" << std::setw(22) << "base"
              << std::setw(8) << "dup size"
              << "duplicated\n";
    std::cout << std::string(76, '-') << "\n";
    for (const Submodule& P : subs) {
        if (P.members.count() == P.module->size()) continue;
        Submodule D = amalgamate_submodule(am, P);
        auto flags = [](const ClassReport& rep) {
            std::string out;
            const PredicateResult* rs[6] = {&rep.prime,   &rep.classical_prime,
                                            &rep.semiprime, &rep.one_abs,
                                            &rep.classical_one_abs, &rep.classical_two_abs};
            for (const PredicateResult* r : rs) {
                out += r->holds ? 'y' : '-';
                out += ' ';
            }
            return out;
        };
        std::string members = P.members.str();
        if (members.size() > 22) members = members.substr(0, 19) + "...";
        std::cout << std::left << std::setw(24) << members << std::setw(22) << flags(classify(P))
                  << std::setw(8) << D.members.count() << flags(classify(D)) << "\n";
    }
    return 0;
}

int cmd_product(const Options& opt) {
    LoadedDoc doc = load_or_fail(opt.file, opt.caps);
    std::vector<ModulePtr> parts;
    for (const std::string& name : opt.factor_names) {
        ModulePtr m = doc.module(name);
        if (!m) {
            std::cerr << "unknown module \"" << name << "\"\n";
            return kExitUsage;
        }
        parts.push_back(m);
    }
    ModulePtr prod = product_module(parts[0], parts[1]);
    for (size_t i = 2; i < parts.size(); ++i) prod = product_module(prod, parts[i]);
    if (prod->size() > opt.caps.max_module_size)
        throw CapError("product module has " + std::to_string(prod->size()) +
                       " elements, above the module size cap " +
                       std::to_string(opt.caps.max_module_size));
    std::cout << "module: " << prod->label() << " over " << prod->ring()->label() << ", "
              << prod->size() << " elements\n";
    if (!opt.classify_result) return 0;
    std::vector<Submodule> subs = all_submodules(prod, opt.caps.max_submodules);
    print_classification(std::cout, prod, subs);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    Options opt;

    CLI::App app{"finite commutative algebra workbench: validate structure files, classify "
                 "submodules, duplicate along ideals, and verify the theorem suite"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--max-ring-size", opt.caps.max_ring_size,
                   "largest ring the enumerators accept")
        ->envname("FINALG_MAX_RING_SIZE");
    app.add_option("--max-module-size", opt.caps.max_module_size,
                   "largest module the builders accept")
        ->envname("FINALG_MAX_MODULE_SIZE");
    app.add_option("--max-submodules", opt.caps.max_submodules,
                   "largest submodule lattice the enumerators accept")
        ->envname("FINALG_MAX_SUBMODULES");
    app.add_flag("--force", opt.force, "lift all size caps (can be very slow)");

    CLI::App* validate = app.add_subcommand("validate", "check every structure in a file");
    validate->add_option("file", opt.file, "structure file")->required();
    validate->add_flag("--emit", opt.emit, "print the canonical explicit-tables form");

    CLI::App* classify_cmd =
        app.add_subcommand("classify", "classify the proper submodules of a module");
    classify_cmd->add_option("file", opt.file, "structure file")->required();
    classify_cmd->add_option("module", opt.module_name, "module name")->required();
    classify_cmd->add_option("--submodule", opt.submodule_name,
                             "classify one named submodule instead of the whole lattice");

    CLI::App* verify = app.add_subcommand("verify", "run theorem checkers over a corpus");
    verify->add_option("file", opt.file, "structure file whose modules form the corpus");
    verify->add_flag("--default-corpus", opt.default_corpus, "use the built-in corpus");
    verify->add_option("--theorems", opt.theorems, "theorem ids to run (default: all)")
        ->delimiter(',');
    verify->add_option("--out", opt.out_path, "write the deterministic report here");
    verify->add_option("--threads", opt.threads, "worker threads for the checkers");
    verify->add_flag("--list", opt.list, "list theorem ids and exit");

    CLI::App* amalgamate =
        app.add_subcommand("amalgamate", "duplicate a module along an ideal of its scalar ring");
    amalgamate->add_option("file", opt.file, "structure file")->required();
    amalgamate->add_option("module", opt.module_name, "module name")->required();
    amalgamate
        ->add_option("ideal", opt.ideal_name,
                     "named submodule of the scalar ring viewed as a module over itself")
        ->required();
    amalgamate->add_flag("--classify", opt.classify_result,
                         "classify base submodules next to their duplicated images");

    CLI::App* product = app.add_subcommand("product", "form a product of modules");
    product->add_option("file", opt.file, "structure file")->required();
    product->add_option("modules", opt.factor_names, "at least two module names")
        ->required()
        ->expected(2, -1);
    product->add_flag("--classify", opt.classify_result,
                      "classify the proper submodules of the product");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (opt.force) {
        opt.caps.max_ring_size = 1 << 14;
        opt.caps.max_module_size = 1 << 14;
        opt.caps.max_submodules = 1 << 20;
        std::cerr << "warning: --force lifts the size caps; large structures can take a long "
                     "time and a lot of memory\n";
    }

    try {
        if (validate->parsed()) return cmd_validate(opt);
        if (classify_cmd->parsed()) return cmd_classify(opt);
        if (verify->parsed()) return cmd_verify(opt);
        if (amalgamate->parsed()) return cmd_amalgamate(opt);
        if (product->parsed()) return cmd_product(opt);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const CapError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitUsage;
}

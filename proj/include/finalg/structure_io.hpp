#pragma once

#include <string>
#include <vector>

#include "finalg/module.hpp"

namespace finalg {

// malformed document: bad JSON, wrong shapes, unresolved references, bad
// ranges; line/col are 1-based and 0 when unknown
struct ParseError : Error {
    ParseError(const std::string& msg, int line_ = 0, int col_ = 0);

    int line = 0;
    int col = 0;
};

struct NamedRing {
    std::string name;
    RingPtr ring;
};
struct NamedModule {
    std::string name;
    ModulePtr module;
};
struct NamedSubmodule {
    std::string name;
    Submodule submodule;
};
struct NamedHom {
    std::string name;
    ModuleHom hom;
};
struct NamedSet {
    std::string name;
    ModulePtr module;
    Bitset members;
};

// an axiom or consistency violation in a declared structure; building stops at
// the first one, so later structures are absent from the document
struct BuildIssue {
    std::string structure;
    std::string message;
};

struct LoadedDoc {
    std::vector<NamedRing> rings;
    std::vector<NamedModule> modules;
    std::vector<NamedSubmodule> submodules;
    std::vector<NamedHom> homs;
    std::vector<NamedSet> sets;
    std::vector<BuildIssue> issues;

    RingPtr ring(const std::string& name) const;      // nullptr when absent
    ModulePtr module(const std::string& name) const;  // nullptr when absent
    const NamedSubmodule* submodule(const std::string& name) const;
    const NamedHom* hom(const std::string& name) const;
    const NamedSet* set(const std::string& name) const;
};

struct IoCaps {
    int max_ring_size = kRingEnumCap;
    int max_module_size = 144;
    int max_submodules = kSubmoduleEnumCap;
};

// Document shape:
//   { "schema": 1,
//     "rings":      [ {"name", "kind": zmod|product|amalgam|tables, ...} ],
//     "modules":    [ {"name", "kind": ring_as_module|quotient|product|free_tensor|tables, ...} ],
//     "submodules": [ {"name", "module", "gens" or "members"} ],
//     "homs":       [ {"name", "source", "target", "gen_images" or "map"} ],
//     "sets":       [ {"name", "module", "members"} ] }
// References resolve to earlier entries only.  Structures are relabeled by
// their document name.
LoadedDoc load_document(const std::string& text, const IoCaps& caps = {});

// canonical form: every ring and module as explicit tables, submodules by
// member list, homs by full map; loading the emission reproduces the
// structures bit-exactly
std::string emit_document(const LoadedDoc& doc);

}  // namespace finalg

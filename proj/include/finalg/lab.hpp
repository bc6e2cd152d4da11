#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "finalg/classify.hpp"
#include "finalg/construct.hpp"

namespace finalg {

struct CorpusConfig {
    std::vector<int> zmods{2, 3, 4, 6, 8, 9, 12};
    bool include_products = true;
    bool include_amalgams = true;
    int max_ring_size = kRingEnumCap;
    int max_module_size = 144;
    int max_submodules = kSubmoduleEnumCap;
    unsigned seed = 1;  // reserved for sampled corpora; the default corpus is exhaustive
    std::vector<std::string> theorems;  // empty selects every registered checker
};

enum class InstanceKind { plain, product, amalgam };

struct Instance {
    std::string label;
    InstanceKind kind = InstanceKind::plain;
    ModulePtr module;
    std::vector<Submodule> submodules;  // canonical order; empty when enumeration was skipped
    std::string enumeration_skip;       // why the lattice is missing, when it is
    std::vector<ModulePtr> factors;     // product instances: leaf modules, outermost first
    std::shared_ptr<const AmalgamModule> amalgam;  // amalgam instances
};

struct Corpus {
    CorpusConfig config;
    std::vector<RingPtr> rings;  // one entry per distinct scalar ring, build order
    std::vector<Instance> instances;
};

// deterministic: same config, same corpus, labels unique
Corpus generate_corpus(const CorpusConfig& config);

struct Counterexample {
    std::string predicate;  // violated predicate or equality, by name
    std::string submodule;  // member set of the submodule involved
    Bitset members;         // same set, kept for re-evaluation; not serialized
    Witness witness;
    std::string detail;
};

struct Verdict {
    enum class Status { pass, fail, skip };

    std::string theorem_id;
    std::string instance_label;
    Status status = Status::pass;
    std::optional<Counterexample> counterexample;
    std::string skip_reason;
};

const std::vector<std::string>& registered_theorems();  // sorted ids
bool is_registered_theorem(const std::string& id);
std::string theorem_description(const std::string& id);

// one theorem across the whole corpus; verdicts sorted by instance label;
// unknown ids throw
std::vector<Verdict> verify_theorem(const std::string& theorem_id, const Corpus& corpus);

struct TheoremSummary {
    std::string theorem_id;
    int checked = 0;  // passes + failures
    int passes = 0;
    int failures = 0;
    int skips = 0;
    double wall_ms = 0.0;  // reporting only, never part of the serialized payload
    std::vector<Verdict> failure_detail;
    std::vector<Verdict> skip_detail;
};

struct SuiteReport {
    CorpusConfig config;
    std::vector<TheoremSummary> theorems;  // sorted by theorem id

    int total_failures() const;
};

SuiteReport run_suite(const Corpus& corpus);
SuiteReport run_suite(const CorpusConfig& config);

// greedily shrinks each witness slot toward zero while the violation persists,
// staying inside the predicate's quantifier domains; idempotent; verdicts it
// cannot re-evaluate come back unchanged
Verdict minimize_counterexample(const Verdict& v, const Corpus& corpus);

std::string render_suite_table(const SuiteReport& rep);  // fixed width, includes wall times
std::string suite_report_json(const SuiteReport& rep);   // deterministic, no timings

}  // namespace finalg

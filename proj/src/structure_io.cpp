#include "finalg/structure_io.hpp"

#include <utility>

#include "finalg/construct.hpp"
#include "json.hpp"

namespace finalg {

using nlohmann::json;

ParseError::ParseError(const std::string& msg, int line_, int col_)
    : Error(line_ > 0 ? "line " + std::to_string(line_) + ", column " + std::to_string(col_) + ": " + msg
                      : msg),
      line(line_),
      col(col_) {}

RingPtr LoadedDoc::ring(const std::string& name) const {
    for (const NamedRing& r : rings)
        if (r.name == name) return r.ring;
    return nullptr;
}

ModulePtr LoadedDoc::module(const std::string& name) const {
    for (const NamedModule& m : modules)
        if (m.name == name) return m.module;
    return nullptr;
}

const NamedSubmodule* LoadedDoc::submodule(const std::string& name) const {
    for (const NamedSubmodule& s : submodules)
        if (s.name == name) return &s;
    return nullptr;
}

const NamedHom* LoadedDoc::hom(const std::string& name) const {
    for (const NamedHom& h : homs)
        if (h.name == name) return &h;
    return nullptr;
}

const NamedSet* LoadedDoc::set(const std::string& name) const {
    for (const NamedSet& s : sets)
        if (s.name == name) return &s;
    return nullptr;
}

namespace {

void position_of(const std::string& text, size_t byte, int& line, int& col) {
    line = 1;
    col = 1;
    for (size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
}

const json& field(const json& obj, const std::string& key, const std::string& where) {
    auto it = obj.find(key);
    if (it == obj.end()) throw ParseError(where + ": missing field \"" + key + "\"");
    return *it;
}

int int_field(const json& obj, const std::string& key, const std::string& where) {
    const json& v = field(obj, key, where);
    if (!v.is_number_integer()) throw ParseError(where + ": field \"" + key + "\" must be an integer");
    return v.get<int>();
}

std::string str_field(const json& obj, const std::string& key, const std::string& where) {
    const json& v = field(obj, key, where);
    if (!v.is_string() || v.get<std::string>().empty())
        throw ParseError(where + ": field \"" + key + "\" must be a nonempty string");
    return v.get<std::string>();
}

std::vector<int> int_list(const json& v, const std::string& where) {
    if (!v.is_array()) throw ParseError(where + ": expected an array of integers");
    std::vector<int> out;
    for (const json& e : v) {
        if (!e.is_number_integer()) throw ParseError(where + ": expected an array of integers");
        out.push_back(e.get<int>());
    }
    return out;
}

std::vector<uint16_t> table_field(const json& obj, const std::string& key, int rows, int cols,
                                  const std::string& where) {
    const json& v = field(obj, key, where);
    if (!v.is_array() || static_cast<int>(v.size()) != rows)
        throw ParseError(where + ": field \"" + key + "\" must be an array of " +
                         std::to_string(rows) + " rows");
    std::vector<uint16_t> out;
    out.reserve(static_cast<size_t>(rows) * static_cast<size_t>(cols));
    for (const json& row : v) {
        std::vector<int> r = int_list(row, where + "." + key);
        if (static_cast<int>(r.size()) != cols)
            throw ParseError(where + ": field \"" + key + "\" rows must have " + std::to_string(cols) +
                             " entries");
        for (int x : r) {
            if (x < 0 || x > 0xffff)
                throw ParseError(where + ": table entry " + std::to_string(x) + " is out of range");
            out.push_back(static_cast<uint16_t>(x));
        }
    }
    return out;
}

RingPtr relabel(const RingPtr& r, const std::string& name) {
    RingTables t = r->tables();
    t.label = name;
    return FiniteRing::create(std::move(t));
}

std::vector<int> checked_elements(const std::vector<int>& xs, int size, const std::string& where) {
    for (int x : xs)
        if (x < 0 || x >= size)
            throw ParseError(where + ": element " + std::to_string(x) + " is out of range");
    return xs;
}

}  // namespace

LoadedDoc load_document(const std::string& text, const IoCaps& caps) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        int line = 0, col = 0;
        position_of(text, e.byte > 0 ? e.byte - 1 : 0, line, col);
        throw ParseError(e.what(), line, col);
    }
    if (!doc.is_object()) throw ParseError("document must be a JSON object");
    if (int_field(doc, "schema", "document") != 1)
        throw ParseError("document: unsupported schema version");

    LoadedDoc out;
    auto stop_building = [&] { return !out.issues.empty(); };
    auto section = [&](const char* key) -> json {
        auto it = doc.find(key);
        if (it == doc.end()) return json::array();
        if (!it->is_array()) throw ParseError(std::string("document: \"") + key + "\" must be an array");
        return *it;
    };

    for (const json& e : section("rings")) {
        if (stop_building()) break;
        if (!e.is_object()) throw ParseError("rings: entries must be objects");
        std::string name = str_field(e, "name", "ring");
        const std::string where = "ring \"" + name + "\"";
        if (out.ring(name)) throw ParseError(where + ": duplicate name");
        std::string kind = str_field(e, "kind", where);
        RingPtr r;
        if (kind == "zmod") {
            int n = int_field(e, "n", where);
            if (n < 1) throw ParseError(where + ": n must be positive");
            if (n > caps.max_ring_size)
                throw CapError(where + ": " + std::to_string(n) + " elements exceed the ring size cap " +
                               std::to_string(caps.max_ring_size));
            r = relabel(make_zmod(n), name);
        } else if (kind == "product") {
            std::vector<int> dummy;
            const json& fs = field(e, "factors", where);
            if (!fs.is_array() || fs.size() < 2)
                throw ParseError(where + ": \"factors\" must list at least two rings");
            std::vector<RingPtr> parts;
            for (const json& f : fs) {
                if (!f.is_string()) throw ParseError(where + ": factors must be ring names");
                RingPtr p = out.ring(f.get<std::string>());
                if (!p) throw ParseError(where + ": unknown ring \"" + f.get<std::string>() + "\"");
                parts.push_back(p);
            }
            RingPtr prod = ring_product(parts[0], parts[1]);
            for (size_t i = 2; i < parts.size(); ++i) prod = ring_product(prod, parts[i]);
            if (prod->size() > caps.max_ring_size)
                throw CapError(where + ": " + std::to_string(prod->size()) +
                               " elements exceed the ring size cap " + std::to_string(caps.max_ring_size));
            r = relabel(prod, name);
        } else if (kind == "amalgam") {
            RingPtr base = out.ring(str_field(e, "base", where));
            if (!base) throw ParseError(where + ": unknown ring \"" + str_field(e, "base", where) + "\"");
            std::vector<int> gens =
                checked_elements(int_list(field(e, "ideal_gens", where), where), base->size(), where);
            AmalgamRing ar = amalgamate_ring(base, ideal_generated(base, gens));
            if (ar.result->size() > caps.max_ring_size)
                throw CapError(where + ": " + std::to_string(ar.result->size()) +
                               " elements exceed the ring size cap " + std::to_string(caps.max_ring_size));
            r = relabel(ar.result, name);
        } else if (kind == "tables") {
            RingTables t;
            t.label = name;
            t.size = int_field(e, "size", where);
            if (t.size < 1) throw ParseError(where + ": size must be positive");
            if (t.size > caps.max_ring_size)
                throw CapError(where + ": " + std::to_string(t.size) +
                               " elements exceed the ring size cap " + std::to_string(caps.max_ring_size));
            t.zero = int_field(e, "zero", where);
            t.one = int_field(e, "one", where);
            t.add = table_field(e, "add", t.size, t.size, where);
            t.mul = table_field(e, "mul", t.size, t.size, where);
            std::vector<Diagnostic> ds = ring_validate(t);
            if (!ds.empty()) {
                out.issues.push_back({where, render_diagnostics(ds)});
                continue;
            }
            r = FiniteRing::create(std::move(t));
        } else {
            throw ParseError(where + ": unknown kind \"" + kind + "\"");
        }
        out.rings.push_back({std::move(name), std::move(r)});
    }

    for (const json& e : section("modules")) {
        if (stop_building()) break;
        if (!e.is_object()) throw ParseError("modules: entries must be objects");
        std::string name = str_field(e, "name", "module");
        const std::string where = "module \"" + name + "\"";
        if (out.module(name)) throw ParseError(where + ": duplicate name");
        std::string kind = str_field(e, "kind", where);
        ModulePtr m;
        if (kind == "ring_as_module") {
            RingPtr r = out.ring(str_field(e, "ring", where));
            if (!r) throw ParseError(where + ": unknown ring \"" + str_field(e, "ring", where) + "\"");
            m = ring_as_module(r);
        } else if (kind == "quotient") {
            ModulePtr base = out.module(str_field(e, "module", where));
            if (!base)
                throw ParseError(where + ": unknown module \"" + str_field(e, "module", where) + "\"");
            std::vector<int> gens =
                checked_elements(int_list(field(e, "gens", where), where), base->size(), where);
            Submodule L = submodule_generated(base, gens);
            m = quotient_module(base, L).quotient;
        } else if (kind == "product") {
            const json& fs = field(e, "factors", where);
            if (!fs.is_array() || fs.size() < 2)
                throw ParseError(where + ": \"factors\" must list at least two modules");
            std::vector<ModulePtr> parts;
            for (const json& f : fs) {
                if (!f.is_string()) throw ParseError(where + ": factors must be module names");
                ModulePtr p = out.module(f.get<std::string>());
                if (!p) throw ParseError(where + ": unknown module \"" + f.get<std::string>() + "\"");
                parts.push_back(p);
            }
            ModulePtr prod = product_module(parts[0], parts[1]);
            for (size_t i = 2; i < parts.size(); ++i) prod = product_module(prod, parts[i]);
            m = prod;
        } else if (kind == "free_tensor") {
            ModulePtr base = out.module(str_field(e, "module", where));
            if (!base)
                throw ParseError(where + ": unknown module \"" + str_field(e, "module", where) + "\"");
            int k = int_field(e, "k", where);
            if (k < 1) throw ParseError(where + ": k must be positive");
            m = free_tensor(base, k);
        } else if (kind == "tables") {
            ModuleTables t;
            t.label = name;
            RingPtr r = out.ring(str_field(e, "ring", where));
            if (!r) throw ParseError(where + ": unknown ring \"" + str_field(e, "ring", where) + "\"");
            t.ring = r;
            t.size = int_field(e, "size", where);
            if (t.size < 1) throw ParseError(where + ": size must be positive");
            if (t.size > caps.max_module_size)
                throw CapError(where + ": " + std::to_string(t.size) +
                               " elements exceed the module size cap " +
                               std::to_string(caps.max_module_size));
            t.zero = int_field(e, "zero", where);
            t.add = table_field(e, "add", t.size, t.size, where);
            t.act = table_field(e, "act", r->size(), t.size, where);
            std::vector<Diagnostic> ds = module_validate(t);
            if (!ds.empty()) {
                out.issues.push_back({where, render_diagnostics(ds)});
                continue;
            }
            m = FiniteModule::create(std::move(t));
        } else {
            throw ParseError(where + ": unknown kind \"" + kind + "\"");
        }
        if (m->size() > caps.max_module_size)
            throw CapError(where + ": " + std::to_string(m->size()) +
                           " elements exceed the module size cap " +
                           std::to_string(caps.max_module_size));
        if (m->label() != name) m = with_label(m, name);
        out.modules.push_back({std::move(name), std::move(m)});
    }

    for (const json& e : section("submodules")) {
        if (stop_building()) break;
        if (!e.is_object()) throw ParseError("submodules: entries must be objects");
        std::string name = str_field(e, "name", "submodule");
        const std::string where = "submodule \"" + name + "\"";
        if (out.submodule(name)) throw ParseError(where + ": duplicate name");
        ModulePtr m = out.module(str_field(e, "module", where));
        if (!m) throw ParseError(where + ": unknown module \"" + str_field(e, "module", where) + "\"");
        Submodule s;
        if (e.contains("gens")) {
            std::vector<int> gens = checked_elements(int_list(e["gens"], where), m->size(), where);
            s = submodule_generated(m, gens);
        } else if (e.contains("members")) {
            std::vector<int> ms = checked_elements(int_list(e["members"], where), m->size(), where);
            Bitset bits(m->size());
            for (int x : ms) bits.set(x);
            if (!is_submodule(m, bits)) {
                out.issues.push_back({where, "member set is not a submodule"});
                continue;
            }
            s = Submodule{m, bits};
        } else {
            throw ParseError(where + ": needs \"gens\" or \"members\"");
        }
        out.submodules.push_back({std::move(name), std::move(s)});
    }

    for (const json& e : section("homs")) {
        if (stop_building()) break;
        if (!e.is_object()) throw ParseError("homs: entries must be objects");
        std::string name = str_field(e, "name", "hom");
        const std::string where = "hom \"" + name + "\"";
        if (out.hom(name)) throw ParseError(where + ": duplicate name");
        ModulePtr src = out.module(str_field(e, "source", where));
        if (!src) throw ParseError(where + ": unknown module \"" + str_field(e, "source", where) + "\"");
        ModulePtr dst = out.module(str_field(e, "target", where));
        if (!dst) throw ParseError(where + ": unknown module \"" + str_field(e, "target", where) + "\"");
        ModuleHom h;
        if (e.contains("gen_images")) {
            const json& gi = e["gen_images"];
            if (!gi.is_array()) throw ParseError(where + ": \"gen_images\" must be an array of pairs");
            std::vector<std::pair<int, int>> pairs;
            for (const json& p : gi) {
                std::vector<int> xy = int_list(p, where);
                if (xy.size() != 2) throw ParseError(where + ": \"gen_images\" entries must be pairs");
                checked_elements({xy[0]}, src->size(), where);
                checked_elements({xy[1]}, dst->size(), where);
                pairs.emplace_back(xy[0], xy[1]);
            }
            try {
                h = hom_from_generators(src, dst, pairs);
            } catch (const Error& err) {
                out.issues.push_back({where, err.what()});
                continue;
            }
        } else if (e.contains("map")) {
            std::vector<int> map = int_list(e["map"], where);
            h.source = src;
            h.target = dst;
            for (int x : map) h.map.push_back(static_cast<uint16_t>(x));
        } else {
            throw ParseError(where + ": needs \"gen_images\" or \"map\"");
        }
        std::vector<Diagnostic> ds = hom_validate(h);
        if (!ds.empty()) {
            out.issues.push_back({where, render_diagnostics(ds)});
            continue;
        }
        out.homs.push_back({std::move(name), std::move(h)});
    }

    for (const json& e : section("sets")) {
        if (stop_building()) break;
        if (!e.is_object()) throw ParseError("sets: entries must be objects");
        std::string name = str_field(e, "name", "set");
        const std::string where = "set \"" + name + "\"";
        if (out.set(name)) throw ParseError(where + ": duplicate name");
        ModulePtr m = out.module(str_field(e, "module", where));
        if (!m) throw ParseError(where + ": unknown module \"" + str_field(e, "module", where) + "\"");
        std::vector<int> ms =
            checked_elements(int_list(field(e, "members", where), where), m->size(), where);
        Bitset bits(m->size());
        for (int x : ms) bits.set(x);
        out.sets.push_back({std::move(name), std::move(m), std::move(bits)});
    }

    return out;
}

std::string emit_document(const LoadedDoc& doc) {
    json j;
    j["schema"] = 1;
    json rings = json::array();
    for (const NamedRing& r : doc.rings) {
        const RingTables& t = r.ring->tables();
        json e;
        e["name"] = r.name;
        e["kind"] = "tables";
        e["size"] = t.size;
        e["zero"] = t.zero;
        e["one"] = t.one;
        json add = json::array(), mul = json::array();
        for (int x = 0; x < t.size; ++x) {
            json arow = json::array(), mrow = json::array();
            for (int y = 0; y < t.size; ++y) {
                arow.push_back(t.add[static_cast<size_t>(x) * t.size + y]);
                mrow.push_back(t.mul[static_cast<size_t>(x) * t.size + y]);
            }
            add.push_back(std::move(arow));
            mul.push_back(std::move(mrow));
        }
        e["add"] = std::move(add);
        e["mul"] = std::move(mul);
        rings.push_back(std::move(e));
    }
    j["rings"] = std::move(rings);

    json modules = json::array();
    for (const NamedModule& m : doc.modules) {
        const ModuleTables& t = m.module->tables();
        std::string ring_name;
        for (const NamedRing& r : doc.rings)
            if (r.ring == t.ring) ring_name = r.name;
        if (ring_name.empty()) throw Error("module \"" + m.name + "\" uses a ring not in the document");
        json e;
        e["name"] = m.name;
        e["kind"] = "tables";
        e["ring"] = ring_name;
        e["size"] = t.size;
        e["zero"] = t.zero;
        json add = json::array(), act = json::array();
        for (int x = 0; x < t.size; ++x) {
            json row = json::array();
            for (int y = 0; y < t.size; ++y) row.push_back(t.add[static_cast<size_t>(x) * t.size + y]);
            add.push_back(std::move(row));
        }
        for (int a = 0; a < t.ring->size(); ++a) {
            json row = json::array();
            for (int y = 0; y < t.size; ++y) row.push_back(t.act[static_cast<size_t>(a) * t.size + y]);
            act.push_back(std::move(row));
        }
        e["add"] = std::move(add);
        e["act"] = std::move(act);
        modules.push_back(std::move(e));
    }
    j["modules"] = std::move(modules);

    json subs = json::array();
    for (const NamedSubmodule& s : doc.submodules) {
        std::string mod_name;
        for (const NamedModule& m : doc.modules)
            if (m.module == s.submodule.module) mod_name = m.name;
        json e;
        e["name"] = s.name;
        e["module"] = mod_name;
        e["members"] = s.submodule.members.elements();
        subs.push_back(std::move(e));
    }
    j["submodules"] = std::move(subs);

    json homs = json::array();
    for (const NamedHom& h : doc.homs) {
        std::string src, dst;
        for (const NamedModule& m : doc.modules) {
            if (m.module == h.hom.source) src = m.name;
            if (m.module == h.hom.target) dst = m.name;
        }
        json e;
        e["name"] = h.name;
        e["source"] = src;
        e["target"] = dst;
        e["map"] = h.hom.map;
        homs.push_back(std::move(e));
    }
    j["homs"] = std::move(homs);

    json sets = json::array();
    for (const NamedSet& s : doc.sets) {
        std::string mod_name;
        for (const NamedModule& m : doc.modules)
            if (m.module == s.module) mod_name = m.name;
        json e;
        e["name"] = s.name;
        e["module"] = mod_name;
        e["members"] = s.members.elements();
        sets.push_back(std::move(e));
    }
    j["sets"] = std::move(sets);

    return j.dump(2) + "\n";
}

}  // namespace finalg

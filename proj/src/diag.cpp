#include "finalg/diag.hpp"

namespace finalg {

std::string Diagnostic::render() const {
    std::string s = axiom;
    if (!witness.empty()) {
        s += " at (";
        for (size_t i = 0; i < witness.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(witness[i]);
        }
        s += ")";
    }
    return s;
}

std::string render_diagnostics(const std::vector<Diagnostic>& ds) {
    std::string s;
    for (const auto& d : ds) {
        if (!s.empty()) s += "; ";
        s += d.render();
    }
    return s;
}

}  // namespace finalg

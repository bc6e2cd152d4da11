#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace finalg {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// thrown when an enumeration or construction exceeds a size cap
struct CapError : Error {
    using Error::Error;
};

// one violated axiom with the elements that exhibit it
struct Diagnostic {
    std::string axiom;
    std::vector<int> witness;

    std::string render() const;
};

std::string render_diagnostics(const std::vector<Diagnostic>& ds);

}  // namespace finalg

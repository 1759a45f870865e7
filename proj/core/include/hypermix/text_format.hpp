#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "hypermix/hypergraph.hpp"

namespace hypermix {

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& what_)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what_), line(line_) {}
};

/// Text format: first non-comment line `n E`, then E lines each holding one
/// edge as a strictly increasing list of vertex indices. Lines starting with
/// `#` are comments and ignored anywhere.
Hypergraph parse_hypergraph(std::string_view text);

/// Canonical form: edges sorted lexicographically, single spaces, trailing
/// newline. parse/serialize round-trips through this form.
std::string serialize_hypergraph(const Hypergraph& h);

} // namespace hypermix

#include "hypermix/text_format.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace hypermix {

namespace {

bool is_comment_or_blank_header(const std::string& line) {
    for (char ch : line) {
        if (ch == '#') return true;
        if (!std::isspace(static_cast<unsigned char>(ch))) return false;
    }
    return true; // all whitespace
}

std::vector<long long> parse_ints(const std::string& line, int lineno) {
    std::vector<long long> out;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) {
        size_t pos = 0;
        long long v = 0;
        try {
            v = std::stoll(tok, &pos);
        } catch (const std::exception&) {
            throw ParseError(lineno, "expected an integer, got '" + tok + "'");
        }
        if (pos != tok.size())
            throw ParseError(lineno, "expected an integer, got '" + tok + "'");
        out.push_back(v);
    }
    return out;
}

} // namespace

Hypergraph parse_hypergraph(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;

    long long n = -1, edge_count = -1;
    int header_line = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (is_comment_or_blank_header(line)) continue;
        auto vals = parse_ints(line, lineno);
        if (vals.size() != 2)
            throw ParseError(lineno, "header must be 'n E'");
        n = vals[0];
        edge_count = vals[1];
        header_line = lineno;
        break;
    }
    if (n < 0 || edge_count < 0) {
        if (header_line == 0) throw ParseError(lineno == 0 ? 1 : lineno, "missing 'n E' header");
        throw ParseError(header_line, "n and E must be non-negative");
    }

    std::vector<std::vector<int>> edges;
    edges.reserve(static_cast<size_t>(edge_count));
    while (std::getline(in, line) && static_cast<long long>(edges.size()) < edge_count) {
        ++lineno;
        bool comment = false;
        for (char ch : line) {
            if (ch == '#') { comment = true; break; }
            if (!std::isspace(static_cast<unsigned char>(ch))) break;
        }
        if (comment) continue;
        auto vals = parse_ints(line, lineno);
        if (vals.empty()) throw ParseError(lineno, "empty edge");
        std::vector<int> edge;
        edge.reserve(vals.size());
        long long prev = -1;
        for (long long v : vals) {
            if (v < 0 || v >= n)
                throw ParseError(lineno, "vertex index " + std::to_string(v) +
                                             " out of range [0, " + std::to_string(n) + ")");
            if (v <= prev)
                throw ParseError(lineno, "edge vertices must be strictly increasing");
            prev = v;
            edge.push_back(static_cast<int>(v));
        }
        edges.push_back(std::move(edge));
    }
    if (static_cast<long long>(edges.size()) != edge_count)
        throw ParseError(lineno, "expected " + std::to_string(edge_count) + " edges, found " +
                                     std::to_string(edges.size()));

    return Hypergraph(static_cast<int>(n), std::move(edges));
}

std::string serialize_hypergraph(const Hypergraph& h) {
    std::vector<std::vector<int>> edges = h.edges();
    std::sort(edges.begin(), edges.end());

    std::ostringstream out;
    out << h.vertex_count() << ' ' << edges.size() << '\n';
    for (const auto& e : edges) {
        for (size_t i = 0; i < e.size(); ++i) {
            if (i) out << ' ';
            out << e[i];
        }
        out << '\n';
    }
    return out.str();
}

} // namespace hypermix

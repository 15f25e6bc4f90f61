#pragma once

#include "stw/group.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace stw {

// Explicit Cayley-table document:
//   order N
//   N lines of N space-separated 0-based indices
//   labels            (optional section: N whitespace-separated names)
inline FiniteGroup parse_group_file(std::istream& in) {
    std::string word;
    if (!(in >> word) || word != "order") throw std::invalid_argument("group file: expected 'order N'");
    int n = 0;
    if (!(in >> n) || n < 1 || n > 512) throw std::invalid_argument("group file: bad order");
    std::vector<int> table((size_t)n * n);
    for (auto& v : table)
        if (!(in >> v)) throw std::invalid_argument("group file: truncated table");
    FiniteGroup g(std::move(table), "file");
    if (in >> word) {
        if (word != "labels") throw std::invalid_argument("group file: unexpected section '" + word + "'");
        g.labels.resize(n);
        for (auto& s : g.labels)
            if (!(in >> s)) throw std::invalid_argument("group file: truncated labels");
    }
    return g;
}

// Group spec grammar: "name:params" for catalog entries or "@path" for an
// explicit Cayley-table file.
inline FiniteGroup parse_group_spec(const std::string& spec) {
    if (!spec.empty() && spec[0] == '@') {
        std::ifstream in(spec.substr(1));
        if (!in) throw std::invalid_argument("group spec: cannot open file " + spec.substr(1));
        return parse_group_file(in);
    }
    std::string name = spec;
    std::vector<int> params;
    auto colon = spec.find(':');
    if (colon != std::string::npos) {
        name = spec.substr(0, colon);
        std::stringstream ss(spec.substr(colon + 1));
        std::string tok;
        while (std::getline(ss, tok, ','))
            params.push_back(std::stoi(tok));
    }
    return build_catalog(name, params);
}

} // namespace stw

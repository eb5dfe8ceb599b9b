#include "lt/io.hpp"

#include <fstream>
#include <sstream>

namespace lt {

json to_json(const FinSet& s) {
    json a = json::array();
    for (auto& x : s.elems()) a.push_back(x.str());
    return a;
}

static Nat nat_from_json(const json& v) {
    if (v.is_string()) return parse_nat(v.get<std::string>());
    if (v.is_number_unsigned()) return Nat(v.get<std::uint64_t>());
    if (v.is_number_integer() && v.get<std::int64_t>() >= 0) return Nat(v.get<std::int64_t>());
    throw DomainError("expected a natural number, got " + v.dump());
}

FinSet finset_from_json(const json& j, Nat floor) {
    if (!j.is_array()) throw DomainError("a set must be a JSON array");
    std::vector<Nat> v;
    for (auto& e : j) v.push_back(nat_from_json(e));
    return FinSet(std::move(v), std::move(floor));
}

FinSet parse_finset_text(const std::string& text, Nat floor) {
    std::size_t p = text.find_first_not_of(" \t\r\n");
    if (p != std::string::npos && text[p] == '[') {
        json j;
        try {
            j = json::parse(text);
        } catch (const json::parse_error& e) {
            throw DomainError(std::string("malformed JSON set: ") + e.what());
        }
        return finset_from_json(j, std::move(floor));
    }
    std::vector<Nat> v;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto a = line.find_first_not_of(" \t\r");
        if (a == std::string::npos || line[a] == '#') continue;
        auto b = line.find_last_not_of(" \t\r");
        std::string tok = line.substr(a, b - a + 1);
        try {
            v.push_back(parse_nat(tok));
        } catch (const DomainError&) {
            throw DomainError("line " + std::to_string(lineno) + ": not a decimal numeral: '" + tok + "'");
        }
    }
    return FinSet(std::move(v), std::move(floor));
}

std::string finset_to_text(const FinSet& s) {
    std::string r;
    for (auto& x : s.elems()) r += x.str() + "\n";
    return r;
}

std::string finset_brief(const FinSet& s) {
    std::string r = "{";
    std::size_t n = s.size();
    for (std::size_t i = 0; i < n; ++i) {
        // runs of consecutive values print as a..b
        std::size_t j = i;
        while (j + 1 < n && s[j + 1] == s[j] + 1) ++j;
        if (i) r += ",";
        if (j >= i + 2) {
            r += s[i].str() + ".." + s[j].str();
            i = j;
        } else {
            r += s[i].str();
        }
    }
    return r + "}";
}

json to_json(const ColoringTable& f) {
    return json{{"domain", to_json(f.domain())},
                {"arity", f.arity()},
                {"colors", f.colors()},
                {"table", f.table()}};
}

ColoringTable coloring_from_json(const json& j) {
    if (!j.is_object()) throw DomainError("a coloring must be a JSON object");
    for (const char* k : {"domain", "arity", "colors", "table"})
        if (!j.contains(k)) throw DomainError(std::string("coloring is missing field '") + k + "'");
    FinSet d = finset_from_json(j["domain"], 0);
    return ColoringTable(d, j["arity"].get<unsigned>(), j["colors"].get<unsigned>(),
                         j["table"].get<std::vector<unsigned>>());
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DomainError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& data) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DomainError("cannot write " + path);
    out << data;
}

}  // namespace lt

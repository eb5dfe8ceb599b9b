#pragma once

#include "lt/core.hpp"

#include <json.hpp>

#include <string>

namespace lt {

using json = nlohmann::json;

json to_json(const FinSet& s);
FinSet finset_from_json(const json& j, Nat floor = 3);
// one numeral per line, or a JSON array; '#' starts a comment line
FinSet parse_finset_text(const std::string& text, Nat floor = 3);
std::string finset_to_text(const FinSet& s);
std::string finset_brief(const FinSet& s);

json to_json(const ColoringTable& f);
ColoringTable coloring_from_json(const json& j);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& data);

}  // namespace lt

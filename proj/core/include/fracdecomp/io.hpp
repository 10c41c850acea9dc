#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "fracdecomp/hypergraph.hpp"

namespace fracdecomp {

// Text format: header "n k", then one edge per line as space-separated ids.
// Blank lines are ignored. Errors carry the 1-based line number.
Hypergraph load_text(std::string_view text);
std::string save_text(const Hypergraph& g);

nlohmann::json to_json(const Hypergraph& g);
Hypergraph hypergraph_from_json(const nlohmann::json& j);

std::string read_file(const std::filesystem::path& p);
void write_file(const std::filesystem::path& p, std::string_view contents);

Hypergraph load_file(const std::filesystem::path& p);

}  // namespace fracdecomp

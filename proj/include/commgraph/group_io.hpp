#pragma once

#include <filesystem>

#include <nlohmann/json.hpp>

#include "commgraph/group.hpp"

namespace commgraph::grp {

/// Group file formats:
///   {"type":"permutation","degree":n,"generators":[[images...], ...]}
///   {"type":"matrix","field":{"p":..,"k":..,"modulus":[..]},"dim":d,"aut_order":k,
///    "generators":[{"twist":i,"matrix":[[entry,...],...]}, ...]}
/// Matrix entries are integers (prime subfield) or length-k coefficient
/// lists, low degree first. Malformed input throws Error(Parse).
GroupPtr group_from_json(const nlohmann::json& j, std::size_t cap = kDefaultElementCap);
GroupPtr load_group_file(const std::filesystem::path& path, std::size_t cap = kDefaultElementCap);
nlohmann::json group_to_json(const GroupHandle& g);

}  // namespace commgraph::grp

#pragma once

#include <string>

#include <json.hpp>

#include "ssuf/discrepancy.hpp"
#include "ssuf/instance.hpp"
#include "ssuf/path_decomposition.hpp"
#include "ssuf/solver.hpp"

namespace ssuf {

using Json = nlohmann::ordered_json;

/// Rationals travel as "p/q" strings; integers and decimal strings are accepted on input.
Rational rational_from_json(const Json& value);
Json rational_to_json(const Rational& q);

/// Throws InputError on malformed documents (the instance itself is not validated).
PssufInstance instance_from_json(const Json& doc);
Json instance_to_json(const PssufInstance& instance);

Json solution_to_json(const UnsplittableFlow& solution);
UnsplittableFlow solution_from_json(const Json& doc);

Json decomposition_to_json(const ArcSplitDecomposition& decomposition);

/// {"l", "sets", "d", "y", "c"?}; indices are 0-based.
WpcsInstance wpcs_from_json(const Json& doc);
std::optional<std::vector<Rational>> wpcs_costs_from_json(const Json& doc);
Json wpcs_to_json(const WpcsInstance& wpcs, const std::optional<std::vector<Rational>>& costs = std::nullopt);

/// Reads a file, or stdin for "-". Throws InputError on missing files or bad JSON.
Json read_json(const std::string& path);
void write_json(const std::string& path, const Json& doc);

}  // namespace ssuf

#pragma once

#include <iosfwd>
#include <string>
#include <variant>

#include <json.hpp>

#include "dsneg/belief_structure.hpp"
#include "dsneg/probability.hpp"

namespace dsneg {

/// A parsed input document: a belief structure ("masses") or a probability
/// distribution ("probs") over a frame. Exactly one of the two keys may be
/// present.
///
/// Structure documents:     {"frame": ["a","b","c"],
///                           "masses": [{"set": ["a"], "mass": 0.7}, ...]}
/// Distribution documents:  {"frame": ["a","b","c"], "probs": [0.7, 0.1, 0.2]}
using Document = std::variant<BeliefStructure, ProbabilityDistribution>;

/// Throws SchemaError for shape problems and ValidationError when the
/// values violate a domain invariant.
Document document_from_json(const nlohmann::json& j);

Document load_document(std::istream& in);

/// Reads a file, or standard input when the path is "-".
Document load_document(const std::string& path);

nlohmann::json to_json(const BeliefStructure& m);
nlohmann::json to_json(const ProbabilityDistribution& p);

/// Reals are serialized as decimals with 12 significant digits.
double round_for_output(double x);

}  // namespace dsneg

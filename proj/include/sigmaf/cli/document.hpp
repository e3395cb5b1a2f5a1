#ifndef SIGMAF_CLI_DOCUMENT_HPP_
#define SIGMAF_CLI_DOCUMENT_HPP_

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "sigmaf/core_sets.hpp"
#include "sigmaf/independence.hpp"

namespace sigmaf::cli {

using Json = nlohmann::ordered_json;

/// Malformed input document. The message carries the offending field path
/// (e.g. `sets.A1[2]`) or the JSON line/column.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parsed input file:
///
///   { "universe": ["5", "6", ...],
///     "sets": { "A1": ["8", "10"], ... },
///     "probabilities": { "5": "1/16", ... },   // optional
///     "events": ["A", "B", "C"] }              // optional
///
/// Sets keep file order; that order fixes A1..An for partitions and reports.
struct InputDocument {
  UniversePtr universe;
  std::vector<NamedSet> sets;
  std::optional<std::vector<Rational>> probabilities;  // aligned with universe order
  std::vector<std::string> events;

  const NamedSet* find(std::string_view name) const;
  std::vector<std::string> set_names() const;
};

InputDocument parse_document(std::string_view text);
InputDocument load_document(const std::filesystem::path& path);

/// Canonical form: fixed key order, set members and probabilities in
/// universe order, rationals in lowest terms.
Json serialize(const InputDocument& doc);

/// The generating class formed by the named sets (all sets, in file order,
/// when `names` is empty). Throws ParseError for unknown names and
/// InvalidInput when the class invariants fail.
GeneratingClass generating_class(const InputDocument& doc, const std::vector<std::string>& names = {});

/// Throws ParseError when the document has no probabilities.
ProbabilitySpace probability_space(const InputDocument& doc);

}  // namespace sigmaf::cli

#endif  // SIGMAF_CLI_DOCUMENT_HPP_

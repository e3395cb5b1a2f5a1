#ifndef SIGMAF_CLI_REPORT_JSON_HPP_
#define SIGMAF_CLI_REPORT_JSON_HPP_

// Machine-readable forms of the library reports. Field names follow the
// report structs; member indices and index families are written 1-based.
// The *_from_json functions invert to_json exactly.

#include "sigmaf/cardinality.hpp"
#include "sigmaf/cli/document.hpp"
#include "sigmaf/enumerate.hpp"
#include "sigmaf/independence.hpp"
#include "sigmaf/partition.hpp"
#include "sigmaf/sigma_field.hpp"

namespace sigmaf::cli {

Json to_json(const IndexSet& s);
IndexSet index_set_from_json(const Json& j);

Json to_json(const SetMask& m, const Universe& u);
SetMask set_from_json(const Json& j, const Universe& u);

Json to_json(const Partition& p);
Partition partition_from_json(const Json& j, const UniversePtr& universe);

Json to_json(const SigmaField& f, bool list_members);
Json to_json(const GenerationReport& r);
Json to_json(const ExtensionReport& r, bool list_members);
Json to_json(const SigmaDistinctReport& r);
Json to_json(const AtomReport& r);

Json to_json(const CardinalityReport& r);
CardinalityReport cardinality_from_json(const Json& j);

Json to_json(const CaseClassification& c);
CaseClassification classification_from_json(const Json& j);

Json to_json(const EnumerationHistogram& h);
EnumerationHistogram histogram_from_json(const Json& j);

Json to_json(const IndependenceVerdict& v);
IndependenceVerdict verdict_from_json(const Json& j);

Json to_json(const CellIndependenceReport& r);
CellIndependenceReport cell_report_from_json(const Json& j);

Json to_json(const UnionIntersectionIdentity& id);

}  // namespace sigmaf::cli

#endif  // SIGMAF_CLI_REPORT_JSON_HPP_

#pragma once

// File formats: distribution specs ({"masses": [[value, probability], ...]}),
// degree sequences (one integer per line, or a JSON array), edge lists
// ("u v" per line, loops as "v v", optional "# vertices N" header) and
// census summaries.

#include <filesystem>
#include <iosfwd>
#include <string>

#include <json.hpp>

#include "cmlab/census.hpp"
#include "cmlab/configuration.hpp"
#include "cmlab/distribution.hpp"

namespace cmlab {

using Json = nlohmann::ordered_json;

/// Throws Error(SpecParse) on malformed documents; invalid masses surface
/// as Error(InvalidDistribution).
Distribution distribution_from_json(const Json& doc);
Distribution read_distribution(const std::filesystem::path& path);
Json to_json(const Distribution& d);

/// Accepts either format; JSON when the first non-blank character is '['.
DegreeSequence read_degree_sequence(std::istream& in);
void write_degree_sequence(std::ostream& out, const DegreeSequence& ds, bool as_json = false);

MultiGraph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const MultiGraph& g);

/// {"sizes": [...], "N_k": {"k": count, ...}, "L1": .., "L2": ..}
Json census_to_json(const ComponentCensus& census);

}  // namespace cmlab

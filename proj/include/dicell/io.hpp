#pragma once

#include "dicell/chain.hpp"
#include "dicell/digraph.hpp"
#include "dicell/path_complex.hpp"

#include <string>

namespace dicell {

/// Parses either the edge-list text format (optional `digraph <name>` header,
/// `#` comments, `a -> b` edges, bare vertex declarations) or the JSON object
/// form with "name", "vertices", "edges". Duplicate edges are tolerated.
digraph parse_digraph(const std::string& input);

std::string serialize_digraph_text(const digraph& g);
std::string serialize_digraph_json(const digraph& g);
std::string to_dot(const digraph& g);

std::string report_to_json(const homology_report& rep, const digraph& g);
std::string report_to_text(const homology_report& rep, const digraph& g);

}  // namespace dicell

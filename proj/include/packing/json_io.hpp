#pragma once

#include <string>

#include "json.hpp"
#include "packing/bipartition.hpp"
#include "packing/colorer.hpp"
#include "packing/verifier.hpp"

namespace packing {

/// {"n": ..., "sequence": [...], "classes": [[...], ...]} with class
/// arrays sorted ascending. Serialization is byte-stable.
nlohmann::ordered_json coloring_to_json(const Coloring& c);
std::string coloring_to_string(const Coloring& c); // dump + trailing newline

/// Validates shape, class count, disjointness and coverage; throws
/// ParseError otherwise.
Coloring coloring_from_json(const nlohmann::json& j);
Coloring coloring_from_string(const std::string& text);

/// One line per applied move:
/// {"kind", "vertices", "cut_before", "cut_after", "e1_before", "e1_after"}.
std::string trace_to_jsonl(const RepairTrace& t);

nlohmann::ordered_json verdict_to_json(const Verdict& v);

nlohmann::ordered_json graph_to_json(const Graph& g);

/// Dump used by failure certificates and invariant reports: graph, sides,
/// transversal, violation and the trace so far.
std::string state_dump(const Graph& g, const Bipartition& b, const TSet& t,
                       const TViolation& violation, const RepairTrace& trace);

} // namespace packing

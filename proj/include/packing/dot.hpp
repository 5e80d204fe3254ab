#pragma once

#include <iosfwd>

#include "packing/bipartition.hpp"
#include "packing/colorer.hpp"
#include "packing/graph.hpp"

namespace packing {

/// Graphviz export for figures: vertices are filled by class when a
/// coloring is given, drawn as boxes (X) and ellipses (Y) when sides are
/// given, and same-side matching edges are dashed when the structure is
/// given. Purely cosmetic, no guarantees.
void write_dot(std::ostream& out, const Graph& g,
               const Coloring* coloring = nullptr,
               const Bipartition* bipartition = nullptr,
               const SameSideStructure* structure = nullptr);

} // namespace packing

#include "packing/dot.hpp"

#include <algorithm>
#include <ostream>

namespace packing {

namespace {

const char* kClassFill[] = {"white",   "#a6cee3", "#b2df8a", "#fb9a99",
                            "#fdbf6f", "#cab2d6", "#ffff99"};

} // namespace

void write_dot(std::ostream& out, const Graph& g, const Coloring* coloring,
               const Bipartition* bipartition, const SameSideStructure* structure)
{
    out << "graph {\n";
    out << "  node [style=filled, fillcolor=white];\n";
    for (int v = 0; v < g.vertex_count(); ++v) {
        out << "  " << v << " [";
        bool first = true;
        auto attr = [&](const std::string& text) {
            if (!first)
                out << ", ";
            out << text;
            first = false;
        };
        if (coloring && v < static_cast<int>(coloring->assignment.size())) {
            int a = coloring->assignment[static_cast<size_t>(v)];
            size_t fills = sizeof(kClassFill) / sizeof(kClassFill[0]);
            if (a >= 1 && static_cast<size_t>(a) < fills)
                attr(std::string("fillcolor=\"") + kClassFill[a] + "\"");
            attr("label=\"" + std::to_string(v) + "/" + std::to_string(a) + "\"");
        }
        if (bipartition && v < static_cast<int>(bipartition->side.size()))
            attr(bipartition->side[static_cast<size_t>(v)] == Side::X
                     ? std::string("shape=box")
                     : std::string("shape=ellipse"));
        if (first)
            attr("label=\"" + std::to_string(v) + "\"");
        out << "];\n";
    }
    for (const Edge& e : g.edges()) {
        out << "  " << e.first << " -- " << e.second;
        if (structure) {
            bool same = std::binary_search(structure->e_x.begin(), structure->e_x.end(), e)
                        || std::binary_search(structure->e_y.begin(), structure->e_y.end(), e);
            if (same)
                out << " [style=dashed]";
        }
        out << ";\n";
    }
    out << "}\n";
}

} // namespace packing

#include "packing/json_io.hpp"

#include <algorithm>

#include "packing/errors.hpp"

namespace packing {

using nlohmann::json;
using nlohmann::ordered_json;

ordered_json coloring_to_json(const Coloring& c)
{
    const int n = static_cast<int>(c.assignment.size());
    std::vector<std::vector<int>> classes(static_cast<size_t>(c.sequence.size()));
    for (int v = 0; v < n; ++v) {
        int a = c.assignment[static_cast<size_t>(v)];
        if (a < 1 || a > c.sequence.size())
            throw std::invalid_argument("class index out of range");
        classes[static_cast<size_t>(a - 1)].push_back(v);
    }
    ordered_json j;
    j["n"] = n;
    j["sequence"] = c.sequence.values();
    j["classes"] = classes;
    return j;
}

std::string coloring_to_string(const Coloring& c)
{
    return coloring_to_json(c).dump() + "\n";
}

Coloring coloring_from_json(const json& j)
{
    if (!j.is_object() || !j.contains("n") || !j.contains("sequence") || !j.contains("classes"))
        throw ParseError("coloring: expected object with n, sequence, classes");
    if (!j["n"].is_number_integer() || j["n"].get<int>() < 0)
        throw ParseError("coloring: n must be a non-negative integer");
    const int n = j["n"].get<int>();
    if (!j["sequence"].is_array() || !j["classes"].is_array())
        throw ParseError("coloring: sequence and classes must be arrays");
    std::vector<int> values;
    for (const auto& x : j["sequence"]) {
        if (!x.is_number_integer())
            throw ParseError("coloring: sequence entries must be integers");
        values.push_back(x.get<int>());
    }
    std::optional<PackingSequence> sequence;
    try {
        sequence.emplace(values);
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("coloring: ") + e.what());
    }
    if (static_cast<int>(j["classes"].size()) != sequence->size())
        throw ParseError("coloring: class count does not match sequence length");
    std::vector<int> assignment(static_cast<size_t>(n), 0);
    int seen = 0;
    int index = 0;
    for (const auto& cls : j["classes"]) {
        ++index;
        if (!cls.is_array())
            throw ParseError("coloring: each class must be an array");
        for (const auto& x : cls) {
            if (!x.is_number_integer())
                throw ParseError("coloring: vertex ids must be integers");
            int v = x.get<int>();
            if (v < 0 || v >= n)
                throw ParseError("coloring: vertex id out of range");
            if (assignment[static_cast<size_t>(v)] != 0)
                throw ParseError("coloring: vertex assigned twice");
            assignment[static_cast<size_t>(v)] = index;
            ++seen;
        }
    }
    if (seen != n)
        throw ParseError("coloring: classes do not cover every vertex");
    return Coloring{std::move(assignment), std::move(*sequence)};
}

Coloring coloring_from_string(const std::string& text)
{
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded())
        throw ParseError("coloring: invalid JSON");
    return coloring_from_json(j);
}

namespace {

ordered_json record_to_json(const MoveRecord& r)
{
    ordered_json j;
    j["kind"] = r.move.kind_name();
    j["vertices"] = r.move.participants();
    j["cut_before"] = r.before.cut;
    j["cut_after"] = r.after.cut;
    j["e1_before"] = r.before.e1;
    j["e1_after"] = r.after.e1;
    return j;
}

} // namespace

std::string trace_to_jsonl(const RepairTrace& t)
{
    std::string out;
    for (const MoveRecord& r : t.records) {
        out += record_to_json(r).dump();
        out += "\n";
    }
    return out;
}

ordered_json verdict_to_json(const Verdict& v)
{
    ordered_json j;
    j["valid"] = v.valid;
    if (v.violation) {
        ordered_json w;
        w["class"] = v.violation->class_index;
        w["u"] = v.violation->u;
        w["v"] = v.violation->v;
        w["distance"] = v.violation->distance;
        j["violation"] = w;
    }
    return j;
}

ordered_json graph_to_json(const Graph& g)
{
    ordered_json j;
    j["n"] = g.vertex_count();
    j["m"] = g.edge_count();
    j["edges"] = g.edges();
    return j;
}

std::string state_dump(const Graph& g, const Bipartition& b, const TSet& t,
                       const TViolation& violation, const RepairTrace& trace)
{
    ordered_json j;
    j["graph"] = graph_to_json(g);
    std::string sides;
    sides.reserve(b.side.size());
    for (Side s : b.side)
        sides.push_back(s == Side::X ? 'X' : 'Y');
    j["sides"] = sides;
    j["cut"] = b.cut_size;
    j["e1"] = b.e1_count;
    j["transversal"] = t.members;
    ordered_json w;
    w["u"] = violation.u;
    w["v"] = violation.v;
    w["distance"] = violation.dist;
    j["violation"] = w;
    ordered_json moves = ordered_json::array();
    for (const MoveRecord& r : trace.records)
        moves.push_back(record_to_json(r));
    j["trace"] = moves;
    return j.dump(2) + "\n";
}

} // namespace packing

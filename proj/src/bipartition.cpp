#include "packing/bipartition.hpp"

#include <algorithm>
#include <numeric>

#include "packing/rng.hpp"

namespace packing {

Move Move::flip(int v)
{
    return {MoveKind::flip, {v, -1, -1, -1}};
}

Move Move::pair_swap(int x, int y)
{
    return {MoveKind::pair_swap, {x, y, -1, -1}};
}

Move Move::triple_exchange(int y, int x1, int x2)
{
    return {MoveKind::triple_exchange, {y, x1, x2, -1}};
}

Move Move::rewire_swap(int u, int v, int y, int y1)
{
    return {MoveKind::rewire_swap, {u, v, y, y1}};
}

Move Move::composite_flip_then_triple(int v, int y, int x1, int x2)
{
    return {MoveKind::composite_flip_then_triple, {v, y, x1, x2}};
}

int Move::arity() const
{
    switch (kind) {
    case MoveKind::flip:
        return 1;
    case MoveKind::pair_swap:
        return 2;
    case MoveKind::triple_exchange:
        return 3;
    case MoveKind::rewire_swap:
    case MoveKind::composite_flip_then_triple:
        return 4;
    }
    return 0;
}

std::span<const int> Move::participants() const
{
    return {verts.data(), static_cast<size_t>(arity())};
}

std::span<const int> Move::toggled() const
{
    // rewire_swap records y1 for the trace but does not move it
    int moved = kind == MoveKind::rewire_swap ? 3 : arity();
    return {verts.data(), static_cast<size_t>(moved)};
}

std::string_view Move::kind_name() const
{
    switch (kind) {
    case MoveKind::flip:
        return "flip";
    case MoveKind::pair_swap:
        return "pair_swap";
    case MoveKind::triple_exchange:
        return "triple_exchange";
    case MoveKind::rewire_swap:
        return "rewire_swap";
    case MoveKind::composite_flip_then_triple:
        return "composite_flip_then_triple";
    }
    return "?";
}

bool SameSideStructure::is_bad(int v) const
{
    return std::binary_search(bad.begin(), bad.end(), v);
}

namespace {

bool edge_has_degree2_end(const Graph& g, int u, int v)
{
    return g.degree(u) == 2 || g.degree(v) == 2;
}

struct Delta {
    int cut = 0;
    int e1 = 0;
};

/// Exact potential change of toggling the given vertex set. Only edges
/// with exactly one endpoint in the set change their cross/same status;
/// edges inside the set keep it because both ends move together.
Delta toggle_delta(const Graph& g, const Bipartition& b, std::span<const int> toggled)
{
    Delta d;
    auto in_set = [&](int w) {
        return std::find(toggled.begin(), toggled.end(), w) != toggled.end();
    };
    for (int s : toggled) {
        for (int w : g.neighbors(s)) {
            if (in_set(w))
                continue;
            const int e1_bit = edge_has_degree2_end(g, s, w) ? 1 : 0;
            if (b.side[static_cast<size_t>(s)] == b.side[static_cast<size_t>(w)]) {
                d.cut += 1;
                d.e1 -= e1_bit;
            } else {
                d.cut -= 1;
                d.e1 += e1_bit;
            }
        }
    }
    return d;
}

std::pair<int, int> recount(const Graph& g, const std::vector<Side>& side)
{
    int cut = 0, e1 = 0;
    for (const Edge& e : g.edges()) {
        if (side[static_cast<size_t>(e.first)] != side[static_cast<size_t>(e.second)])
            ++cut;
        else if (edge_has_degree2_end(g, e.first, e.second))
            ++e1;
    }
    return {cut, e1};
}

std::vector<char> bad_flags(const Graph& g, const Bipartition& b)
{
    std::vector<char> bad(static_cast<size_t>(g.vertex_count()), 0);
    for (int v = 0; v < g.vertex_count(); ++v)
        for (int w : g.neighbors(v))
            if (b.side[static_cast<size_t>(v)] == b.side[static_cast<size_t>(w)]) {
                bad[static_cast<size_t>(v)] = 1;
                break;
            }
    return bad;
}

[[noreturn]] void stale(const char* what)
{
    throw InvariantError(std::string("stale move: ") + what);
}

void validate_move(const Graph& g, const Bipartition& b, const Move& m)
{
    auto parts = m.participants();
    for (int v : parts)
        if (v < 0 || v >= g.vertex_count())
            stale("vertex id out of range");
    for (size_t i = 0; i < parts.size(); ++i)
        for (size_t j = i + 1; j < parts.size(); ++j)
            if (parts[i] == parts[j])
                stale("participants not distinct");

    auto side = [&](int v) { return b.side[static_cast<size_t>(v)]; };
    switch (m.kind) {
    case MoveKind::flip:
        break;
    case MoveKind::pair_swap: {
        int x = m.verts[0], y = m.verts[1];
        if (!g.has_edge(x, y))
            stale("pair_swap endpoints not adjacent");
        if (side(x) == side(y))
            stale("pair_swap endpoints on one side");
        break;
    }
    case MoveKind::triple_exchange: {
        int y = m.verts[0], x1 = m.verts[1], x2 = m.verts[2];
        if (!g.has_edge(y, x1) || !g.has_edge(y, x2))
            stale("triple_exchange needs a common neighbor");
        if (g.has_edge(x1, x2))
            stale("triple_exchange pair adjacent");
        if (side(x1) != side(x2) || side(x1) == side(y))
            stale("triple_exchange sides wrong");
        break;
    }
    case MoveKind::rewire_swap: {
        int u = m.verts[0], v = m.verts[1], y = m.verts[2], y1 = m.verts[3];
        if (!g.has_edge(u, y) || !g.has_edge(v, y))
            stale("rewire_swap needs a common neighbor");
        if (g.has_edge(u, v))
            stale("rewire_swap pair adjacent");
        if (side(u) != side(v) || side(u) == side(y))
            stale("rewire_swap sides wrong");
        if (!g.has_edge(u, y1))
            stale("rewire_swap private neighbor not adjacent");
        break;
    }
    case MoveKind::composite_flip_then_triple: {
        int v = m.verts[0], y = m.verts[1], x1 = m.verts[2], x2 = m.verts[3];
        if (!g.has_edge(x1, y) || !g.has_edge(y, x2) || !g.has_edge(x2, v))
            stale("composite path missing an edge");
        if (g.has_edge(x1, x2))
            stale("composite pair adjacent");
        if (side(v) != side(y) || side(x1) != side(x2) || side(x1) == side(y))
            stale("composite sides wrong");
        break;
    }
    }
}

} // namespace

Bipartition bipartition_from_sides(const Graph& g, std::vector<Side> side)
{
    if (static_cast<int>(side.size()) != g.vertex_count())
        throw std::invalid_argument("side vector size mismatch");
    Bipartition b;
    b.side = std::move(side);
    auto [cut, e1] = recount(g, b.side);
    b.cut_size = cut;
    b.e1_count = e1;
    return b;
}

Bipartition greedy_init(const Graph& g, uint64_t seed)
{
    const int n = g.vertex_count();
    std::vector<int> order(static_cast<size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    SplitMix64 rng(seed);
    shuffle(order, rng);

    std::vector<Side> side(static_cast<size_t>(n), Side::X);
    std::vector<char> placed(static_cast<size_t>(n), 0);
    for (int v : order) {
        int on_x = 0, on_y = 0;
        for (int w : g.neighbors(v)) {
            if (!placed[static_cast<size_t>(w)])
                continue;
            (side[static_cast<size_t>(w)] == Side::X ? on_x : on_y)++;
        }
        side[static_cast<size_t>(v)] = on_x <= on_y ? Side::X : Side::Y;
        placed[static_cast<size_t>(v)] = 1;
    }
    return bipartition_from_sides(g, std::move(side));
}

Potential audit(const Graph& g, const Bipartition& b)
{
    if (static_cast<int>(b.side.size()) != g.vertex_count())
        throw std::invalid_argument("side vector size mismatch");
    auto [cut, e1] = recount(g, b.side);
    if (cut != b.cut_size || e1 != b.e1_count)
        throw InvariantError("cache divergence");
    return {cut, e1};
}

SameSideStructure same_side_structure(const Graph& g, const Bipartition& b)
{
    if (static_cast<int>(b.side.size()) != g.vertex_count())
        throw std::invalid_argument("side vector size mismatch");
    SameSideStructure s;
    for (const Edge& e : g.edges()) {
        Side a = b.side[static_cast<size_t>(e.first)];
        if (a != b.side[static_cast<size_t>(e.second)])
            continue;
        (a == Side::X ? s.e_x : s.e_y).push_back(e);
        (edge_has_degree2_end(g, e.first, e.second) ? s.e1 : s.e2).push_back(e);
        s.bad.push_back(e.first);
        s.bad.push_back(e.second);
    }
    std::sort(s.bad.begin(), s.bad.end());
    s.bad.erase(std::unique(s.bad.begin(), s.bad.end()), s.bad.end());
    return s;
}

std::optional<Move> find_improving_move(const Graph& g, const Bipartition& b)
{
    const int n = g.vertex_count();
    auto side = [&](int v) { return b.side[static_cast<size_t>(v)]; };

    // flip: accepted when it raises the cut
    for (int v = 0; v < n; ++v) {
        int same = 0;
        for (int w : g.neighbors(v))
            if (side(w) == side(v))
                ++same;
        if (2 * same > g.degree(v)) // same - cross > 0
            return Move::flip(v);
    }

    const std::vector<char> bad = bad_flags(g, b);

    // pair_swap: adjacent cross pair of bad vertices, cut must rise
    for (int x = 0; x < n; ++x) {
        if (!bad[static_cast<size_t>(x)])
            continue;
        for (int y : g.neighbors(x)) {
            if (y < x || !bad[static_cast<size_t>(y)] || side(y) == side(x))
                continue;
            Move m = Move::pair_swap(x, y);
            if (toggle_delta(g, b, m.toggled()).cut > 0)
                return m;
        }
    }

    // Shared pattern for triple_exchange and rewire_swap: two non-adjacent
    // bad vertices x1 < x2 with a common neighbor y on the other side.
    auto scan_common_neighbor = [&](auto accept) -> std::optional<Move> {
        for (int y = 0; y < n; ++y) {
            std::vector<int> candidates;
            for (int w : g.neighbors(y))
                if (bad[static_cast<size_t>(w)] && side(w) != side(y))
                    candidates.push_back(w);
            for (size_t i = 0; i < candidates.size(); ++i)
                for (size_t j = i + 1; j < candidates.size(); ++j) {
                    int x1 = candidates[i], x2 = candidates[j];
                    if (g.has_edge(x1, x2))
                        continue;
                    if (auto m = accept(y, x1, x2))
                        return m;
                }
        }
        return std::nullopt;
    };

    if (auto m = scan_common_neighbor([&](int y, int x1, int x2) -> std::optional<Move> {
            Move cand = Move::triple_exchange(y, x1, x2);
            if (toggle_delta(g, b, cand.toggled()).cut > 0)
                return cand;
            return std::nullopt;
        }))
        return m;

    if (auto m = scan_common_neighbor([&](int y, int x1, int x2) -> std::optional<Move> {
            Delta d = toggle_delta(g, b, std::array{x1, x2, y});
            if (d.cut != 0 || d.e1 <= 0)
                return std::nullopt;
            // assign the pair role so that u owns a private cross
            // neighbor to record as y1
            auto private_neighbor = [&](int u) {
                for (int w : g.neighbors(u))
                    if (w != y && side(w) != side(u))
                        return w;
                return -1;
            };
            int u = x1, v = x2, y1 = private_neighbor(x1);
            if (y1 < 0) {
                u = x2;
                v = x1;
                y1 = private_neighbor(x2);
            }
            if (y1 < 0)
                return std::nullopt;
            return Move::rewire_swap(u, v, y, y1);
        }))
        return m;

    // composite_flip_then_triple: alternating path x1 - y - x2 - v with
    // bad ends x1 and v; the whole reassignment must improve the
    // potential even though the flip of v alone keeps the cut.
    for (int v = 0; v < n; ++v) {
        if (!bad[static_cast<size_t>(v)])
            continue;
        for (int x2 : g.neighbors(v)) {
            if (side(x2) == side(v))
                continue;
            for (int y : g.neighbors(x2)) {
                if (y == v || side(y) != side(v))
                    continue;
                for (int x1 : g.neighbors(y)) {
                    if (x1 == x2 || side(x1) != side(x2))
                        continue;
                    if (!bad[static_cast<size_t>(x1)] || g.has_edge(x1, x2))
                        continue;
                    Move cand = Move::composite_flip_then_triple(v, y, x1, x2);
                    Delta d = toggle_delta(g, b, cand.toggled());
                    if (d.cut > 0 || (d.cut == 0 && d.e1 > 0))
                        return cand;
                }
            }
        }
    }

    return std::nullopt;
}

void apply_move(const Graph& g, Bipartition& b, const Move& m)
{
    if (static_cast<int>(b.side.size()) != g.vertex_count())
        throw std::invalid_argument("side vector size mismatch");
    validate_move(g, b, m);
    Delta d = toggle_delta(g, b, m.toggled());
    for (int v : m.toggled())
        b.side[static_cast<size_t>(v)] = opposite(b.side[static_cast<size_t>(v)]);
    b.cut_size += d.cut;
    b.e1_count += d.e1;
    ++b.generation;
}

std::pair<Bipartition, RepairTrace> local_optimize(const Graph& g, Bipartition b)
{
    if (!is_subcubic(g))
        throw std::invalid_argument("not subcubic");
    RepairTrace trace;
    const long bound = static_cast<long>(g.edge_count())
        * static_cast<long>(g.edge_count() + 1);
    long applied = 0;
    while (auto m = find_improving_move(g, b)) {
        Potential before = b.potential();
        apply_move(g, b, *m);
        Potential after = b.potential();
        if (!(before < after))
            throw InvariantError("non-monotone move application");
        trace.records.push_back({*m, before, after});
        if (++applied > bound)
            throw InvariantError("iteration bound exceeded");
    }
    return {std::move(b), std::move(trace)};
}

void check_fixpoint(const Graph& g, const Bipartition& b,
                    const SameSideStructure& s, bool three_irregular_input)
{
    audit(g, b);
    for (int v = 0; v < g.vertex_count(); ++v) {
        int cross = 0;
        for (int w : g.neighbors(v))
            if (b.side[static_cast<size_t>(w)] != b.side[static_cast<size_t>(v)])
                ++cross;
        if (2 * cross < g.degree(v))
            throw InvariantError("fixpoint: cross degree below half the degree");
        if (g.degree(v) - cross > 1)
            throw InvariantError("fixpoint: same-side subgraph is not a matching");
    }
    for (int v : s.bad)
        if (g.degree(v) < 2)
            throw InvariantError("fixpoint: bad vertex of degree below two");
    for (const Edge& e : s.e2)
        if (g.degree(e.first) != 3 || g.degree(e.second) != 3)
            throw InvariantError("fixpoint: E2 edge without two degree-3 ends");
    if (static_cast<int>(s.e1.size()) != b.e1_count)
        throw InvariantError("fixpoint: E1 count diverges from the cache");
    if (three_irregular_input) {
        if (!s.e2.empty())
            throw InvariantError("fixpoint: E2 not empty");
        for (int v : s.bad)
            for (int w : g.neighbors(v))
                if (b.side[static_cast<size_t>(w)] != b.side[static_cast<size_t>(v)]
                    && s.is_bad(w))
                    throw InvariantError("fixpoint: cross edge joins two bad vertices");
    }
}

} // namespace packing

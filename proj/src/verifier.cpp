#include "packing/verifier.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace packing {

namespace {

/// Smallest distance between two distinct sources, found by a truncated
/// nearest-source BFS and one edge scan: on any shortest path between the
/// closest pair some edge joins two different source regions, and
/// dist(a) + dist(b) + 1 over such edges never undercuts the true value.
int closest_source_pair(const Graph& g, const std::vector<int>& sources, int cap)
{
    std::vector<int> dist(static_cast<size_t>(g.vertex_count()), kInfiniteDistance);
    std::vector<int> src(static_cast<size_t>(g.vertex_count()), -1);
    std::deque<int> queue;
    for (int s : sources) { // ascending, so ties keep the smaller source
        dist[static_cast<size_t>(s)] = 0;
        src[static_cast<size_t>(s)] = s;
        queue.push_back(s);
    }
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        if (dist[static_cast<size_t>(u)] >= cap)
            continue;
        for (int w : g.neighbors(u)) {
            if (dist[static_cast<size_t>(w)] == kInfiniteDistance) {
                dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(u)] + 1;
                src[static_cast<size_t>(w)] = src[static_cast<size_t>(u)];
                queue.push_back(w);
            }
        }
    }
    int best = kInfiniteDistance;
    for (const Edge& e : g.edges()) {
        int a = e.first, b = e.second;
        if (src[static_cast<size_t>(a)] < 0 || src[static_cast<size_t>(b)] < 0)
            continue;
        if (src[static_cast<size_t>(a)] == src[static_cast<size_t>(b)])
            continue;
        best = std::min(best, dist[static_cast<size_t>(a)] + dist[static_cast<size_t>(b)] + 1);
    }
    return best;
}

} // namespace

Verdict verify_coloring(const Graph& g, const PackingSequence& s, const Coloring& c)
{
    const int n = g.vertex_count();
    if (static_cast<int>(c.assignment.size()) != n)
        throw std::invalid_argument("coloring size mismatch");
    const int k = s.size();
    for (int v = 0; v < n; ++v) {
        int a = c.assignment[static_cast<size_t>(v)];
        if (a == 0)
            throw std::invalid_argument("partial coloring");
        if (a < 1 || a > k)
            throw std::invalid_argument("class index out of range");
    }

    for (int i = 1; i <= k; ++i) {
        std::vector<int> members;
        for (int v = 0; v < n; ++v)
            if (c.assignment[static_cast<size_t>(v)] == i)
                members.push_back(v);
        if (members.size() < 2)
            continue;
        const int s_i = s.at(i - 1);
        if (closest_source_pair(g, members, s_i) > s_i)
            continue;
        // some pair is too close; locate the lexicographically first one
        for (int u : members) {
            std::vector<int> dist = bfs_distances(g, u, s_i);
            int best = -1;
            for (int v : members) {
                if (v <= u)
                    continue;
                if (dist[static_cast<size_t>(v)] <= s_i && (best < 0 || v < best))
                    best = v;
            }
            if (best >= 0)
                return {false, Violation{i, u, best, dist[static_cast<size_t>(best)]}};
        }
        throw InvariantError("closest-pair scan and pair scan disagree");
    }
    return {true, std::nullopt};
}

namespace {

struct Searcher {
    const Graph& g;
    const PackingSequence& seq;
    uint64_t budget;
    uint64_t nodes = 0;
    std::vector<int> order;
    std::vector<int> assignment;
    std::vector<int> class_size;

    enum Result { found, exhausted, out_of_budget };

    Searcher(const Graph& graph, const PackingSequence& sequence, uint64_t node_budget)
        : g(graph), seq(sequence), budget(node_budget)
    {
        const int n = g.vertex_count();
        order.resize(static_cast<size_t>(n));
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            if (g.degree(a) != g.degree(b))
                return g.degree(a) > g.degree(b);
            return a < b;
        });
        assignment.assign(static_cast<size_t>(n), 0);
        class_size.assign(static_cast<size_t>(seq.size()), 0);
    }

    /// No already-placed member of class i within distance s_i of v.
    bool feasible(int v, int i)
    {
        const int s_i = seq.at(i);
        std::vector<int> dist = bfs_distances(g, v, s_i);
        for (int w = 0; w < g.vertex_count(); ++w)
            if (assignment[static_cast<size_t>(w)] == i + 1
                && dist[static_cast<size_t>(w)] <= s_i)
                return false;
        return true;
    }

    Result run(size_t pos)
    {
        if (pos == order.size())
            return found;
        const int v = order[pos];
        for (int i = 0; i < seq.size(); ++i) {
            if (class_size[static_cast<size_t>(i)] == 0) {
                // classes of equal threshold are interchangeable while
                // empty; only the lowest-indexed one is tried
                bool shadowed = false;
                for (int j = 0; j < i; ++j)
                    if (seq.at(j) == seq.at(i) && class_size[static_cast<size_t>(j)] == 0) {
                        shadowed = true;
                        break;
                    }
                if (shadowed)
                    continue;
            }
            if (++nodes > budget)
                return out_of_budget;
            if (!feasible(v, i))
                continue;
            assignment[static_cast<size_t>(v)] = i + 1;
            ++class_size[static_cast<size_t>(i)];
            Result r = run(pos + 1);
            if (r != exhausted)
                return r;
            assignment[static_cast<size_t>(v)] = 0;
            --class_size[static_cast<size_t>(i)];
        }
        return exhausted;
    }
};

} // namespace

ExactResult exact_colorable(const Graph& g, const PackingSequence& s, uint64_t budget)
{
    Searcher search(g, s, budget);
    Searcher::Result r = search.run(0);
    ExactResult result;
    result.nodes = search.nodes;
    switch (r) {
    case Searcher::found: {
        result.status = SearchStatus::yes;
        Coloring witness{std::move(search.assignment), s};
        if (!verify_coloring(g, s, witness).valid)
            throw InvariantError("oracle witness failed verification");
        result.witness = std::move(witness);
        break;
    }
    case Searcher::exhausted:
        result.status = SearchStatus::no;
        break;
    case Searcher::out_of_budget:
        result.status = SearchStatus::budget_exceeded;
        break;
    }
    return result;
}

MinPackingResult min_packing_k(const Graph& g, int k_max, uint64_t budget)
{
    if (k_max < 1)
        throw std::invalid_argument("k_max must be positive");
    for (int k = 1; k <= k_max; ++k) {
        std::vector<int> values(static_cast<size_t>(k));
        std::iota(values.begin(), values.end(), 1);
        ExactResult r = exact_colorable(g, PackingSequence(values), budget);
        if (r.status == SearchStatus::budget_exceeded)
            return {SearchStatus::budget_exceeded, k, std::nullopt};
        if (r.status == SearchStatus::yes)
            return {SearchStatus::yes, k, std::move(r.witness)};
    }
    return {SearchStatus::no, k_max, std::nullopt};
}

} // namespace packing

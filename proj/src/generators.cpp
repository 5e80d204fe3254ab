#include "packing/generators.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "packing/errors.hpp"
#include "packing/rng.hpp"

namespace packing {

Graph gen_random_subcubic(int n, uint64_t seed)
{
    if (n < 0)
        throw std::invalid_argument("vertex count must be non-negative");
    SplitMix64 rng(seed);
    std::vector<std::vector<int>> adj(static_cast<size_t>(n));
    std::set<Edge> chosen;
    const int proposals = 3 * n;
    for (int t = 0; t < proposals; ++t) {
        int u = static_cast<int>(rng.below(static_cast<uint64_t>(n)));
        int v = static_cast<int>(rng.below(static_cast<uint64_t>(n)));
        if (u == v)
            continue;
        Edge e = make_edge(u, v);
        if (chosen.count(e))
            continue;
        if (adj[static_cast<size_t>(u)].size() >= 3 || adj[static_cast<size_t>(v)].size() >= 3)
            continue;
        chosen.insert(e);
        adj[static_cast<size_t>(u)].push_back(v);
        adj[static_cast<size_t>(v)].push_back(u);
    }
    return Graph(n, std::vector<Edge>(chosen.begin(), chosen.end()));
}

Graph gen_3_irregular(int n_base, uint64_t seed)
{
    return subdivide(gen_random_subcubic(n_base, seed));
}

Graph gen_1_saturated(int n_pairs, uint64_t seed)
{
    if (n_pairs < 0)
        throw std::invalid_argument("pair count must be non-negative");
    if (n_pairs == 0)
        return Graph(0, {});
    const int n = 2 * n_pairs;
    SplitMix64 rng(seed);
    for (int attempt = 0; attempt < 100; ++attempt) {
        // two free stubs per vertex, paired up uniformly at random
        std::vector<int> stubs;
        stubs.reserve(static_cast<size_t>(2 * n));
        for (int v = 0; v < n; ++v) {
            stubs.push_back(v);
            stubs.push_back(v);
        }
        shuffle(stubs, rng);
        std::set<Edge> extra;
        bool ok = true;
        for (size_t j = 0; j + 1 < stubs.size(); j += 2) {
            int u = stubs[j], v = stubs[j + 1];
            if (u == v) {
                ok = false;
                break;
            }
            Edge e = make_edge(u, v);
            if (u / 2 == v / 2 || extra.count(e)) { // matching edge or repeat
                ok = false;
                break;
            }
            extra.insert(e);
        }
        if (!ok)
            continue;
        std::vector<Edge> extra_edges(extra.begin(), extra.end());
        Graph base_extra(n, extra_edges);
        Graph spread = subdivide(base_extra);
        // matched partners stay adjacent; every other original edge gains
        // a midpoint, so each degree-3 vertex keeps exactly one degree-3
        // neighbour
        std::vector<Edge> all = spread.edges();
        for (int p = 0; p < n_pairs; ++p)
            all.push_back(make_edge(2 * p, 2 * p + 1));
        return Graph(spread.vertex_count(), all);
    }
    throw GenerationError("generation failed after retries");
}

namespace {

Graph cycle(int n)
{
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        edges.push_back(make_edge(i, (i + 1) % n));
    return Graph(n, edges);
}

Graph path(int n)
{
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i)
        edges.push_back(make_edge(i, i + 1));
    return Graph(n, edges);
}

Graph petersen()
{
    std::vector<Edge> edges;
    for (int i = 0; i < 5; ++i) {
        edges.push_back(make_edge(i, (i + 1) % 5));         // outer cycle
        edges.push_back(make_edge(5 + i, 5 + (i + 2) % 5)); // inner pentagram
        edges.push_back(make_edge(i, i + 5));               // spokes
    }
    return Graph(10, edges);
}

Graph prism()
{
    std::vector<Edge> edges;
    for (int i = 0; i < 3; ++i) {
        edges.push_back(make_edge(i, (i + 1) % 3));
        edges.push_back(make_edge(3 + i, 3 + (i + 1) % 3));
        edges.push_back(make_edge(i, i + 3));
    }
    return Graph(6, edges);
}

Graph cube_q3()
{
    std::vector<Edge> edges;
    for (int v = 0; v < 8; ++v)
        for (int bit = 0; bit < 3; ++bit) {
            int w = v ^ (1 << bit);
            if (v < w)
                edges.push_back(make_edge(v, w));
        }
    return Graph(8, edges);
}

Graph k4()
{
    return Graph(4, {make_edge(0, 1), make_edge(0, 2), make_edge(0, 3),
                     make_edge(1, 2), make_edge(1, 3), make_edge(2, 3)});
}

} // namespace

Graph named_graph(const std::string& key)
{
    if (key == "K4")
        return k4();
    if (key == "petersen")
        return petersen();
    if (key == "prism")
        return prism();
    if (key == "cube-q3")
        return cube_q3();
    if (key == "subdivided-k4")
        return subdivide(k4());
    if (key == "subdivided-petersen")
        return subdivide(petersen());
    if (key.size() >= 2 && (key[0] == 'C' || key[0] == 'P')) {
        bool digits = std::all_of(key.begin() + 1, key.end(),
                                  [](char c) { return c >= '0' && c <= '9'; });
        if (digits) {
            int n = std::stoi(key.substr(1));
            if (key[0] == 'C' && n >= 3 && n <= 12)
                return cycle(n);
            if (key[0] == 'P' && n >= 2 && n <= 12)
                return path(n);
        }
    }
    throw std::invalid_argument("unknown graph name: " + key);
}

std::vector<std::string> named_graph_keys()
{
    std::vector<std::string> keys = {"K4", "petersen", "prism", "cube-q3",
                                     "subdivided-k4", "subdivided-petersen"};
    for (int n = 3; n <= 12; ++n)
        keys.push_back("C" + std::to_string(n));
    for (int n = 2; n <= 12; ++n)
        keys.push_back("P" + std::to_string(n));
    return keys;
}

} // namespace packing

#pragma once

#include <iosfwd>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "packing/errors.hpp"

namespace packing {

/// Undirected edge with endpoints normalized so that first < second.
using Edge = std::pair<int, int>;

Edge make_edge(int u, int v);

/// Sentinel returned by distance computations for unreachable pairs.
inline constexpr int kInfiniteDistance = std::numeric_limits<int>::max();

/**
 * Simple undirected graph on dense vertex ids 0..n-1, stored as sorted
 * adjacency lists. Immutable after construction, so instances can be read
 * from any number of threads without synchronization.
 */
class Graph {
public:
    Graph() = default;

    /// Rejects loops, duplicate edges and out-of-range endpoints.
    Graph(int n, const std::vector<Edge>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }

    const std::vector<int>& neighbors(int v) const;
    int degree(int v) const;
    bool has_edge(int u, int v) const;

    /// All edges as (u, v) with u < v, sorted lexicographically.
    std::vector<Edge> edges() const;

private:
    void check_vertex(int v) const;

    int n_ = 0;
    int m_ = 0;
    std::vector<std::vector<int>> adj_;
};

/**
 * Reads the plain edge-list format: the first non-comment line is "n m",
 * followed by exactly m lines "u v" with 0 <= u, v < n and u != v. Lines
 * starting with '#' and blank lines are ignored. Raises ParseError with a
 * line number on malformed input, loops, duplicates or bad ids.
 */
Graph load_edge_list(std::istream& in);
Graph load_edge_list_string(const std::string& text);

/// Writes the same format back: header, then edges sorted ascending.
void write_edge_list(std::ostream& out, const Graph& g);
std::string edge_list_string(const Graph& g);

/// BFS distance; kInfiniteDistance when v is unreachable from u.
int distance(const Graph& g, int u, int v);

/// Distances from src to every vertex; kInfiniteDistance when unreachable.
/// A non-negative max_depth stops the search beyond that depth.
std::vector<int> bfs_distances(const Graph& g, int src, int max_depth = -1);

/// Maximum degree at most three.
bool is_subcubic(const Graph& g);

/// No edge joins two vertices of degree three. Checks the degree pattern
/// only; callers that also need the graph subcubic test that separately.
bool is_3_irregular(const Graph& g);

/// Every degree-3 vertex has exactly i neighbors of degree three
/// (vacuously true without degree-3 vertices). Requires a subcubic graph
/// and 0 <= i <= 3.
bool is_i_saturated(const Graph& g, int i);

/// Replaces every edge by a path of length two. Original ids are kept;
/// subdivision vertices are appended in sorted edge order, so edge number
/// j (0-based, edges sorted) gets vertex n + j.
Graph subdivide(const Graph& g);

/// Nondecreasing positive integers (s_1, ..., s_k). Class i may repeat
/// only at pairwise distance at least s_i + 1.
class PackingSequence {
public:
    explicit PackingSequence(std::vector<int> values);

    /// Parses "1,1,3".
    static PackingSequence parse(const std::string& csv);

    int size() const { return static_cast<int>(values_.size()); }
    int at(int i) const { return values_[static_cast<size_t>(i)]; } // 0-based
    const std::vector<int>& values() const { return values_; }

    bool operator==(const PackingSequence&) const = default;

private:
    std::vector<int> values_;
};

} // namespace packing

#include "packing/graph.hpp"

#include <algorithm>
#include <deque>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

namespace packing {

Edge make_edge(int u, int v)
{
    return u < v ? Edge{u, v} : Edge{v, u};
}

Graph::Graph(int n, const std::vector<Edge>& edges)
{
    if (n < 0)
        throw std::invalid_argument("vertex count must be non-negative");
    n_ = n;
    adj_.assign(static_cast<size_t>(n), {});

    std::set<Edge> seen;
    for (const Edge& e : edges) {
        int u = e.first, v = e.second;
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("vertex id out of range");
        if (u == v)
            throw std::invalid_argument("loop edge");
        if (!seen.insert(make_edge(u, v)).second)
            throw std::invalid_argument("duplicate edge");
        adj_[static_cast<size_t>(u)].push_back(v);
        adj_[static_cast<size_t>(v)].push_back(u);
    }
    m_ = static_cast<int>(seen.size());
    for (auto& nbrs : adj_)
        std::sort(nbrs.begin(), nbrs.end());
}

void Graph::check_vertex(int v) const
{
    if (v < 0 || v >= n_)
        throw std::out_of_range("vertex id out of range");
}

const std::vector<int>& Graph::neighbors(int v) const
{
    check_vertex(v);
    return adj_[static_cast<size_t>(v)];
}

int Graph::degree(int v) const
{
    check_vertex(v);
    return static_cast<int>(adj_[static_cast<size_t>(v)].size());
}

bool Graph::has_edge(int u, int v) const
{
    check_vertex(u);
    check_vertex(v);
    const auto& nbrs = adj_[static_cast<size_t>(u)];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> result;
    result.reserve(static_cast<size_t>(m_));
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[static_cast<size_t>(u)])
            if (u < v)
                result.emplace_back(u, v);
    return result; // sorted because u ascends and adjacency is sorted
}

namespace {

bool is_ignorable(const std::string& line)
{
    for (char c : line) {
        if (c == '#')
            return true;
        if (!isspace(static_cast<unsigned char>(c)))
            return false;
    }
    return true; // blank
}

[[noreturn]] void parse_fail(int line_no, const std::string& what)
{
    std::ostringstream msg;
    msg << "line " << line_no << ": " << what;
    throw ParseError(msg.str());
}

bool read_two_ints(const std::string& line, long& a, long& b)
{
    std::istringstream in(line);
    if (!(in >> a >> b))
        return false;
    std::string rest;
    if (in >> rest)
        return false;
    return true;
}

} // namespace

Graph load_edge_list(std::istream& in)
{
    std::string line;
    int line_no = 0;
    long n = -1, m = -1;

    while (std::getline(in, line)) {
        ++line_no;
        if (is_ignorable(line))
            continue;
        if (!read_two_ints(line, n, m) || n < 0 || m < 0)
            parse_fail(line_no, "expected header \"n m\"");
        break;
    }
    if (n < 0)
        throw ParseError("missing header \"n m\"");

    std::vector<Edge> edges;
    std::set<Edge> seen;
    long remaining = m;
    while (remaining > 0 && std::getline(in, line)) {
        ++line_no;
        if (is_ignorable(line))
            continue;
        long u, v;
        if (!read_two_ints(line, u, v))
            parse_fail(line_no, "expected edge \"u v\"");
        if (u < 0 || u >= n || v < 0 || v >= n)
            parse_fail(line_no, "vertex id out of range");
        if (u == v)
            parse_fail(line_no, "loop edge");
        Edge e = make_edge(static_cast<int>(u), static_cast<int>(v));
        if (!seen.insert(e).second)
            parse_fail(line_no, "duplicate edge");
        edges.push_back(e);
        --remaining;
    }
    if (remaining > 0)
        throw ParseError("unexpected end of input: "
                         + std::to_string(remaining) + " edge lines missing");
    while (std::getline(in, line)) {
        ++line_no;
        if (!is_ignorable(line))
            parse_fail(line_no, "trailing data after the last edge");
    }
    return Graph(static_cast<int>(n), edges);
}

Graph load_edge_list_string(const std::string& text)
{
    std::istringstream in(text);
    return load_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g)
{
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const Edge& e : g.edges())
        out << e.first << ' ' << e.second << '\n';
}

std::string edge_list_string(const Graph& g)
{
    std::ostringstream out;
    write_edge_list(out, g);
    return out.str();
}

std::vector<int> bfs_distances(const Graph& g, int src, int max_depth)
{
    std::vector<int> dist(static_cast<size_t>(g.vertex_count()), kInfiniteDistance);
    if (src < 0 || src >= g.vertex_count())
        throw std::out_of_range("vertex id out of range");
    dist[static_cast<size_t>(src)] = 0;
    std::deque<int> queue{src};
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        int du = dist[static_cast<size_t>(u)];
        if (max_depth >= 0 && du >= max_depth)
            continue;
        for (int w : g.neighbors(u)) {
            if (dist[static_cast<size_t>(w)] == kInfiniteDistance) {
                dist[static_cast<size_t>(w)] = du + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

int distance(const Graph& g, int u, int v)
{
    if (v < 0 || v >= g.vertex_count())
        throw std::out_of_range("vertex id out of range");
    if (u == v) {
        (void)g.neighbors(u); // range check
        return 0;
    }
    return bfs_distances(g, u)[static_cast<size_t>(v)];
}

bool is_subcubic(const Graph& g)
{
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) > 3)
            return false;
    return true;
}

bool is_3_irregular(const Graph& g)
{
    for (const Edge& e : g.edges())
        if (g.degree(e.first) == 3 && g.degree(e.second) == 3)
            return false;
    return true;
}

bool is_i_saturated(const Graph& g, int i)
{
    if (i < 0 || i > 3)
        throw std::invalid_argument("saturation index must be in 0..3");
    if (!is_subcubic(g))
        throw std::invalid_argument("not subcubic");
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) != 3)
            continue;
        int heavy = 0;
        for (int w : g.neighbors(v))
            if (g.degree(w) == 3)
                ++heavy;
        if (heavy != i)
            return false;
    }
    return true;
}

Graph subdivide(const Graph& g)
{
    const std::vector<Edge> old_edges = g.edges();
    const int n = g.vertex_count();
    std::vector<Edge> edges;
    edges.reserve(old_edges.size() * 2);
    for (size_t j = 0; j < old_edges.size(); ++j) {
        int mid = n + static_cast<int>(j);
        edges.push_back(make_edge(old_edges[j].first, mid));
        edges.push_back(make_edge(old_edges[j].second, mid));
    }
    return Graph(n + static_cast<int>(old_edges.size()), edges);
}

PackingSequence::PackingSequence(std::vector<int> values) : values_(std::move(values))
{
    if (values_.empty())
        throw std::invalid_argument("packing sequence must be non-empty");
    for (size_t i = 0; i < values_.size(); ++i) {
        if (values_[i] < 1)
            throw std::invalid_argument("packing sequence entries must be positive");
        if (i > 0 && values_[i] < values_[i - 1])
            throw std::invalid_argument("packing sequence must be nondecreasing");
    }
}

PackingSequence PackingSequence::parse(const std::string& csv)
{
    std::vector<int> values;
    size_t start = 0;
    while (true) {
        size_t comma = csv.find(',', start);
        std::string token = comma == std::string::npos ? csv.substr(start)
                                                       : csv.substr(start, comma - start);
        try {
            size_t pos = 0;
            int v = std::stoi(token, &pos);
            while (pos < token.size() && isspace(static_cast<unsigned char>(token[pos])))
                ++pos;
            if (pos != token.size())
                throw std::invalid_argument(token);
            values.push_back(v);
        } catch (const std::exception&) {
            throw ParseError("invalid packing sequence: \"" + csv + "\"");
        }
        if (comma == std::string::npos)
            break;
        start = comma + 1;
    }
    try {
        return PackingSequence(values);
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string(e.what()) + ": \"" + csv + "\"");
    }
}

} // namespace packing

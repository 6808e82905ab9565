#include "vinebound/graph.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <utility>

namespace vinebound {

Graph::Graph(int n, std::span<const Edge> edges) : n_(n) {
    if (n < 0) {
        throw PreconditionError("negative vertex count");
    }
    edges_.reserve(edges.size());
    for (Edge e : edges) {
        if (!has_vertex(e.u) || !has_vertex(e.v)) {
            throw PreconditionError("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                                    " has an endpoint outside [0, " + std::to_string(n) + ")");
        }
        if (e.u == e.v) {
            throw PreconditionError("loop at vertex " + std::to_string(e.u));
        }
        if (e.u > e.v) {
            std::swap(e.u, e.v);
        }
        edges_.push_back(e);
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

    adj_.assign(static_cast<std::size_t>(n), {});
    for (Edge e : edges_) {
        adj_[static_cast<std::size_t>(e.u)].push_back(e.v);
        adj_[static_cast<std::size_t>(e.v)].push_back(e.u);
    }
    for (auto& list : adj_) {
        std::sort(list.begin(), list.end());
    }
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    if (!has_vertex(u) || !has_vertex(v)) {
        return false;
    }
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::optional<std::size_t> Path::position_of(Vertex v) const {
    auto it = std::find(vertices_.begin(), vertices_.end(), v);
    if (it == vertices_.end()) {
        return std::nullopt;
    }
    return static_cast<std::size_t>(it - vertices_.begin());
}

namespace {

std::string edge_name(Vertex u, Vertex v) {
    return std::to_string(u) + "-" + std::to_string(v);
}

// Shared by validate_path and validate_cycle.
void check_simple_walk(const Graph& g, std::span<const Vertex> vs) {
    if (vs.empty()) {
        throw ValidationError("empty vertex sequence");
    }
    std::vector<bool> seen(static_cast<std::size_t>(g.vertex_count()), false);
    for (std::size_t i = 0; i < vs.size(); ++i) {
        Vertex v = vs[i];
        if (!g.has_vertex(v)) {
            throw ValidationError("vertex " + std::to_string(v) + " at index " + std::to_string(i) +
                                  " is not in the graph");
        }
        if (seen[static_cast<std::size_t>(v)]) {
            throw ValidationError("repeated vertex " + std::to_string(v) + " at index " +
                                  std::to_string(i));
        }
        seen[static_cast<std::size_t>(v)] = true;
        if (i > 0 && !g.adjacent(vs[i - 1], v)) {
            throw ValidationError("consecutive vertices " + edge_name(vs[i - 1], v) +
                                  " are not adjacent");
        }
    }
}

} // namespace

Path validate_path(const Graph& g, std::span<const Vertex> vs) {
    check_simple_walk(g, vs);
    return Path(std::vector<Vertex>(vs.begin(), vs.end()));
}

Cycle validate_cycle(const Graph& g, std::span<const Vertex> vs) {
    if (vs.size() < 3) {
        throw ValidationError("cycle needs at least 3 vertices, got " + std::to_string(vs.size()));
    }
    check_simple_walk(g, vs);
    if (!g.adjacent(vs.back(), vs.front())) {
        throw ValidationError("closing edge " + edge_name(vs.back(), vs.front()) + " is absent");
    }
    return Cycle(std::vector<Vertex>(vs.begin(), vs.end()));
}

namespace {

// Strict decimal: digits only, no sign, no leading zeros.
std::optional<long long> parse_number(std::string_view token) {
    if (token.empty() || token.size() > 18) {
        return std::nullopt;
    }
    if (token.size() > 1 && token[0] == '0') {
        return std::nullopt;
    }
    long long value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size() || value < 0) {
        return std::nullopt;
    }
    return value;
}

// Exactly two numbers separated by one space.
std::optional<std::pair<long long, long long>> parse_pair(std::string_view line) {
    auto space = line.find(' ');
    if (space == std::string_view::npos) {
        return std::nullopt;
    }
    auto first = parse_number(line.substr(0, space));
    auto second = parse_number(line.substr(space + 1));
    if (!first || !second) {
        return std::nullopt;
    }
    return std::make_pair(*first, *second);
}

} // namespace

Graph parse_graph(std::string_view text) {
    std::optional<std::pair<long long, long long>> header;
    std::vector<Edge> edges;
    std::size_t line_no = 0;
    std::size_t edge_lines = 0;

    std::size_t start = 0;
    while (start < text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view line = text.substr(start, end - start);
        start = end + 1;
        ++line_no;

        if (line.empty() || line.front() == '#') {
            continue;
        }
        auto numbers = parse_pair(line);
        if (!numbers) {
            throw ParseError(line_no, "expected two non-negative integers separated by one space, got \"" +
                                          std::string(line) + "\"");
        }
        if (!header) {
            if (numbers->first > 1'000'000) {
                throw ParseError(line_no, "vertex count too large");
            }
            header = numbers;
            edges.reserve(static_cast<std::size_t>(std::min<long long>(numbers->second, 1'000'000)));
            continue;
        }
        if (edge_lines == static_cast<std::size_t>(header->second)) {
            throw ParseError(line_no, "more edge lines than the " + std::to_string(header->second) +
                                          " declared in the header");
        }
        ++edge_lines;
        auto [u, v] = *numbers;
        const long long n = header->first;
        if (u >= n || v >= n) {
            throw ParseError(line_no, "vertex " + std::to_string(u >= n ? u : v) +
                                          " out of range for n=" + std::to_string(n));
        }
        if (u == v) {
            throw ParseError(line_no, "loop at vertex " + std::to_string(u));
        }
        edges.push_back(Edge{static_cast<Vertex>(u), static_cast<Vertex>(v)});
    }

    if (!header) {
        throw ParseError(0, "missing \"n m\" header");
    }
    if (edge_lines != static_cast<std::size_t>(header->second)) {
        throw ParseError(line_no, "header declares " + std::to_string(header->second) +
                                      " edges but " + std::to_string(edge_lines) + " were listed");
    }
    return Graph(static_cast<int>(header->first), edges);
}

std::string serialize_graph(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (Edge e : g.edges()) {
        out << e.u << ' ' << e.v << '\n';
    }
    return out.str();
}

std::string TwoConnectivity::describe() const {
    switch (failure) {
    case ConnectivityFailure::none:
        return "2-connected";
    case ConnectivityFailure::too_few_vertices:
        return "fewer than 3 vertices";
    case ConnectivityFailure::disconnected:
        return "graph is disconnected";
    case ConnectivityFailure::articulation_vertex:
        return "vertex " + std::to_string(*articulation) + " is an articulation vertex";
    }
    return {};
}

bool is_connected(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) {
        return true;
    }
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    std::vector<Vertex> stack{0};
    seen[0] = true;
    int reached = 1;
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (Vertex w : g.neighbors(v)) {
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = true;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == n;
}

TwoConnectivity check_two_connectivity(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 3) {
        return {ConnectivityFailure::too_few_vertices, std::nullopt};
    }

    // Iterative DFS from vertex 0 computing discovery times and low points.
    // A non-root v is a cut vertex iff some child w has low[w] >= disc[v];
    // the root is one iff it has more than one DFS child.
    const auto un = static_cast<std::size_t>(n);
    std::vector<int> disc(un, -1);
    std::vector<int> low(un, 0);
    std::vector<Vertex> parent(un, -1);
    std::vector<std::size_t> next_edge(un, 0);
    std::optional<Vertex> cut;
    int root_children = 0;
    int timer = 0;

    std::vector<Vertex> stack{0};
    disc[0] = low[0] = timer++;
    while (!stack.empty()) {
        Vertex v = stack.back();
        auto uv = static_cast<std::size_t>(v);
        auto nb = g.neighbors(v);
        if (next_edge[uv] < nb.size()) {
            Vertex w = nb[next_edge[uv]++];
            auto uw = static_cast<std::size_t>(w);
            if (disc[uw] == -1) {
                parent[uw] = v;
                disc[uw] = low[uw] = timer++;
                if (v == 0) {
                    ++root_children;
                }
                stack.push_back(w);
            } else if (w != parent[uv]) {
                low[uv] = std::min(low[uv], disc[uw]);
            }
            continue;
        }
        stack.pop_back();
        Vertex p = parent[uv];
        if (p >= 0) {
            auto up = static_cast<std::size_t>(p);
            low[up] = std::min(low[up], low[uv]);
            if (p != 0 && low[uv] >= disc[up] && !cut) {
                cut = p;
            }
        }
    }

    if (timer < n) {
        return {ConnectivityFailure::disconnected, std::nullopt};
    }
    if (root_children > 1) {
        return {ConnectivityFailure::articulation_vertex, Vertex{0}};
    }
    if (cut) {
        return {ConnectivityFailure::articulation_vertex, cut};
    }
    return {};
}

bool is_two_connected(const Graph& g) {
    return check_two_connectivity(g).ok();
}

} // namespace vinebound

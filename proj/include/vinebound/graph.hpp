#ifndef VINEBOUND_GRAPH_HPP
#define VINEBOUND_GRAPH_HPP

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "vinebound/error.hpp"

namespace vinebound {

using Vertex = int;

// Undirected edge, stored normalized so that u < v.
struct Edge {
    Vertex u;
    Vertex v;
    auto operator<=>(const Edge&) const = default;
};

// Simple undirected graph on vertices 0..n-1. Immutable once built.
class Graph {
public:
    Graph() = default;

    // Throws PreconditionError on a loop or an out-of-range endpoint.
    // Repeated edges (in either orientation) collapse to one.
    Graph(int n, std::span<const Edge> edges);
    Graph(int n, std::initializer_list<Edge> edges)
        : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

    int vertex_count() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }

    // Sorted lexicographically, u < v in each edge.
    const std::vector<Edge>& edges() const noexcept { return edges_; }

    // Sorted ascending.
    std::span<const Vertex> neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
    std::size_t degree(Vertex v) const { return adj_[static_cast<std::size_t>(v)].size(); }

    bool has_vertex(Vertex v) const noexcept { return v >= 0 && v < n_; }
    bool adjacent(Vertex u, Vertex v) const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adj_;
};

// Certified simple path of a specific graph. Only validate_path builds one.
// Orientation matters: front() is the start, back() the end.
class Path {
public:
    std::span<const Vertex> vertices() const noexcept { return vertices_; }
    std::size_t size() const noexcept { return vertices_.size(); }
    std::size_t length() const noexcept { return vertices_.size() - 1; }
    Vertex front() const { return vertices_.front(); }
    Vertex back() const { return vertices_.back(); }
    Vertex operator[](std::size_t i) const { return vertices_[i]; }

    // Index of v along the path, or nullopt.
    std::optional<std::size_t> position_of(Vertex v) const;

    friend bool operator==(const Path&, const Path&) = default;

private:
    explicit Path(std::vector<Vertex> vs) : vertices_(std::move(vs)) {}
    friend Path validate_path(const Graph&, std::span<const Vertex>);

    std::vector<Vertex> vertices_;
};

// Certified simple cycle of length >= 3. Only validate_cycle builds one.
class Cycle {
public:
    std::span<const Vertex> vertices() const noexcept { return vertices_; }
    std::size_t length() const noexcept { return vertices_.size(); }

    friend bool operator==(const Cycle&, const Cycle&) = default;

private:
    explicit Cycle(std::vector<Vertex> vs) : vertices_(std::move(vs)) {}
    friend Cycle validate_cycle(const Graph&, std::span<const Vertex>);

    std::vector<Vertex> vertices_;
};

// Throws ValidationError naming the first violation.
Path validate_path(const Graph& g, std::span<const Vertex> vs);
inline Path validate_path(const Graph& g, std::initializer_list<Vertex> vs) {
    return validate_path(g, std::span<const Vertex>(vs.begin(), vs.size()));
}
Cycle validate_cycle(const Graph& g, std::span<const Vertex> vs);
inline Cycle validate_cycle(const Graph& g, std::initializer_list<Vertex> vs) {
    return validate_cycle(g, std::span<const Vertex>(vs.begin(), vs.size()));
}

// Graph file format:
//   "n m" header, then m lines "u v"; '#' lines and blank lines are skipped.
// Numbers are plain decimals without leading zeros, separated by one space.
// Throws ParseError carrying the offending line number.
Graph parse_graph(std::string_view text);

// Canonical form: header, then edges sorted with u < v. Every line ends in '\n'.
std::string serialize_graph(const Graph& g);

enum class ConnectivityFailure {
    none,
    too_few_vertices,
    disconnected,
    articulation_vertex,
};

struct TwoConnectivity {
    ConnectivityFailure failure = ConnectivityFailure::none;
    std::optional<Vertex> articulation; // set for articulation_vertex

    bool ok() const noexcept { return failure == ConnectivityFailure::none; }
    std::string describe() const;
};

// Low-point DFS. Reports the first articulation vertex found.
TwoConnectivity check_two_connectivity(const Graph& g);
bool is_two_connected(const Graph& g);
bool is_connected(const Graph& g);

} // namespace vinebound

#endif // VINEBOUND_GRAPH_HPP

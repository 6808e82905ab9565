#include "vinebound/solver.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <optional>
#include <string>

namespace vinebound {

void SolveLimits::validate() const {
    if (max_vertices <= 0 || node_budget == 0 || !(time_budget > 0.0)) {
        throw PreconditionError("solve limits must all be positive");
    }
}

namespace {

using Mask = std::uint64_t;
using Clock = std::chrono::steady_clock;

constexpr Mask bit(Vertex v) { return Mask{1} << static_cast<unsigned>(v); }

std::vector<Mask> neighbor_masks(const Graph& g) {
    std::vector<Mask> adj(static_cast<std::size_t>(g.vertex_count()), 0);
    for (Edge e : g.edges()) {
        adj[static_cast<std::size_t>(e.u)] |= bit(e.v);
        adj[static_cast<std::size_t>(e.v)] |= bit(e.u);
    }
    return adj;
}

// Vertices of `region` reachable from v through `region` (v itself excluded).
int reachable_count(const std::vector<Mask>& adj, Vertex v, Mask region) {
    Mask reached = 0;
    Mask frontier = adj[static_cast<std::size_t>(v)] & region;
    while (frontier != 0) {
        reached |= frontier;
        Mask next = 0;
        for (Mask f = frontier; f != 0; f &= f - 1) {
            next |= adj[static_cast<std::size_t>(std::countr_zero(f))];
        }
        frontier = next & region & ~reached;
    }
    return std::popcount(reached);
}

// Node and wall-clock accounting shared by both searches.
class Budget {
public:
    explicit Budget(const SolveLimits& limits)
        : node_budget_(limits.node_budget),
          deadline_(Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                       std::chrono::duration<double>(limits.time_budget))) {}

    // False once either budget is exhausted; stays false afterwards.
    bool tick() {
        if (exhausted_) {
            return false;
        }
        ++nodes_;
        if (nodes_ > node_budget_ || ((nodes_ & 0xfff) == 0 && Clock::now() > deadline_)) {
            exhausted_ = true;
        }
        return !exhausted_;
    }
    bool exhausted() const { return exhausted_; }
    std::uint64_t nodes() const { return nodes_; }

private:
    std::uint64_t node_budget_;
    Clock::time_point deadline_;
    std::uint64_t nodes_ = 0;
    bool exhausted_ = false;
};

class PathSearch {
public:
    PathSearch(const Graph& g, const SolveLimits& limits)
        : g_(g), adj_(neighbor_masks(g)), all_(g.vertex_count() == 64 ? ~Mask{0} : bit(g.vertex_count()) - 1),
          budget_(limits) {}

    void seed(std::vector<Vertex> incumbent) { best_ = std::move(incumbent); }

    void run() {
        const int n = g_.vertex_count();
        for (Vertex s = 0; s < n && !done(); ++s) {
            current_.assign(1, s);
            extend(s, bit(s));
        }
    }

    const std::vector<Vertex>& best() const { return best_; }
    const Budget& budget() const { return budget_; }

private:
    bool done() const {
        return budget_.exhausted() || best_.size() == static_cast<std::size_t>(g_.vertex_count());
    }

    void extend(Vertex v, Mask used) {
        if (!budget_.tick()) {
            return;
        }
        if (current_.size() > best_.size() && current_.front() < v) {
            best_ = current_;
            if (done()) {
                return;
            }
        }
        const int len = static_cast<int>(current_.size()) - 1;
        const int best_len = static_cast<int>(best_.size()) - 1;
        if (len + reachable_count(adj_, v, all_ & ~used) <= best_len) {
            return;
        }
        for (Vertex w : g_.neighbors(v)) {
            if (used & bit(w)) {
                continue;
            }
            current_.push_back(w);
            extend(w, used | bit(w));
            current_.pop_back();
            if (done()) {
                return;
            }
        }
    }

    const Graph& g_;
    std::vector<Mask> adj_;
    Mask all_;
    Budget budget_;
    std::vector<Vertex> current_;
    std::vector<Vertex> best_;
};

class CycleSearch {
public:
    CycleSearch(const Graph& g, const SolveLimits& limits)
        : g_(g), adj_(neighbor_masks(g)), budget_(limits) {}

    void run() {
        const int n = g_.vertex_count();
        for (Vertex s = 0; s < n && !done(); ++s) {
            // Cycles whose smallest vertex is s have at most n - s vertices.
            if (static_cast<int>(best_.size()) >= n - s) {
                break;
            }
            start_ = s;
            Mask above = (s + 1 >= 64) ? 0 : ~Mask{0} << static_cast<unsigned>(s + 1);
            if (n < 64) {
                above &= bit(n) - 1;
            }
            region_ = above;
            current_.assign(1, s);
            extend(s, bit(s));
        }
    }

    const std::vector<Vertex>& best() const { return best_; }
    const Budget& budget() const { return budget_; }

private:
    bool done() const {
        return budget_.exhausted() || best_.size() == static_cast<std::size_t>(g_.vertex_count());
    }

    void extend(Vertex v, Mask used) {
        if (!budget_.tick()) {
            return;
        }
        const std::size_t k = current_.size();
        if (k >= 3 && k > best_.size() && current_[1] < v && (adj_[static_cast<std::size_t>(v)] & bit(start_))) {
            best_ = current_;
            if (done()) {
                return;
            }
        }
        if (static_cast<int>(k) + reachable_count(adj_, v, region_ & ~used) <= static_cast<int>(best_.size())) {
            return;
        }
        for (Vertex w : g_.neighbors(v)) {
            if (w <= start_ || (used & bit(w))) {
                continue;
            }
            current_.push_back(w);
            extend(w, used | bit(w));
            current_.pop_back();
            if (done()) {
                return;
            }
        }
    }

    const Graph& g_;
    std::vector<Mask> adj_;
    Budget budget_;
    Vertex start_ = 0;
    Mask region_ = 0;
    std::vector<Vertex> current_;
    std::vector<Vertex> best_;
};

void require_solver_size(const Graph& g) {
    if (g.vertex_count() > kMaxSolverVertices) {
        throw PreconditionError("exact solvers support at most " + std::to_string(kMaxSolverVertices) +
                                " vertices, got " + std::to_string(g.vertex_count()));
    }
}

} // namespace

PathSolution longest_path(const Graph& g, const SolveLimits& limits) {
    limits.validate();
    require_solver_size(g);
    if (g.vertex_count() < 2) {
        throw PreconditionError("longest_path needs at least 2 vertices");
    }
    if (!is_connected(g)) {
        throw PreconditionError("longest_path needs a connected graph");
    }

    PathSearch search(g, limits);
    // The smallest edge is the optimal witness whenever l = 1.
    Edge first = g.edges().front();
    search.seed({first.u, first.v});
    search.run();
    return PathSolution{validate_path(g, search.best()), !search.budget().exhausted(), search.budget().nodes()};
}

CycleSolution longest_cycle(const Graph& g, const SolveLimits& limits) {
    limits.validate();
    require_solver_size(g);
    if (auto conn = check_two_connectivity(g); !conn.ok()) {
        throw PreconditionError("longest_cycle needs a 2-connected graph: " + conn.describe());
    }

    CycleSearch search(g, limits);
    search.run();
    if (search.best().empty()) {
        throw ResourceLimitError("search budget exhausted before any cycle was found", 0);
    }
    return CycleSolution{validate_cycle(g, search.best()), !search.budget().exhausted(), search.budget().nodes()};
}

std::vector<Path> enumerate_paths_of_length(const Graph& g, std::size_t length, std::size_t cap) {
    require_solver_size(g);
    const auto adj = neighbor_masks(g);
    const int n = g.vertex_count();
    const Mask all = n == 64 ? ~Mask{0} : bit(n) - 1;
    std::vector<Path> out;
    std::vector<Vertex> current;

    auto visit = [&](auto&& self, Vertex v, Mask used) -> void {
        if (out.size() >= cap) {
            return;
        }
        const std::size_t len = current.size() - 1;
        if (len == length) {
            if (current.front() < v) {
                out.push_back(validate_path(g, current));
            }
            return;
        }
        if (len + static_cast<std::size_t>(reachable_count(adj, v, all & ~used)) < length) {
            return;
        }
        for (Vertex w : g.neighbors(v)) {
            if (!(used & bit(w))) {
                current.push_back(w);
                self(self, w, used | bit(w));
                current.pop_back();
            }
        }
    };
    for (Vertex s = 0; s < n && out.size() < cap; ++s) {
        current.assign(1, s);
        visit(visit, s, bit(s));
    }
    return out;
}

namespace {

constexpr int kOracleCeiling = 24;

std::vector<std::uint32_t> small_masks(const Graph& g, int max_vertices) {
    const int n = g.vertex_count();
    const int cap = std::min(max_vertices, kOracleCeiling);
    if (n > cap) {
        throw PreconditionError("oracle supports at most " + std::to_string(cap) + " vertices, got " +
                                std::to_string(n));
    }
    std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0);
    for (Edge e : g.edges()) {
        adj[static_cast<std::size_t>(e.u)] |= std::uint32_t{1} << e.v;
        adj[static_cast<std::size_t>(e.v)] |= std::uint32_t{1} << e.u;
    }
    return adj;
}

} // namespace

int longest_path_oracle(const Graph& g, int max_vertices) {
    const auto adj = small_masks(g, max_vertices);
    const int n = g.vertex_count();
    if (n == 0) {
        return 0;
    }
    // ends[S] = set of v such that some path visits exactly S and ends at v.
    const std::size_t states = std::size_t{1} << n;
    std::vector<std::uint32_t> ends(states, 0);
    for (int v = 0; v < n; ++v) {
        ends[std::size_t{1} << v] = std::uint32_t{1} << v;
    }
    int best = 0;
    for (std::size_t mask = 1; mask < states; ++mask) {
        if (ends[mask] == 0) {
            continue;
        }
        best = std::max(best, std::popcount(mask) - 1);
        for (std::uint32_t e = ends[mask]; e != 0; e &= e - 1) {
            const int v = std::countr_zero(e);
            for (std::uint32_t fresh = adj[static_cast<std::size_t>(v)] & ~static_cast<std::uint32_t>(mask);
                 fresh != 0; fresh &= fresh - 1) {
                const int w = std::countr_zero(fresh);
                ends[mask | (std::size_t{1} << w)] |= std::uint32_t{1} << w;
            }
        }
    }
    return best;
}

int longest_cycle_oracle(const Graph& g, int max_vertices) {
    const auto adj = small_masks(g, max_vertices);
    const int n = g.vertex_count();
    if (n < 3) {
        return 0;
    }
    // ends[S] = set of v such that a path from min(S) visits exactly S and
    // ends at v. A cycle closes when such a v is adjacent to min(S).
    const std::size_t states = std::size_t{1} << n;
    std::vector<std::uint32_t> ends(states, 0);
    for (int v = 0; v < n; ++v) {
        ends[std::size_t{1} << v] = std::uint32_t{1} << v;
    }
    int best = 0;
    for (std::size_t mask = 1; mask < states; ++mask) {
        if (ends[mask] == 0) {
            continue;
        }
        const int start = std::countr_zero(mask);
        const int size = std::popcount(mask);
        if (size >= 3 && (ends[mask] & adj[static_cast<std::size_t>(start)]) != 0) {
            best = std::max(best, size);
        }
        const std::uint32_t above = ~((std::uint32_t{2} << start) - 1);
        for (std::uint32_t e = ends[mask]; e != 0; e &= e - 1) {
            const int v = std::countr_zero(e);
            for (std::uint32_t fresh = adj[static_cast<std::size_t>(v)] & above & ~static_cast<std::uint32_t>(mask);
                 fresh != 0; fresh &= fresh - 1) {
                const int w = std::countr_zero(fresh);
                ends[mask | (std::size_t{1} << w)] |= std::uint32_t{1} << w;
            }
        }
    }
    return best;
}

} // namespace vinebound

#ifndef VINEBOUND_SOLVER_HPP
#define VINEBOUND_SOLVER_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "vinebound/graph.hpp"

namespace vinebound {

// The branch-and-bound solvers work on 64-bit vertex masks.
inline constexpr int kMaxSolverVertices = 64;

struct SolveLimits {
    int max_vertices = 16;                 // cap for the subset-DP oracles
    std::uint64_t node_budget = 50'000'000; // search-tree nodes per solve
    double time_budget = 60.0;             // seconds per solve

    // Throws PreconditionError unless every field is positive.
    void validate() const;
};

struct PathSolution {
    Path path;
    bool optimal = false; // false: budget ran out, path is the incumbent
    std::uint64_t nodes = 0;
};

struct CycleSolution {
    Cycle cycle;
    bool optimal = false;
    std::uint64_t nodes = 0;
};

// Exact longest path by depth-first branch and bound. The search visits
// sequences in lexicographic order and only accepts strict improvements, so
// the witness is the lexicographically smallest optimal path among those
// oriented with front() < back().
// Requires a connected graph with 2..64 vertices.
PathSolution longest_path(const Graph& g, const SolveLimits& limits = {});

// Exact longest cycle. The witness starts at its smallest vertex, is oriented
// so that its second vertex is smaller than its last, and is the
// lexicographically smallest such optimal cycle.
// Requires a 2-connected graph with at most 64 vertices. Throws
// ResourceLimitError when the budget runs out before any cycle is found.
CycleSolution longest_cycle(const Graph& g, const SolveLimits& limits = {});

// Every path of exactly `length` edges, each listed once with front() < back(),
// in lexicographic order. Stops after `cap` paths.
std::vector<Path> enumerate_paths_of_length(const Graph& g, std::size_t length, std::size_t cap);

// Independent oracles: dynamic programming over (vertex subset, endpoint).
// Throw PreconditionError when n exceeds max_vertices (hard ceiling 24).
int longest_path_oracle(const Graph& g, int max_vertices = 16);
int longest_cycle_oracle(const Graph& g, int max_vertices = 16); // 0 if acyclic

} // namespace vinebound

#endif // VINEBOUND_SOLVER_HPP

#ifndef VINEBOUND_EXTREMAL_HPP
#define VINEBOUND_EXTREMAL_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "vinebound/graph.hpp"
#include "vinebound/solver.hpp"
#include "vinebound/theorem.hpp"
#include "vinebound/vine.hpp"

namespace vinebound {

// ---------------------------------------------------------------- extremal

struct ExtremalSpec {
    int m = 2;     // vine length, >= 2
    int slack = 0; // even, >= 0

    // Throws PreconditionError.
    void validate() const;
};

// A spine path carrying m chords L_i = x_i y_i whose segment lengths are
//   a_1 = a_m = slack/2 + 1, a_i = 0 otherwise,
//   b_i = b_{m-i} = slack/2 + i + 1 for i <= (m-1)/2, and for even m
//   b_{m/2} = slack/2 + (m+2)/2.
// The spine is a Hamiltonian (hence longest) path, c = m + slack + 2, and c
// meets the circumference bound with equality.
struct ExtremalInstance {
    ExtremalSpec spec;
    Graph graph;
    Path spine;
    Vine vine;
    std::vector<int> a;
    std::vector<int> b;
    int expected_l = 0;
    int expected_c = 0;
    long long bound_squared = 0;
};

ExtremalInstance extremal_graph(const ExtremalSpec& spec);

// (y+2)(m+1)/2 + (m-1)(m+1)/4 for odd m; ((m+2)^2 + 2y(m+1))/4 for even m.
int extremal_longest_path_length(int m, int slack);

// ---------------------------------------------------------------- random

// Seeded generators use std::mt19937_64 (fully specified by the standard)
// with rejection sampling for bounded draws, so output is identical across
// platforms and standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    std::uint64_t next() { return engine_(); }
    // Uniform in [0, bound), bound > 0.
    std::uint64_t below(std::uint64_t bound);
    int between(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1))); }

private:
    std::mt19937_64 engine_;
};

// Derives independent per-instance seeds from a campaign seed.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index);

struct GeneratedGraph {
    Graph graph;
    int ears_placed = 0;
    bool saturated = false; // fewer ears than requested: graph became complete
};

// Hamiltonian cycle on a random permutation of 0..n-1 plus `extra_ears`
// random chords (ears with no interior vertex). n >= 3.
GeneratedGraph random_two_connected(int n, int extra_ears, std::uint64_t seed);

// Open ear decomposition: a random cycle on k of the n vertices, then ears
// with fresh interior vertices until all n are used, then `extra_chords`
// random chords. Unlike random_two_connected the result need not be
// Hamiltonian. n >= 3.
GeneratedGraph random_ear_graph(int n, int extra_chords, std::uint64_t seed);

// ---------------------------------------------------------------- fuzzing

enum class GeneratorKind { chords, ears, mixed };
const char* to_string(GeneratorKind kind);

struct FuzzConfig {
    int count = 1;
    int n_min = 3;
    int n_max = 3;
    int extra_min = 0;
    int extra_max = 4;
    std::uint64_t seed = 1;
    GeneratorKind generator = GeneratorKind::mixed; // mixed: chords on even indices, ears on odd
    SolveLimits limits;
    std::size_t vine_cap = 200;
    int oracle_max_n = 12;
    int jobs = 1;

    // Throws PreconditionError.
    void validate() const;
};

struct FuzzInstance {
    int index = 0;
    std::uint64_t seed = 0;
    GeneratorKind generator = GeneratorKind::chords;
    Graph graph;
    std::optional<BoundReport> report;
    bool oracle_checked = false;
    int oracle_l = 0;
    int oracle_c = 0;
    std::vector<std::string> violations; // report violations plus campaign-level ones

    bool passed() const { return report && report->certified && violations.empty(); }
};

struct FuzzReport {
    FuzzConfig config;
    std::vector<FuzzInstance> instances; // by index, regardless of jobs
    int passes = 0;
    int failures = 0;
    int uncertified = 0;
    double seconds = 0.0;

    bool clean() const { return failures == 0 && uncertified == 0; }
};

// For each instance: generate, analyze with every vine up to vine_cap, and
// compare against the subset-DP oracles when n <= oracle_max_n.
FuzzReport fuzz_campaign(const FuzzConfig& config);

struct OracleCase {
    int index = 0;
    std::uint64_t seed = 0;
    Graph graph;
    int bnb_l = 0;
    int bnb_c = 0;
    int oracle_l = 0;
    int oracle_c = 0;
    bool optimal = false;

    bool agrees() const { return optimal && bnb_l == oracle_l && bnb_c == oracle_c; }
};

// Branch and bound against the oracle on one graph (2-connected).
OracleCase oracle_compare(const Graph& g, const SolveLimits& limits = {});

// `count` seeded graphs with n in [n_min, n_max], generated like fuzz_campaign.
std::vector<OracleCase> oracle_campaign(int count, int n_min, int n_max, std::uint64_t seed,
                                        const SolveLimits& limits = {});

} // namespace vinebound

#endif // VINEBOUND_EXTREMAL_HPP

#include "vinebound/extremal.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

namespace vinebound {

void ExtremalSpec::validate() const {
    if (m < 2) {
        throw PreconditionError("extremal construction needs m >= 2, got " + std::to_string(m));
    }
    if (slack < 0 || slack % 2 != 0) {
        throw PreconditionError("extremal construction needs an even slack >= 0, got " + std::to_string(slack));
    }
}

int extremal_longest_path_length(int m, int slack) {
    if (m % 2 == 1) {
        return (slack + 2) * (m + 1) / 2 + (m - 1) * (m + 1) / 4;
    }
    return ((m + 2) * (m + 2) + 2 * slack * (m + 1)) / 4;
}

ExtremalInstance extremal_graph(const ExtremalSpec& spec) {
    spec.validate();
    const int m = spec.m;
    const int half = spec.slack / 2;

    std::vector<int> a(static_cast<std::size_t>(m), 0);
    a.front() = a.back() = half + 1;
    std::vector<int> b(static_cast<std::size_t>(m - 1), 0);
    for (int i = 1; i <= (m - 1) / 2; ++i) {
        b[static_cast<std::size_t>(i - 1)] = b[static_cast<std::size_t>(m - i - 1)] = half + i + 1;
    }
    if (m % 2 == 0) {
        b[static_cast<std::size_t>(m / 2 - 1)] = half + (m + 2) / 2;
    }

    // Lay out A_1 B_1 A_2 ... B_{m-1} A_m along the spine; x_{i+1} follows
    // A_i and y_i follows B_i.
    std::vector<int> xs{0};
    std::vector<int> ys;
    int at = 0;
    for (int i = 0; i < m; ++i) {
        at += a[static_cast<std::size_t>(i)];
        if (i + 1 < m) {
            xs.push_back(at);
            at += b[static_cast<std::size_t>(i)];
            ys.push_back(at);
        }
    }
    ys.push_back(at);
    const int n = at + 1;

    std::vector<Edge> edges;
    for (int v = 0; v + 1 < n; ++v) {
        edges.push_back({v, v + 1});
    }
    for (int i = 0; i < m; ++i) {
        edges.push_back({xs[static_cast<std::size_t>(i)], ys[static_cast<std::size_t>(i)]});
    }
    Graph g(n, edges);
    if (g.edge_count() != static_cast<std::size_t>(n - 1 + m)) {
        throw InternalError("extremal chords collide with spine edges");
    }

    std::vector<Vertex> spine_vs(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        spine_vs[static_cast<std::size_t>(v)] = v;
    }
    Path spine = validate_path(g, spine_vs);
    Vine vine{spine, {}};
    for (int i = 0; i < m; ++i) {
        vine.ears.push_back(make_ear(g, spine, {xs[static_cast<std::size_t>(i)], ys[static_cast<std::size_t>(i)]}));
    }
    if (auto verdict = verify_vine(vine); !verdict.ok()) {
        throw InternalError("extremal vine is invalid: " + verdict.message);
    }

    ExtremalInstance out{spec, std::move(g), spine, std::move(vine), std::move(a), std::move(b), 0, 0, 0};
    out.expected_l = static_cast<int>(spine.length());
    if (out.expected_l != extremal_longest_path_length(m, spec.slack)) {
        throw InternalError("extremal spine length disagrees with the closed form");
    }
    out.expected_c = m + spec.slack + 2;
    out.bound_squared = circumference_bound_squared(out.expected_l, spec.slack, parity_of(static_cast<std::size_t>(m)));
    return out;
}

std::uint64_t Rng::below(std::uint64_t bound) {
    // Reject the low 2^64 mod bound values so every residue is equally likely.
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
        std::uint64_t x = next();
        if (x >= threshold) {
            return x % bound;
        }
    }
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
    // splitmix64 finalizer
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

namespace {

std::vector<Vertex> random_permutation(Rng& rng, int n) {
    std::vector<Vertex> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        perm[static_cast<std::size_t>(i)] = i;
    }
    for (int i = n - 1; i > 0; --i) {
        auto j = rng.below(static_cast<std::uint64_t>(i + 1));
        std::swap(perm[static_cast<std::size_t>(i)], perm[j]);
    }
    return perm;
}

// Adds up to `count` uniformly chosen missing edges.
int add_random_chords(Rng& rng, int n, std::vector<Edge>& edges, int count) {
    std::vector<std::vector<bool>> present(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n)));
    for (Edge e : edges) {
        present[static_cast<std::size_t>(e.u)][static_cast<std::size_t>(e.v)] = true;
        present[static_cast<std::size_t>(e.v)][static_cast<std::size_t>(e.u)] = true;
    }
    std::vector<Edge> missing;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (!present[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]) {
                missing.push_back({u, v});
            }
        }
    }
    int placed = 0;
    for (; placed < count && !missing.empty(); ++placed) {
        auto k = rng.below(missing.size());
        edges.push_back(missing[k]);
        missing[k] = missing.back();
        missing.pop_back();
    }
    return placed;
}

GeneratedGraph finish(int n, std::vector<Edge> edges, int placed, int requested) {
    GeneratedGraph out{Graph(n, edges), placed, placed < requested};
    if (!is_two_connected(out.graph)) {
        throw InternalError("generator produced a graph that is not 2-connected");
    }
    return out;
}

} // namespace

GeneratedGraph random_two_connected(int n, int extra_ears, std::uint64_t seed) {
    if (n < 3) {
        throw PreconditionError("random_two_connected needs n >= 3, got " + std::to_string(n));
    }
    Rng rng(seed);
    auto perm = random_permutation(rng, n);
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) {
        Vertex u = perm[static_cast<std::size_t>(i)];
        Vertex v = perm[static_cast<std::size_t>((i + 1) % n)];
        edges.push_back({std::min(u, v), std::max(u, v)});
    }
    int placed = add_random_chords(rng, n, edges, std::max(extra_ears, 0));
    return finish(n, std::move(edges), placed, extra_ears);
}

GeneratedGraph random_ear_graph(int n, int extra_chords, std::uint64_t seed) {
    if (n < 3) {
        throw PreconditionError("random_ear_graph needs n >= 3, got " + std::to_string(n));
    }
    Rng rng(seed);
    // Build on labels 0..n-1 in creation order, relabel at the end.
    const int k = rng.between(3, n);
    std::vector<Edge> edges;
    for (int i = 0; i < k; ++i) {
        edges.push_back({i, (i + 1) % k});
    }
    int placed = k;
    const int longest_ear = std::max(1, n / 3);
    while (placed < n) {
        const int interior = rng.between(1, std::min(n - placed, longest_ear));
        const int u = rng.between(0, placed - 1);
        int v = rng.between(0, placed - 2);
        if (v >= u) {
            ++v;
        }
        Vertex prev = u;
        for (int t = 0; t < interior; ++t) {
            edges.push_back({prev, placed});
            prev = placed++;
        }
        edges.push_back({prev, v});
    }

    auto perm = random_permutation(rng, n);
    for (Edge& e : edges) {
        Vertex u = perm[static_cast<std::size_t>(e.u)];
        Vertex v = perm[static_cast<std::size_t>(e.v)];
        e = {std::min(u, v), std::max(u, v)};
    }
    int chords = add_random_chords(rng, n, edges, std::max(extra_chords, 0));
    return finish(n, std::move(edges), chords, extra_chords);
}

const char* to_string(GeneratorKind kind) {
    switch (kind) {
    case GeneratorKind::chords:
        return "chords";
    case GeneratorKind::ears:
        return "ears";
    case GeneratorKind::mixed:
        return "mixed";
    }
    return "?";
}

void FuzzConfig::validate() const {
    if (count < 1) {
        throw PreconditionError("count must be at least 1");
    }
    if (n_min < 3) {
        throw PreconditionError("n_min must be at least 3, got " + std::to_string(n_min));
    }
    if (n_max < n_min) {
        throw PreconditionError("n_max must be at least n_min");
    }
    if (n_max > kMaxSolverVertices) {
        throw PreconditionError("n_max must be at most " + std::to_string(kMaxSolverVertices));
    }
    if (extra_min < 0 || extra_max < extra_min) {
        throw PreconditionError("invalid extra ear range");
    }
    if (jobs < 1) {
        throw PreconditionError("jobs must be at least 1");
    }
    limits.validate();
}

namespace {

struct Draw {
    std::uint64_t seed;
    GeneratorKind kind;
    Graph graph;
};

Draw draw_instance(int index, std::uint64_t campaign_seed, int n_min, int n_max, int extra_min, int extra_max,
                   GeneratorKind generator) {
    const std::uint64_t seed = mix_seed(campaign_seed, static_cast<std::uint64_t>(index));
    Rng rng(seed);
    const int n = rng.between(n_min, n_max);
    const int extra = rng.between(extra_min, extra_max);
    GeneratorKind kind = generator;
    if (kind == GeneratorKind::mixed) {
        kind = index % 2 == 0 ? GeneratorKind::chords : GeneratorKind::ears;
    }
    const std::uint64_t graph_seed = rng.next();
    GeneratedGraph gen = kind == GeneratorKind::chords ? random_two_connected(n, extra, graph_seed)
                                                       : random_ear_graph(n, extra, graph_seed);
    return {seed, kind, std::move(gen.graph)};
}

FuzzInstance run_instance(const FuzzConfig& config, int index) {
    Draw draw = draw_instance(index, config.seed, config.n_min, config.n_max, config.extra_min, config.extra_max,
                              config.generator);
    FuzzInstance out;
    out.index = index;
    out.seed = draw.seed;
    out.generator = draw.kind;
    out.graph = std::move(draw.graph);

    AnalyzeOptions options;
    options.limits = config.limits;
    options.all_vines = true;
    options.vine_cap = config.vine_cap;
    try {
        out.report = analyze(out.graph, options);
        out.violations = out.report->violations;
        if (out.report->certified && out.graph.vertex_count() <= config.oracle_max_n) {
            out.oracle_checked = true;
            out.oracle_l = longest_path_oracle(out.graph, config.oracle_max_n);
            out.oracle_c = longest_cycle_oracle(out.graph, config.oracle_max_n);
            if (out.oracle_l != out.report->l || out.oracle_c != out.report->c) {
                out.violations.push_back("oracle disagrees: l=" + std::to_string(out.oracle_l) +
                                         " c=" + std::to_string(out.oracle_c));
            }
        }
    } catch (const Error& e) {
        out.violations.push_back(std::string("error: ") + e.what());
    }
    return out;
}

template <typename Fn>
void parallel_for(int count, int jobs, Fn&& fn) {
    if (jobs <= 1 || count <= 1) {
        for (int i = 0; i < count; ++i) {
            fn(i);
        }
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> workers;
    const int threads = std::min(jobs, count);
    workers.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) {
        workers.emplace_back([&] {
            for (int i = next++; i < count; i = next++) {
                fn(i);
            }
        });
    }
    for (auto& w : workers) {
        w.join();
    }
}

} // namespace

FuzzReport fuzz_campaign(const FuzzConfig& config) {
    config.validate();
    const auto started = std::chrono::steady_clock::now();

    FuzzReport report;
    report.config = config;
    report.instances.resize(static_cast<std::size_t>(config.count));
    parallel_for(config.count, config.jobs,
                 [&](int i) { report.instances[static_cast<std::size_t>(i)] = run_instance(config, i); });

    for (const auto& inst : report.instances) {
        if (!inst.violations.empty()) {
            ++report.failures;
        } else if (!inst.report || !inst.report->certified) {
            ++report.uncertified;
        } else {
            ++report.passes;
        }
    }
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return report;
}

OracleCase oracle_compare(const Graph& g, const SolveLimits& limits) {
    OracleCase out;
    out.graph = g;
    PathSolution path = longest_path(g, limits);
    CycleSolution cycle = longest_cycle(g, limits);
    out.bnb_l = static_cast<int>(path.path.length());
    out.bnb_c = static_cast<int>(cycle.cycle.length());
    out.optimal = path.optimal && cycle.optimal;
    out.oracle_l = longest_path_oracle(g, limits.max_vertices);
    out.oracle_c = longest_cycle_oracle(g, limits.max_vertices);
    return out;
}

std::vector<OracleCase> oracle_campaign(int count, int n_min, int n_max, std::uint64_t seed,
                                        const SolveLimits& limits) {
    if (count < 1 || n_min < 3 || n_max < n_min) {
        throw PreconditionError("oracle campaign needs count >= 1 and 3 <= n_min <= n_max");
    }
    if (n_max > limits.max_vertices) {
        throw PreconditionError("n_max exceeds the oracle cap of " + std::to_string(limits.max_vertices));
    }
    std::vector<OracleCase> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        Draw draw = draw_instance(i, seed, n_min, n_max, 0, n_max, GeneratorKind::mixed);
        OracleCase one = oracle_compare(draw.graph, limits);
        one.index = i;
        one.seed = draw.seed;
        out.push_back(std::move(one));
    }
    return out;
}

} // namespace vinebound

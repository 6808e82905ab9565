#include "vinebound/cli.hpp"

#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "vinebound/extremal.hpp"
#include "vinebound/report.hpp"
#include "vinebound/theorem.hpp"

namespace vinebound::cli {

namespace {

struct LimitFlags {
    std::uint64_t node_budget = SolveLimits{}.node_budget;
    double time_budget = SolveLimits{}.time_budget;

    void attach(CLI::App* app) {
        app->add_option("--node-budget", node_budget, "Search-tree node budget per solve")
            ->check(CLI::PositiveNumber);
        app->add_option("--time-budget", time_budget, "Wall-clock budget per solve, seconds")
            ->check(CLI::PositiveNumber);
    }
    SolveLimits limits() const {
        SolveLimits l;
        l.node_budget = node_budget;
        l.time_budget = time_budget;
        return l;
    }
};

// Thrown for unreadable or malformed input; maps to exit code 2.
struct InputError {
    std::string message;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InputError{"cannot read " + path};
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Graph load_graph(const std::string& path) {
    std::string text = read_file(path);
    try {
        return parse_graph(text);
    } catch (const ParseError& e) {
        throw InputError{path + ": " + e.what()};
    }
}

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
    if (path == "-") {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        throw InputError{"cannot write " + path};
    }
    file << text;
}

void write_json(const std::string& path, const report::Json& doc, std::ostream& out) {
    if (!path.empty()) {
        write_text(path, doc.dump(2) + "\n", out);
    }
}

void print_verbose(const BoundReport& r, std::ostream& out) {
    auto seq = [](std::span<const Vertex> vs) {
        std::ostringstream s;
        for (std::size_t i = 0; i < vs.size(); ++i) {
            s << (i ? " " : "") << vs[i];
        }
        return s.str();
    };
    if (r.longest_path) {
        out << "  longest path: " << seq(r.longest_path->vertices()) << '\n';
    }
    if (r.longest_cycle) {
        out << "  longest cycle: " << seq(r.longest_cycle->vertices()) << '\n';
    }
    if (r.vine) {
        for (std::size_t i = 0; i < r.vine->ears.size(); ++i) {
            out << "  L" << i + 1 << ": " << seq(r.vine->ears[i].path.vertices()) << '\n';
        }
    }
    if (r.ineq1) {
        out << "  ineq1: " << r.ineq1->lhs << " <= " << r.ineq1->rhs << '\n';
    }
    for (const auto& q : r.ineq2) {
        out << "  ineq2 j=" << q.j << ": " << q.lhs << " <= " << q.rhs << " (weak " << q.weak_rhs << ")\n";
    }
    out << "  Q0=" << r.q0_len;
    for (std::size_t j = 0; j < r.qj_lens.size(); ++j) {
        out << " Q" << j + 1 << '=' << r.qj_lens[j];
    }
    if (r.qstar_len) {
        out << " Q*=" << *r.qstar_len;
    }
    out << '\n';
    out << "  Dirac theorem: " << (r.dirac.theorem ? "holds" : "FAILS")
        << ", Dirac conjecture: " << (r.dirac.conjecture ? "holds" : "FAILS") << '\n';
}

int exit_for(const BoundReport& r) {
    if (!r.certified) {
        return kResourceLimit;
    }
    return r.violations.empty() ? kOk : kViolation;
}

// ------------------------------------------------------------------ analyze

struct AnalyzeArgs {
    std::string file;
    std::string json;
    bool verbose = false;
    bool all_vines = false;
    std::size_t vine_cap = 200;
    bool exhaustive = false;
    LimitFlags limits;
};

int cmd_analyze(const AnalyzeArgs& a, const std::vector<std::string>& command, std::ostream& out,
                std::ostream& err) {
    Graph g = load_graph(a.file);
    if (auto conn = check_two_connectivity(g); !conn.ok()) {
        throw InputError{a.file + ": not 2-connected: " + conn.describe()};
    }
    AnalyzeOptions options;
    options.limits = a.limits.limits();
    options.all_vines = a.all_vines;
    options.vine_cap = a.vine_cap;
    options.all_longest_paths = a.exhaustive;
    BoundReport r = analyze(g, options);

    out << report::summary_line(r) << '\n';
    if (a.verbose) {
        print_verbose(r, out);
    }
    for (const auto& v : r.violations) {
        err << "violation: " << v << '\n';
    }
    write_json(a.json, report::analyze_document(command, a.file, g, r), out);
    return exit_for(r);
}

// ----------------------------------------------------------------- extremal

struct ExtremalArgs {
    int m = 0;
    int slack = 0;
    std::string out_file;
    bool verify = false;
    std::string json;
    LimitFlags limits;
};

int cmd_extremal(const ExtremalArgs& a, const std::vector<std::string>& command, std::ostream& out,
                 std::ostream& err) {
    ExtremalSpec spec{a.m, a.slack};
    try {
        spec.validate();
    } catch (const PreconditionError& e) {
        throw InputError{e.what()};
    }
    ExtremalInstance inst = extremal_graph(spec);
    std::string text = serialize_graph(inst.graph) + report::extremal_certificate(inst);

    std::optional<BoundReport> verification;
    int code = kOk;
    if (a.verify) {
        AnalyzeOptions options;
        options.limits = a.limits.limits();
        verification = analyze(inst.graph, options);
        const BoundReport& r = *verification;
        text += "# verify: " + report::summary_line(r) + '\n';
        code = exit_for(r);
        if (code == kOk && (r.l != inst.expected_l || r.c != inst.expected_c || !r.tight)) {
            err << "extremal instance is not tight: expected l=" << inst.expected_l << " c=" << inst.expected_c
                << ", solved " << report::summary_line(r) << '\n';
            code = kViolation;
        }
    }
    write_text(a.out_file.empty() ? "-" : a.out_file, text, out);
    write_json(a.json, report::extremal_document(command, inst, verification ? &*verification : nullptr), out);
    return code;
}

// --------------------------------------------------------------------- fuzz

struct FuzzArgs {
    FuzzConfig config;
    std::string generator = "mixed";
    std::string json;
    bool timing = false;
    LimitFlags limits;
};

int cmd_fuzz(FuzzArgs a, const std::vector<std::string>& command, std::ostream& out, std::ostream& err) {
    a.config.generator = a.generator == "chords" ? GeneratorKind::chords
                         : a.generator == "ears" ? GeneratorKind::ears
                                                 : GeneratorKind::mixed;
    a.config.limits = a.limits.limits();
    try {
        a.config.validate();
    } catch (const PreconditionError& e) {
        throw InputError{e.what()};
    }
    FuzzReport fr = fuzz_campaign(a.config);

    for (const auto& inst : fr.instances) {
        out << '#' << inst.index << " gen=" << to_string(inst.generator) << " n=" << inst.graph.vertex_count()
            << " edges=" << inst.graph.edge_count() << ' ';
        if (inst.report) {
            out << report::summary_line(*inst.report) << " vines=" << inst.report->vines_checked;
        }
        out << (inst.passed() ? " PASS" : " FAIL") << '\n';
        for (const auto& v : inst.violations) {
            err << "instance " << inst.index << " (seed " << inst.seed << "): " << v << '\n'
                << serialize_graph(inst.graph);
        }
    }
    out << "summary: instances=" << fr.instances.size() << " passed=" << fr.passes << " failed=" << fr.failures
        << " uncertified=" << fr.uncertified << '\n';
    out << "elapsed: " << std::fixed << std::setprecision(3) << fr.seconds << "s\n";
    out.unsetf(std::ios::floatfield);

    write_json(a.json, report::fuzz_document(command, fr, a.timing), out);
    if (fr.failures > 0) {
        return kViolation;
    }
    return fr.uncertified > 0 ? kResourceLimit : kOk;
}

// ------------------------------------------------------------- oracle-check

struct OracleArgs {
    int count = 1;
    int n_min = 3;
    int n_max = 3;
    std::uint64_t seed = 1;
    std::string graph_file;
    std::string json;
    LimitFlags limits;
};

int cmd_oracle_check(const OracleArgs& a, const std::vector<std::string>& command, std::ostream& out,
                     std::ostream&) {
    SolveLimits limits = a.limits.limits();
    std::vector<OracleCase> cases;
    try {
        if (!a.graph_file.empty()) {
            Graph g = load_graph(a.graph_file);
            if (auto conn = check_two_connectivity(g); !conn.ok()) {
                throw InputError{a.graph_file + ": not 2-connected: " + conn.describe()};
            }
            cases.push_back(oracle_compare(g, limits));
        } else {
            cases = oracle_campaign(a.count, a.n_min, a.n_max, a.seed, limits);
        }
    } catch (const PreconditionError& e) {
        throw InputError{e.what()};
    }

    int disagreements = 0;
    bool budget_hit = false;
    for (const auto& c : cases) {
        out << '#' << c.index << " n=" << c.graph.vertex_count() << " edges=" << c.graph.edge_count()
            << " bnb l=" << c.bnb_l << " c=" << c.bnb_c << " oracle l=" << c.oracle_l << " c=" << c.oracle_c
            << (c.agrees() ? " AGREE" : " DISAGREE") << '\n';
        budget_hit = budget_hit || !c.optimal;
        disagreements += c.agrees() ? 0 : 1;
    }
    out << "summary: instances=" << cases.size() << " disagreements=" << disagreements << '\n';
    write_json(a.json, report::oracle_document(command, cases), out);
    if (budget_hit) {
        return kResourceLimit;
    }
    return disagreements == 0 ? kOk : kViolation;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact circumference / longest path / vine bound verification"};
    app.name("vinebound");
    app.require_subcommand(1);

    AnalyzeArgs analyze_args;
    auto* analyze_cmd = app.add_subcommand("analyze", "Analyze one graph file");
    analyze_cmd->add_option("file", analyze_args.file, "Graph file")->required();
    analyze_cmd->add_option("--json", analyze_args.json, "Write the JSON report to PATH (- for stdout)");
    analyze_cmd->add_flag("--verbose", analyze_args.verbose, "Dump witnesses and per-check values");
    analyze_cmd->add_flag("--all-vines", analyze_args.all_vines, "Check every vine on the longest path");
    analyze_cmd->add_option("--vine-cap", analyze_args.vine_cap, "Vines per path for --all-vines");
    analyze_cmd->add_flag("--exhaustive", analyze_args.exhaustive, "Check every longest path (n <= 10)");
    analyze_args.limits.attach(analyze_cmd);

    ExtremalArgs extremal_args;
    auto* extremal_cmd = app.add_subcommand("extremal", "Emit a tight extremal graph");
    extremal_cmd->add_option("--m", extremal_args.m, "Vine length (>= 2)")->required();
    extremal_cmd->add_option("--slack", extremal_args.slack, "Even slack y >= 0")->required();
    extremal_cmd->add_option("--out", extremal_args.out_file, "Write the graph file here instead of stdout");
    extremal_cmd->add_flag("--verify", extremal_args.verify, "Solve the result exactly and require tightness");
    extremal_cmd->add_option("--json", extremal_args.json, "Write the JSON certificate to PATH (- for stdout)");
    extremal_args.limits.attach(extremal_cmd);

    FuzzArgs fuzz_args;
    auto* fuzz_cmd = app.add_subcommand("fuzz", "Run a seeded fuzz campaign");
    fuzz_cmd->add_option("--count", fuzz_args.config.count, "Number of instances")->required();
    fuzz_cmd->add_option("--nmin", fuzz_args.config.n_min, "Minimum vertex count")->required();
    fuzz_cmd->add_option("--nmax", fuzz_args.config.n_max, "Maximum vertex count")->required();
    fuzz_cmd->add_option("--seed", fuzz_args.config.seed, "Campaign seed");
    fuzz_cmd->add_option("--jobs", fuzz_args.config.jobs, "Worker threads");
    fuzz_cmd->add_option("--extra-min", fuzz_args.config.extra_min, "Minimum extra ears per instance");
    fuzz_cmd->add_option("--extra-max", fuzz_args.config.extra_max, "Maximum extra ears per instance");
    fuzz_cmd->add_option("--generator", fuzz_args.generator, "chords, ears or mixed")
        ->check(CLI::IsMember({"chords", "ears", "mixed"}));
    fuzz_cmd->add_option("--vine-cap", fuzz_args.config.vine_cap, "Vines checked per instance");
    fuzz_cmd->add_option("--json", fuzz_args.json, "Write the JSON report to PATH (- for stdout)");
    fuzz_cmd->add_flag("--timing", fuzz_args.timing, "Include wall-clock timing in the JSON report");
    fuzz_args.limits.attach(fuzz_cmd);

    OracleArgs oracle_args;
    auto* oracle_cmd = app.add_subcommand("oracle-check", "Cross-check branch and bound against subset DP");
    oracle_cmd->add_option("--count", oracle_args.count, "Number of seeded graphs");
    oracle_cmd->add_option("--nmin", oracle_args.n_min, "Minimum vertex count");
    oracle_cmd->add_option("--nmax", oracle_args.n_max, "Maximum vertex count");
    oracle_cmd->add_option("--seed", oracle_args.seed, "Campaign seed");
    oracle_cmd->add_option("--graph", oracle_args.graph_file, "Check one graph file instead");
    oracle_cmd->add_option("--json", oracle_args.json, "Write the JSON report to PATH (- for stdout)");
    oracle_args.limits.attach(oracle_cmd);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kInputError;
    }

    std::vector<std::string> command(args.begin(), args.end());
    try {
        if (*analyze_cmd) {
            return cmd_analyze(analyze_args, command, out, err);
        }
        if (*extremal_cmd) {
            return cmd_extremal(extremal_args, command, out, err);
        }
        if (*fuzz_cmd) {
            return cmd_fuzz(fuzz_args, command, out, err);
        }
        if (*oracle_cmd) {
            return cmd_oracle_check(oracle_args, command, out, err);
        }
    } catch (const InputError& e) {
        err << "error: " << e.message << '\n';
        return kInputError;
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const ResourceLimitError& e) {
        err << "resource limit: " << e.what() << '\n';
        return kResourceLimit;
    }
    return kInputError;
}

} // namespace vinebound::cli

#include "vinebound/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace vinebound::report {

namespace {

std::optional<long long> exact_sqrt(long long value) {
    if (value < 0) {
        return std::nullopt;
    }
    auto root = static_cast<long long>(std::llround(std::sqrt(static_cast<double>(value))));
    for (long long r = std::max(0LL, root - 1); r <= root + 1; ++r) {
        if (r * r == value) {
            return r;
        }
    }
    return std::nullopt;
}

} // namespace

std::string format_bound(const BoundReport& r) {
    if (!r.bound) {
        return "n/a";
    }
    if (auto root = exact_sqrt(circumference_bound_squared(r.l, r.slack, r.parity))) {
        return std::to_string(*root);
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", *r.bound);
    return buf;
}

std::string summary_line(const BoundReport& r) {
    std::ostringstream out;
    out << "l=" << r.l << " c=" << r.c;
    if (!r.certified) {
        out << " UNCERTIFIED (" << r.uncertified_reason << ")";
        return out.str();
    }
    out << " m=" << r.m << " y=" << r.slack << " bound=" << format_bound(r) << ' ';
    out << (r.tight ? "TIGHT" : r.bound_met ? "MET" : "VIOLATED");
    if (!r.violations.empty()) {
        out << " violations=" << r.violations.size();
    }
    return out.str();
}

Json vertices_json(std::span<const Vertex> vs) {
    Json out = Json::array();
    for (Vertex v : vs) {
        out.push_back(v);
    }
    return out;
}

Json vine_json(const Vine& v) {
    Json ears = Json::array();
    for (const Ear& ear : v.ears) {
        ears.push_back(vertices_json(ear.path.vertices()));
    }
    return Json{{"ears", ears}};
}

Json instance_json(const Graph& g, const std::string& source) {
    Json out;
    out["source"] = source;
    out["n"] = g.vertex_count();
    out["edge_count"] = g.edge_count();
    out["graph"] = serialize_graph(g);
    return out;
}

Json results_json(const BoundReport& r) {
    Json out;
    out["l"] = r.l;
    out["c"] = r.c;
    if (!r.certified) {
        out["certified"] = false;
        out["uncertified_reason"] = r.uncertified_reason;
        return out;
    }
    out["certified"] = true;
    out["m"] = r.m;
    out["slack"] = r.slack;
    out["parity"] = to_string(r.parity);
    out["bound"] = r.bound ? Json(*r.bound) : Json(nullptr);
    out["bound_met"] = r.bound_met;
    out["tight"] = r.tight;
    if (r.ineq1) {
        out["ineq1"] = {{"lhs", r.ineq1->lhs}, {"rhs", r.ineq1->rhs}, {"holds", r.ineq1->holds()},
                        {"tight", r.ineq1->tight()}};
    } else {
        out["ineq1"] = nullptr;
    }
    Json ineq2 = Json::array();
    for (const auto& q : r.ineq2) {
        ineq2.push_back({{"j", q.j},
                         {"lhs", q.lhs},
                         {"rhs", q.rhs},
                         {"weak_rhs", q.weak_rhs},
                         {"holds", q.holds()},
                         {"weak_holds", q.weak_holds()}});
    }
    out["ineq2"] = ineq2;
    out["q0_len"] = r.q0_len;
    out["qj_lens"] = r.qj_lens;
    if (r.qstar_len) {
        out["qstar_len"] = *r.qstar_len;
    }
    out["dirac"] = {{"theorem_a", r.dirac.theorem}, {"conjecture_a", r.dirac.conjecture}};
    out["vines_checked"] = r.vines_checked;
    out["vines_truncated"] = r.vines_truncated;
    out["paths_checked"] = r.paths_checked;
    out["violations"] = r.violations;
    return out;
}

Json witnesses_json(const BoundReport& r) {
    Json out;
    out["longest_path"] = r.longest_path ? vertices_json(r.longest_path->vertices()) : Json::array();
    out["longest_cycle"] = r.longest_cycle ? vertices_json(r.longest_cycle->vertices()) : Json::array();
    out["vine"] = r.vine ? vine_json(*r.vine) : Json{{"ears", Json::array()}};
    return out;
}

namespace {

Json header(const std::vector<std::string>& command) {
    Json out;
    out["schema_version"] = kSchemaVersion;
    out["command"] = command;
    return out;
}

} // namespace

Json analyze_document(const std::vector<std::string>& command, const std::string& source, const Graph& g,
                      const BoundReport& r) {
    Json out = header(command);
    out["instance"] = instance_json(g, source);
    out["results"] = results_json(r);
    out["witnesses"] = witnesses_json(r);
    out["passed"] = r.passed();
    return out;
}

Json extremal_document(const std::vector<std::string>& command, const ExtremalInstance& inst,
                       const BoundReport* verification) {
    Json out = header(command);
    out["instance"] = instance_json(inst.graph, "extremal");
    out["certificate"] = {{"m", inst.spec.m},
                          {"slack", inst.spec.slack},
                          {"spine", vertices_json(inst.spine.vertices())},
                          {"vine", vine_json(inst.vine)},
                          {"a", inst.a},
                          {"b", inst.b},
                          {"expected", {{"l", inst.expected_l}, {"c", inst.expected_c},
                                        {"bound_squared", inst.bound_squared}}}};
    if (verification) {
        out["results"] = results_json(*verification);
        out["witnesses"] = witnesses_json(*verification);
    }
    return out;
}

Json fuzz_document(const std::vector<std::string>& command, const FuzzReport& fr, bool with_timing) {
    Json out = header(command);
    const FuzzConfig& cfg = fr.config;
    out["config"] = {{"count", cfg.count},
                     {"n_min", cfg.n_min},
                     {"n_max", cfg.n_max},
                     {"extra_min", cfg.extra_min},
                     {"extra_max", cfg.extra_max},
                     {"seed", cfg.seed},
                     {"generator", to_string(cfg.generator)},
                     {"vine_cap", cfg.vine_cap},
                     {"oracle_max_n", cfg.oracle_max_n}};
    Json instances = Json::array();
    for (const auto& inst : fr.instances) {
        Json one;
        one["index"] = inst.index;
        one["seed"] = inst.seed;
        one["generator"] = to_string(inst.generator);
        one["instance"] = instance_json(inst.graph, "generated");
        if (inst.report) {
            one["results"] = results_json(*inst.report);
            one["witnesses"] = witnesses_json(*inst.report);
        }
        if (inst.oracle_checked) {
            one["oracle"] = {{"l", inst.oracle_l}, {"c", inst.oracle_c}};
        }
        one["violations"] = inst.violations;
        one["passed"] = inst.passed();
        instances.push_back(std::move(one));
    }
    out["instances"] = std::move(instances);
    out["summary"] = {{"count", fr.instances.size()},
                      {"passes", fr.passes},
                      {"failures", fr.failures},
                      {"uncertified", fr.uncertified}};
    if (with_timing) {
        out["timing"] = {{"seconds", fr.seconds}};
    }
    return out;
}

Json oracle_document(const std::vector<std::string>& command, const std::vector<OracleCase>& cases) {
    Json out = header(command);
    Json list = Json::array();
    int agreements = 0;
    for (const auto& c : cases) {
        agreements += c.agrees() ? 1 : 0;
        list.push_back({{"index", c.index},
                        {"seed", c.seed},
                        {"instance", instance_json(c.graph, "generated")},
                        {"bnb", {{"l", c.bnb_l}, {"c", c.bnb_c}, {"optimal", c.optimal}}},
                        {"oracle", {{"l", c.oracle_l}, {"c", c.oracle_c}}},
                        {"agrees", c.agrees()}});
    }
    out["instances"] = std::move(list);
    out["summary"] = {{"count", cases.size()},
                      {"agreements", agreements},
                      {"disagreements", static_cast<int>(cases.size()) - agreements}};
    return out;
}

std::string extremal_certificate(const ExtremalInstance& inst) {
    auto join = [](const auto& values) {
        std::ostringstream s;
        bool first = true;
        for (auto v : values) {
            s << (first ? "" : " ") << v;
            first = false;
        }
        return s.str();
    };
    std::ostringstream out;
    out << "# extremal m=" << inst.spec.m << " slack=" << inst.spec.slack << '\n';
    out << "# spine: " << join(inst.spine.vertices()) << '\n';
    out << "# vine:";
    for (const Ear& ear : inst.vine.ears) {
        out << ' ' << ear.x_attach() << '-' << ear.y_attach();
    }
    out << '\n';
    out << "# a: " << join(inst.a) << '\n';
    out << "# b: " << join(inst.b) << '\n';
    auto root = exact_sqrt(inst.bound_squared);
    out << "# expected l=" << inst.expected_l << " c=" << inst.expected_c << " bound="
        << (root ? std::to_string(*root) : "sqrt(" + std::to_string(inst.bound_squared) + ")") << '\n';
    return out.str();
}

} // namespace vinebound::report
